"""Exception types shared across the package."""


class FusionToolError(Exception):
    """Base class for every error raised by fusionsys."""


class DegreeMismatch(FusionToolError):
    """Permutations of different degrees were combined."""


class SizeLimitExceeded(FusionToolError):
    """A closure grew past the configured element limit."""


class NotInAmbient(FusionToolError):
    """An element or subgroup does not lie in the required ambient group."""


class AmbientMismatch(FusionToolError):
    """Two subgroups with different ambient groups were combined."""


class NotAPGroup(FusionToolError):
    """A prime-power group was required."""


class LatticeTooLarge(FusionToolError):
    """Subgroup enumeration refused: the group exceeds the lattice bound."""


class NotInP(FusionToolError):
    """A subgroup handed to a fusion predicate is not contained in P."""


class DoesNotNormalize(FusionToolError):
    """The acting group fails to normalize the target subgroup."""


class NotNormalInP(FusionToolError):
    """A normalizer subsystem was requested at a non-normal subgroup of P."""


class PreconditionViolated(FusionToolError):
    """Caller violated a documented precondition."""


class MethodDisagreement(FusionToolError):
    """Two independent computations of the same fact disagree.

    This always signals an implementation bug and must never be swallowed.
    """


class PropertyFailure(FusionToolError):
    """A property guaranteed by a proved theorem failed to hold (a bug)."""


class ParseError(FusionToolError):
    """Malformed group file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class InvalidCycle(ParseError):
    """A cycle uses a point out of range or repeats a point."""


class BatchInputError(FusionToolError):
    """A batch spec names unknown groups or contains invalid fields."""
