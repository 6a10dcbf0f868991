"""The line-oriented group file format.

    # comment
    name S4
    degree 4
    gen (1 2 3 4)
    gen (1 2)

Points are 1-based, fixed points are omitted, cycles are whitespace
separated, and an identity generator is written `gen ()`. The degree line
must precede every gen line so points can be range-checked. Serialization is
canonical (cycles start at their least point and are sorted by it), so
parse -> serialize -> parse is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidCycle, ParseError
from .groups import DEFAULT_ELEMENT_LIMIT, Group
from .perm import Permutation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a cycle expression like `(1 2 3) (4 5)` into a permutation."""
    stripped = text.strip()
    if not stripped:
        raise InvalidCycle("empty cycle expression")
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise InvalidCycle(f"unexpected text in cycles: {consumed!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue  # () is the identity cycle
        try:
            points = [int(tok) for tok in body.split()]
        except ValueError:
            raise InvalidCycle(f"non-integer point in cycle ({body})") from None
        cycles.append(points)
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    return p.cycle_string(sep=" ")


@dataclass(frozen=True)
class GroupFile:
    """A named generating set; the interchange record for all group input."""

    name: str | None
    degree: int
    generators: tuple[Permutation, ...]

    def to_text(self) -> str:
        lines = []
        if self.name is not None:
            lines.append(f"name {self.name}")
        lines.append(f"degree {self.degree}")
        for g in self.generators:
            lines.append(f"gen {format_cycles(g)}")
        return "\n".join(lines) + "\n"

    def build(self, limit: int = DEFAULT_ELEMENT_LIMIT) -> Group:
        return Group.generate(
            self.generators, degree=self.degree, limit=limit, name=self.name
        )


def parse_group_file(text: str) -> GroupFile:
    """Parse the format above; errors carry 1-based line numbers."""
    name: str | None = None
    degree: int | None = None
    generators: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "name":
            if name is not None:
                raise ParseError("duplicate name line", lineno)
            if not rest:
                raise ParseError("name line needs a value", lineno)
            name = rest
        elif keyword == "degree":
            if degree is not None:
                raise ParseError("duplicate degree line", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif keyword == "gen":
            if degree is None:
                raise ParseError("gen line before degree line", lineno)
            try:
                generators.append(parse_cycles(rest, degree))
            except InvalidCycle as exc:
                raise InvalidCycle(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if degree is None:
        raise ParseError("missing degree line")
    return GroupFile(name=name, degree=degree, generators=tuple(generators))


def serialize_group_file(gf: GroupFile) -> str:
    return gf.to_text()
