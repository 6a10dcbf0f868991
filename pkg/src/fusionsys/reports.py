"""Structured outcomes of theorem checks.

Serialized report documents are deterministic: dict insertion order is fixed,
witnesses are rendered as canonical strings, and timings are kept in memory
only (the single volatile key in a batch document is its timestamp).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .groups import Permutation, Subgroup

VERDICT_CONFIRMED = "confirmed"
VERDICT_UNMET = "hypotheses-unmet"
VERDICT_FALSIFIED = "FALSIFIED"


def describe_subgroup(H: Subgroup) -> str:
    return H.describe()


def describe_witness(witness: Any) -> Any:
    """Render witness tuples of subgroups/permutations as plain strings."""
    if witness is None:
        return None
    if isinstance(witness, Subgroup):
        return describe_subgroup(witness)
    if isinstance(witness, Permutation):
        return witness.cycle_string()
    if isinstance(witness, (tuple, list)):
        return [describe_witness(w) for w in witness]
    return str(witness)


@dataclass
class HypothesisReport:
    """Status of every hypothesis a verifier examined (None = not applicable)."""

    p_odd: bool | None = None
    p_divides_order: bool | None = None
    family_abelian: bool | None = None
    condition_i: bool | None = None
    condition_i_witness: Any = None
    condition_ii_variant: str | None = None
    condition_ii: bool | None = None
    condition_ii_witness: Any = None
    strongly_closed_d: bool | None = None
    model_condition: bool | None = None
    p_stable: bool | None = None

    def met(self) -> bool:
        checks = (
            self.p_odd,
            self.p_divides_order,
            self.family_abelian,
            self.condition_i,
            self.condition_ii,
            self.strongly_closed_d,
            self.model_condition,
            self.p_stable,
        )
        return all(c is not False for c in checks)

    def to_dict(self) -> dict:
        return {
            "p_odd": self.p_odd,
            "p_divides_order": self.p_divides_order,
            "family_abelian": self.family_abelian,
            "condition_i": self.condition_i,
            "condition_i_witness": describe_witness(self.condition_i_witness),
            "condition_ii_variant": self.condition_ii_variant,
            "condition_ii": self.condition_ii,
            "condition_ii_witness": describe_witness(self.condition_ii_witness),
            "strongly_closed_d": self.strongly_closed_d,
            "model_condition": self.model_condition,
            "p_stable": self.p_stable,
            "met": self.met(),
        }


@dataclass
class VerificationReport:
    """Outcome of one theorem check on one (group, prime) instance."""

    theorem: str
    group: str
    prime: int
    hypotheses: HypothesisReport
    lhs: bool | None
    rhs: bool | None
    verdict: str
    details: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        doc = {
            "theorem": self.theorem,
            "group": self.group,
            "prime": self.prime,
            "hypotheses": self.hypotheses.to_dict(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "details": self.details,
        }
        if include_timings:
            doc["timings"] = self.timings
        return doc

    def __repr__(self) -> str:
        return (
            f"<report {self.theorem} on ({self.group}, p={self.prime}): "
            f"{self.verdict}>"
        )


def check_report_invariants(report: VerificationReport) -> None:
    """Raise AssertionError when a report violates its own contract."""
    if report.verdict == VERDICT_CONFIRMED:
        assert report.hypotheses.met(), "confirmed verdict with unmet hypotheses"
        if report.lhs is not None and report.rhs is not None:
            assert report.lhs == report.rhs, "confirmed verdict with lhs != rhs"
    if report.verdict == VERDICT_UNMET:
        assert not report.hypotheses.met(), "unmet verdict with met hypotheses"
