"""Batch runner: resolve groups, run the selected checks, serialize reports.

Exit codes: 0 all confirmed, 2 some hypotheses unmet (reported, not fatal),
1 any FALSIFIED verdict or MethodDisagreement (fatal: the theorems are
proved, so this means the implementation is broken), 3 input or size errors.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .catalog import builtin_names, get_builtin
from .criteria import (
    QUANTIFIER_UNIVERSAL,
    replacement_exhaustive_scan,
    verify_glauberman_thompson,
    verify_theorem_A,
    verify_theorem_B,
    verify_zj_normality,
)
from .errors import (
    BatchInputError,
    FusionToolError,
    LatticeTooLarge,
    MethodDisagreement,
    NotAPGroup,
    PropertyFailure,
    SizeLimitExceeded,
)
from .fusion import (
    FusionContext,
    is_nilpotent_fusion,
    morphism_scan_nilpotent,
    frobenius_quotient_nilpotent,
    strongly_closed_subgroups,
)
from .groupfile import parse_group_file
from .groups import DEFAULT_ELEMENT_LIMIT, Group, odd_prime_divisors, p_part, p_prime_generated, sylow_subgroup
from .lattice import build_family, set_lattice_bound_override
from .reports import (
    VERDICT_CONFIRMED,
    VERDICT_FALSIFIED,
    VERDICT_UNMET,
    HypothesisReport,
    VerificationReport,
)

CHECK_NAMES = ("frobenius", "gt", "theorem-a", "theorem-b", "zj", "replacement")

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_UNMET = 2
EXIT_INPUT = 3


@dataclass
class BatchSpec:
    groups: tuple[str, ...]
    primes: tuple[int, ...] | str = "all-odd"
    family: str = "max-abelian"
    checks: tuple[str, ...] = CHECK_NAMES
    output: str | None = None
    quantifier: str = QUANTIFIER_UNIVERSAL
    limit_order: int = DEFAULT_ELEMENT_LIMIT
    limit_lattice: int | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "BatchSpec":
        if not isinstance(data, dict):
            raise BatchInputError("batch spec must be a JSON object")
        known = {
            "groups",
            "primes",
            "family",
            "checks",
            "output",
            "quantifier",
            "limit_order",
            "limit_lattice",
        }
        unknown = set(data) - known
        if unknown:
            raise BatchInputError(f"unknown batch spec keys: {sorted(unknown)}")
        groups = data.get("groups")
        if not groups or not isinstance(groups, list):
            raise BatchInputError("batch spec needs a nonempty 'groups' list")
        primes = data.get("primes", "all-odd")
        if primes != "all-odd":
            if not isinstance(primes, list) or not all(
                isinstance(p, int) for p in primes
            ):
                raise BatchInputError("'primes' must be \"all-odd\" or a list of ints")
            for p in primes:
                if p < 3 or p % 2 == 0:
                    raise BatchInputError(
                        f"theorem checks require odd primes, got {p}"
                    )
            primes = tuple(sorted(set(primes)))
        checks = tuple(data.get("checks", CHECK_NAMES))
        for c in checks:
            if c not in CHECK_NAMES:
                raise BatchInputError(f"unknown check {c!r}")
        return cls(
            groups=tuple(str(g) for g in groups),
            primes=primes,
            family=str(data.get("family", "max-abelian")),
            checks=checks,
            output=data.get("output"),
            quantifier=str(data.get("quantifier", QUANTIFIER_UNIVERSAL)),
            limit_order=int(data.get("limit_order", DEFAULT_ELEMENT_LIMIT)),
            limit_lattice=data.get("limit_lattice"),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "BatchSpec":
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise BatchInputError(f"cannot read batch spec: {exc}") from None
        except json.JSONDecodeError as exc:
            raise BatchInputError(f"batch spec is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "groups": list(self.groups),
            "primes": self.primes if self.primes == "all-odd" else list(self.primes),
            "family": self.family,
            "checks": list(self.checks),
            "output": self.output,
            "quantifier": self.quantifier,
            "limit_order": self.limit_order,
            "limit_lattice": self.limit_lattice,
        }


@dataclass
class BatchResult:
    document: dict
    exit_code: int
    reports: list[VerificationReport] = field(default_factory=list)


def resolve_group(name: str, limit: int = DEFAULT_ELEMENT_LIMIT) -> Group:
    """A catalog name, or a path to a group file."""
    try:
        return get_builtin(name).build(limit=limit)
    except KeyError:
        pass
    path = Path(name)
    if path.exists():
        return parse_group_file(path.read_text()).build(limit=limit)
    raise BatchInputError(
        f"unknown group {name!r} (not a catalog name or readable file)"
    )


def _frobenius_report(G: Group, p: int) -> VerificationReport:
    """Triple agreement: morphism scan, Frobenius quotient, p'-oracle."""
    t0 = time.perf_counter()
    ctx = FusionContext(G, p)
    by_scan = morphism_scan_nilpotent(ctx)
    by_quotient = frobenius_quotient_nilpotent(ctx)
    by_oracle = p_prime_generated(G, p).order == G.order // p_part(G.order, p)
    if not (by_scan == by_quotient == by_oracle):
        raise MethodDisagreement(
            f"nilpotency methods disagree on ({G.name}, {p}): "
            f"scan={by_scan} quotient={by_quotient} oracle={by_oracle}"
        )
    # also exercises the cached dual-checked entry point
    value = is_nilpotent_fusion(ctx)
    hyp = HypothesisReport(p_odd=(p % 2 == 1), p_divides_order=(G.order % p == 0))
    return VerificationReport(
        theorem="frobenius-agreement",
        group=G.name or "unnamed",
        prime=p,
        hypotheses=hyp,
        lhs=value,
        rhs=by_oracle,
        verdict=VERDICT_CONFIRMED,
        details={
            "methods": {
                "morphism_scan": by_scan,
                "frobenius_quotient": by_quotient,
                "p_prime_oracle": by_oracle,
            },
            "p_nilpotent": value,
        },
        timings={"total": time.perf_counter() - t0},
    )


def _replacement_report(G: Group, p: int) -> VerificationReport:
    t0 = time.perf_counter()
    P = sylow_subgroup(G, p)
    summary = replacement_exhaustive_scan(P.group)
    hyp = HypothesisReport(p_odd=(p % 2 == 1), p_divides_order=(G.order % p == 0))
    return VerificationReport(
        theorem="replacement-scan",
        group=G.name or "unnamed",
        prime=p,
        hypotheses=hyp,
        lhs=None,
        rhs=None,
        verdict=VERDICT_CONFIRMED,
        details=summary,
        timings={"total": time.perf_counter() - t0},
    )


def _run_check(check: str, G: Group, p: int, spec: BatchSpec) -> list[VerificationReport]:
    if check == "frobenius":
        return [_frobenius_report(G, p)]
    if check == "gt":
        return [verify_glauberman_thompson(G, p)]
    if check == "replacement":
        return [_replacement_report(G, p)]
    ctx = FusionContext(G, p)
    fam = build_family(ctx.P.group, spec.family)
    if check == "theorem-a":
        return [verify_theorem_A(ctx, fam)]
    if check == "theorem-b":
        return [
            verify_theorem_B(ctx, fam, D, quantifier=spec.quantifier)
            for D in strongly_closed_subgroups(ctx)
        ]
    if check == "zj":
        out = [verify_zj_normality(G, p, fam, None, quantifier=spec.quantifier)]
        out.extend(
            verify_zj_normality(G, p, fam, D, quantifier=spec.quantifier)
            for D in strongly_closed_subgroups(ctx)
        )
        return out
    raise BatchInputError(f"unknown check {check!r}")


# Indirection so tests can inject faults without touching real verifiers.
CHECK_RUNNER = _run_check


def run_batch(spec: BatchSpec) -> BatchResult:
    started = time.perf_counter()
    reports: list[VerificationReport] = []
    errors: list[dict] = []
    skipped: list[dict] = []
    exit_code = EXIT_OK
    fatal = False

    groups: list[Group] = []
    for name in spec.groups:
        try:
            groups.append(resolve_group(name, limit=spec.limit_order))
        except FusionToolError as exc:
            errors.append({"group": name, "error": str(exc)})
    if errors:
        doc = _document(spec, reports, errors, skipped, started)
        return BatchResult(document=doc, exit_code=EXIT_INPUT, reports=reports)

    set_lattice_bound_override(spec.limit_lattice)
    try:
        for G in groups:
            if fatal:
                break
            if spec.primes == "all-odd":
                primes = odd_prime_divisors(G.order)
                if not primes:
                    skipped.append(
                        {"group": G.name, "reason": "no odd prime divides the order"}
                    )
                    continue
            else:
                primes = spec.primes
            for p in primes:
                if fatal:
                    break
                if G.order % p != 0:
                    skipped.append(
                        {
                            "group": G.name,
                            "prime": p,
                            "reason": "prime does not divide the order",
                        }
                    )
                    continue
                for check in spec.checks:
                    try:
                        batch_reports = CHECK_RUNNER(check, G, p, spec)
                    except (MethodDisagreement, PropertyFailure) as exc:
                        errors.append(
                            {
                                "group": G.name,
                                "prime": p,
                                "check": check,
                                "fatal": True,
                                "error": str(exc),
                            }
                        )
                        exit_code = EXIT_FALSIFIED
                        fatal = True
                        break
                    except (LatticeTooLarge, SizeLimitExceeded, NotAPGroup) as exc:
                        errors.append(
                            {
                                "group": G.name,
                                "prime": p,
                                "check": check,
                                "fatal": False,
                                "error": str(exc),
                            }
                        )
                        exit_code = max(exit_code, EXIT_INPUT)
                        continue
                    reports.extend(batch_reports)
                    for rep in batch_reports:
                        if rep.verdict == VERDICT_FALSIFIED:
                            exit_code = EXIT_FALSIFIED
                            fatal = True
                            break
                        if rep.verdict == VERDICT_UNMET and exit_code == EXIT_OK:
                            exit_code = EXIT_UNMET
                    if fatal:
                        break
    finally:
        set_lattice_bound_override(None)

    doc = _document(spec, reports, errors, skipped, started)
    output = spec.output
    if output:
        Path(output).write_text(json.dumps(doc, indent=2) + "\n")
    return BatchResult(document=doc, exit_code=exit_code, reports=reports)


def _document(spec, reports, errors, skipped, started) -> dict:
    summary = {
        "confirmed": sum(1 for r in reports if r.verdict == VERDICT_CONFIRMED),
        "hypotheses_unmet": sum(1 for r in reports if r.verdict == VERDICT_UNMET),
        "falsified": sum(1 for r in reports if r.verdict == VERDICT_FALSIFIED),
        "errors": len(errors),
        "skipped": len(skipped),
    }
    return {
        "tool_version": __version__,
        "generated_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "spec": spec.to_dict(),
        "reports": [r.to_dict() for r in reports],
        "errors": errors,
        "skipped": skipped,
        "summary": summary,
    }


def names_in_catalog() -> tuple[str, ...]:
    return builtin_names()
