"""Command-line surface.

Exit codes follow the batch contract: 0 confirmed, 2 hypotheses unmet,
1 falsified/method disagreement, 3 input or size errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .batch import (
    EXIT_FALSIFIED,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_UNMET,
    BatchSpec,
    resolve_group,
    run_batch,
)
from .catalog import builtin_catalog
from .criteria import (
    QUANTIFIER_EXISTENTIAL,
    QUANTIFIER_UNIVERSAL,
    is_p_nilpotent,
    is_p_stable,
    replacement_exhaustive_scan,
    verify_glauberman_thompson,
    verify_theorem_A,
    verify_theorem_B,
    verify_zj_normality,
)
from .errors import (
    FusionToolError,
    MethodDisagreement,
    PropertyFailure,
)
from .fusion import FusionContext, is_nilpotent_fusion, strongly_closed_subgroups
from .groupfile import parse_cycles
from .groups import DEFAULT_ELEMENT_LIMIT, Subgroup, odd_prime_divisors, subgroup_generated, sylow_subgroup
from .lattice import (
    FAMILY_KINDS,
    KIND_MAX_ABELIAN,
    build_family,
    family_join,
    family_meet,
    set_lattice_bound_override,
)
from .reports import VERDICT_CONFIRMED, VERDICT_FALSIFIED, VERDICT_UNMET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionsys",
        description="Fusion systems of finite groups: nilpotency criteria, "
        "ZJ normality and replacement checks with brute-force oracles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--limit-order",
        type=int,
        default=DEFAULT_ELEMENT_LIMIT,
        help="element limit for group closure",
    )
    parser.add_argument(
        "--limit-lattice",
        type=int,
        default=None,
        help="order bound for subgroup-lattice enumeration",
    )
    parser.add_argument(
        "--report", type=str, default=None, help="write a JSON report document here"
    )
    parser.add_argument(
        "--strict-quantifier",
        choices=(QUANTIFIER_UNIVERSAL, QUANTIFIER_EXISTENTIAL),
        default=QUANTIFIER_UNIVERSAL,
        help="reading of the replacement-closure condition over A",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_prime=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("group", help="catalog name or group file path")
        if needs_prime:
            sp.add_argument("-p", "--prime", type=int, required=True)
        return sp

    add("info", "order, degree, generators and prime structure", needs_prime=False)
    add("nilpotency", "triple-checked p-nilpotency / fusion nilpotency")
    sp = add("stability", "p-stability (odd p)")
    sp.add_argument("--full", action="store_true", help="skip the abelian-Sylow-2 shortcut")
    sp = add("family", "show an abelian family over the Sylow p-subgroup")
    sp.add_argument("--kind", choices=FAMILY_KINDS[:-1], default=KIND_MAX_ABELIAN)
    sp = add("check-a", "verify the first nilpotency criterion")
    sp.add_argument("--family", dest="family", default=KIND_MAX_ABELIAN)
    sp = add("check-b", "verify the strongly-closed nilpotency criterion")
    sp.add_argument("--closed", default="auto", help="D: auto, P, 1, or cycles")
    sp.add_argument("--family", dest="family", default=KIND_MAX_ABELIAN)
    sp = add("zj", "verify normality of the family intersection")
    sp.add_argument("--closed", default=None, help="optional D: auto, P, 1, or cycles")
    sp.add_argument("--family", dest="family", default=KIND_MAX_ABELIAN)
    add("gt", "Glauberman-Thompson p-nilpotency equivalence")
    add("replacement", "exhaustive replacement scan over the Sylow p-subgroup")
    sp = sub.add_parser("batch", help="run a batch spec file")
    sp.add_argument("--spec", required=True, help="path to a JSON batch spec")
    sub.add_parser("catalog", help="list built-in groups")
    return parser


def _verdict_exit(verdicts: list[str]) -> int:
    if any(v == VERDICT_FALSIFIED for v in verdicts):
        return EXIT_FALSIFIED
    if any(v == VERDICT_UNMET for v in verdicts):
        return EXIT_UNMET
    return EXIT_OK


def _write_report(args, reports: list) -> None:
    if not args.report:
        return
    doc = {
        "tool_version": __version__,
        "generated_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "reports": [r.to_dict() for r in reports],
    }
    Path(args.report).write_text(json.dumps(doc, indent=2) + "\n")


def _resolve_closed(spec: str, ctx: FusionContext) -> list[Subgroup]:
    if spec == "auto":
        return list(strongly_closed_subgroups(ctx))
    P = ctx.P.group
    if spec in ("P", "p"):
        return [Subgroup(P, P)]
    if spec in ("1", "trivial"):
        return [subgroup_generated(P, ())]
    perms = [parse_cycles(tok, P.degree) for tok in spec.split(";")]
    return [subgroup_generated(P, perms)]


def _print_report(rep) -> None:
    print(f"{rep.theorem} on ({rep.group}, p={rep.prime}): {rep.verdict}")
    if rep.lhs is not None:
        print(f"  lhs={rep.lhs}  rhs={rep.rhs}")
    hyp = rep.hypotheses.to_dict()
    unmet = [k for k, v in hyp.items() if v is False]
    if unmet:
        print(f"  unmet hypotheses: {', '.join(unmet)}")
    for key, value in rep.details.items():
        print(f"  {key}: {value}")
    if rep.timings:
        print(f"  elapsed: {rep.timings.get('total', 0.0):.3f}s")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_lattice_bound_override(args.limit_lattice)
    try:
        return _dispatch(args)
    except (MethodDisagreement, PropertyFailure) as exc:
        print(f"FATAL (implementation bug): {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except FusionToolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        set_lattice_bound_override(None)


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "catalog":
        for gf in builtin_catalog():
            G = gf.build()
            print(f"{gf.name:10s} order {G.order:6d} degree {G.degree}")
        return EXIT_OK
    if cmd == "batch":
        spec = BatchSpec.from_file(args.spec)
        if args.report:
            spec.output = args.report
        result = run_batch(spec)
        summary = result.document["summary"]
        print(
            "batch done: "
            + ", ".join(f"{k}={v}" for k, v in summary.items())
        )
        if not spec.output:
            print(json.dumps(result.document, indent=2))
        return result.exit_code

    G = resolve_group(args.group, limit=args.limit_order)
    if cmd == "info":
        print(f"name:   {G.name or args.group}")
        print(f"order:  {G.order}")
        print(f"degree: {G.degree}")
        print(f"abelian: {G.is_abelian()}")
        gens = ", ".join(g.cycle_string() for g in G.generators) or "()"
        print(f"generators: {gens}")
        print(f"odd primes dividing order: {list(odd_prime_divisors(G.order))}")
        return EXIT_OK

    p = args.prime
    if cmd == "nilpotency":
        value = is_p_nilpotent(G, p)
        ctx = FusionContext(G, p)
        fusion_value = is_nilpotent_fusion(ctx)
        if value != fusion_value:
            raise MethodDisagreement(
                f"group-side and fusion-side nilpotency disagree on ({G.name}, {p})"
            )
        print(f"{G.name or args.group} is {'p' if value else 'NOT p'}-nilpotent at p={p}")
        print(f"  fusion system nilpotent: {fusion_value}")
        return EXIT_OK
    if cmd == "stability":
        stable, witness, method = is_p_stable(G, p, force_full=args.full)
        print(f"p-stable at p={p}: {stable} (method: {method})")
        if witness is not None:
            print(f"  witness: Q={witness[0].describe()}, g={witness[1].cycle_string()}")
        return EXIT_OK
    if cmd == "family":
        ctx = FusionContext(G, p)
        fam = build_family(ctx.P.group, args.kind)
        print(f"family {args.kind} over Sylow {p}-subgroup (order {ctx.P.order}):")
        for H in fam.members:
            print(f"  {H.describe()}")
        print(f"join: {family_join(fam).describe()}")
        print(f"meet: {family_meet(fam).describe()}")
        return EXIT_OK

    reports = []
    if cmd == "check-a":
        ctx = FusionContext(G, p)
        fam = build_family(ctx.P.group, args.family)
        reports = [verify_theorem_A(ctx, fam)]
    elif cmd == "check-b":
        ctx = FusionContext(G, p)
        fam = build_family(ctx.P.group, args.family)
        reports = [
            verify_theorem_B(ctx, fam, D, quantifier=args.strict_quantifier)
            for D in _resolve_closed(args.closed, ctx)
        ]
    elif cmd == "zj":
        ctx = FusionContext(G, p)
        fam = build_family(ctx.P.group, args.family)
        if args.closed is None:
            reports = [verify_zj_normality(G, p, fam, None, quantifier=args.strict_quantifier)]
        else:
            reports = [
                verify_zj_normality(G, p, fam, D, quantifier=args.strict_quantifier)
                for D in _resolve_closed(args.closed, ctx)
            ]
    elif cmd == "gt":
        reports = [verify_glauberman_thompson(G, p)]
    elif cmd == "replacement":
        P = sylow_subgroup(G, p)
        summary = replacement_exhaustive_scan(P.group)
        print("replacement scan:", json.dumps(summary))
        return EXIT_OK
    else:
        raise FusionToolError(f"unhandled command {cmd!r}")

    for rep in reports:
        _print_report(rep)
    _write_report(args, reports)
    return _verdict_exit([r.verdict for r in reports])


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
