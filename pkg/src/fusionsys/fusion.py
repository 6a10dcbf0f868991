"""The fusion system F_P(G) of a finite group at a prime.

Objects are the subgroups of a fixed Sylow p-subgroup P of G; morphisms are
the injective homomorphisms induced by conjugation in G. Each predicate below
transcribes its definition directly; where a quantifier is reduced to
P-conjugacy class representatives, the unreduced scan stays available so the
reduction itself is testable.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import MethodDisagreement, NotInP, NotNormalInP
from .groups import (
    Group,
    Permutation,
    Subgroup,
    center,
    centralizer,
    induced_action,
    is_normal,
    is_prime,
    normalizer,
    p_core,
    p_part,
    sylow_subgroup,
)
from .lattice import enumerate_subgroups


class FusionContext:
    """The triple (G, p, P) with P a Sylow p-subgroup of G.

    The engine works for p = 2 as well; theorem verifiers require odd p and
    enforce it through their hypothesis reports.
    """

    __slots__ = ("G", "p", "P")

    def __init__(self, G: Group, p: int, P: Subgroup | None = None):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if P is None:
            P = sylow_subgroup(G, p)
        else:
            if not P.group._eset <= G._eset:
                raise NotInP("P must be a subgroup of G")
            if P.order != p_part(G.order, p):
                raise ValueError(
                    f"subgroup of order {P.order} is not a Sylow {p}-subgroup"
                )
        self.G = G
        self.p = p
        self.P = P

    def lattice(self):
        return enumerate_subgroups(self.P.group)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FusionContext)
            and self.G == other.G
            and self.p == other.p
            and self.P == other.P
        )

    def __hash__(self) -> int:
        return hash((self.G, self.p, self.P))

    def __repr__(self) -> str:
        gname = self.G.name or f"order-{self.G.order} group"
        return f"<F_P(G): G={gname}, p={self.p}, |P|={self.P.order}>"


class FusionMorphism:
    """One morphism of F_P(G): conjugation by a witness, as an explicit map."""

    __slots__ = ("source", "target", "graph", "witness")

    def __init__(
        self,
        source: Subgroup,
        target: Subgroup,
        graph: tuple[tuple[Permutation, Permutation], ...],
        witness: Permutation,
    ):
        self.source = source
        self.target = target
        self.graph = graph
        self.witness = witness

    @property
    def mapping(self) -> dict[Permutation, Permutation]:
        return dict(self.graph)

    def __call__(self, x: Permutation) -> Permutation:
        for src, img in self.graph:
            if src == x:
                return img
        raise KeyError(x)

    def image_elements(self) -> frozenset[Permutation]:
        return frozenset(img for _, img in self.graph)

    def is_bijective_onto_source(self) -> bool:
        return self.image_elements() == self.source.group._eset

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FusionMorphism)
            and self.graph == other.graph
            and self.target.group._eset == other.target.group._eset
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.target.group._eset))

    def __repr__(self) -> str:
        return (
            f"<morphism |src|={self.source.order} via {self.witness.cycle_string()}>"
        )


def _require_in_P(ctx: FusionContext, Q: Subgroup) -> None:
    if not Q.group._eset <= ctx.P.group._eset:
        raise NotInP("subgroup is not contained in P")


def f_conjugates(ctx: FusionContext, Q: Subgroup) -> tuple[Subgroup, ...]:
    """All subgroups of P that are G-conjugate to Q."""
    _require_in_P(ctx, Q)
    pset = ctx.P.group._eset
    found: dict[frozenset, Subgroup] = {}
    for g in ctx.G.elements:
        conj = frozenset(x.conjugate(g) for x in Q.group._eset)
        if conj <= pset and conj not in found:
            found[conj] = Subgroup(
                ctx.P.group, Group.from_elements(conj, ctx.P.degree)
            )
    return tuple(sorted(found.values(), key=lambda H: H.sort_key()))


def _graphs_into(
    source_elements: tuple[Permutation, ...],
    pool: tuple[Permutation, ...],
    target_set: frozenset[Permutation],
) -> dict[tuple[Permutation, ...], Permutation]:
    """Distinct conjugation maps of the source into the target, keyed by image
    tuple (source order fixed), each with its first witness."""
    out: dict[tuple[Permutation, ...], Permutation] = {}
    for g in pool:
        images = []
        for q in source_elements:
            c = q.conjugate(g)
            if c not in target_set:
                break
            images.append(c)
        else:
            key = tuple(images)
            if key not in out:
                out[key] = g
    return out


def hom_F(ctx: FusionContext, Q: Subgroup, R: Subgroup) -> tuple[FusionMorphism, ...]:
    """Hom_F(Q, R): conjugation maps Q -> R, deduplicated as functions."""
    _require_in_P(ctx, Q)
    _require_in_P(ctx, R)
    src = Q.group.elements
    graphs = _graphs_into(src, ctx.G.elements, R.group._eset)
    morphisms = [
        FusionMorphism(Q, R, tuple(zip(src, images)), witness)
        for images, witness in graphs.items()
    ]
    morphisms.sort(key=lambda m: tuple(img.images for _, img in m.graph))
    return tuple(morphisms)


def aut_F(ctx: FusionContext, Q: Subgroup) -> tuple[FusionMorphism, ...]:
    """Aut_F(Q) = Hom_F(Q, Q); injective self-maps are automatically bijective."""
    return hom_F(ctx, Q, Q)


def morphism_scan_nilpotent(ctx: FusionContext, reduce_to_classes: bool = True) -> bool:
    """Whether every fusion map into P is already induced by an element of P."""
    P = ctx.P.group
    lat = enumerate_subgroups(P)
    reps = lat.class_representatives() if reduce_to_classes else lat.subgroups
    if ctx.G._eset == P._eset:
        return True  # both scans would run over the identical pool
    pset = P._eset
    for Q in reps:
        src = Q.group.elements
        from_g = set(_graphs_into(src, ctx.G.elements, pset))
        from_p = set(_graphs_into(src, P.elements, pset))
        if from_g != from_p:
            return False
    return True


def frobenius_quotient_nilpotent(ctx: FusionContext) -> bool:
    """Whether N_G(Q)/C_G(Q) is a p-group for every subgroup Q of P."""
    lat = enumerate_subgroups(ctx.P.group)
    for Q in lat.class_representatives():
        N = normalizer(ctx.G, Q)
        act = induced_action(N, Q)
        if act.image.order != p_part(act.image.order, ctx.p):
            return False
    return True


@lru_cache(maxsize=None)
def is_nilpotent_fusion(ctx: FusionContext) -> bool:
    """F_P(G) = F_P(P), decided twice (morphism scan and Frobenius quotient).

    The two methods must agree; disagreement is an implementation bug and
    raises MethodDisagreement rather than being swallowed.
    """
    by_morphisms = morphism_scan_nilpotent(ctx)
    by_quotients = frobenius_quotient_nilpotent(ctx)
    if by_morphisms != by_quotients:
        raise MethodDisagreement(
            f"morphism scan says {by_morphisms}, Frobenius quotient says "
            f"{by_quotients} for {ctx!r}"
        )
    return by_morphisms


@lru_cache(maxsize=None)
def _element_fusion_map(ctx: FusionContext) -> dict[Permutation, frozenset[Permutation]]:
    """For each u in P: every element of P that u is G-conjugate to."""
    pset = ctx.P.group._eset
    fused: dict[Permutation, set[Permutation]] = {u: set() for u in pset}
    for g in ctx.G.elements:
        for u in pset:
            c = u.conjugate(g)
            if c in pset:
                fused[u].add(c)
    return {u: frozenset(s) for u, s in fused.items()}


def is_strongly_closed(ctx: FusionContext, D: Subgroup) -> bool:
    """No element of D is G-fused to an element of P outside D."""
    _require_in_P(ctx, D)
    fusion = _element_fusion_map(ctx)
    dset = D.group._eset
    return all(fusion[u] <= dset for u in dset)


def strongly_closed_subgroups(ctx: FusionContext) -> tuple[Subgroup, ...]:
    """Every strongly closed subgroup of P (always includes 1 and P)."""
    lat = enumerate_subgroups(ctx.P.group)
    out = []
    for H, normal_in_p in zip(lat.subgroups, lat.normal_flags):
        # strongly closed forces normality in P, so skip the rest early
        if normal_in_p and is_strongly_closed(ctx, H):
            out.append(H)
    return tuple(out)


def is_f_centric(ctx: FusionContext, Q: Subgroup) -> bool:
    """C_P(R) = Z(R) for every F-conjugate R of Q."""
    _require_in_P(ctx, Q)
    for R in f_conjugates(ctx, Q):
        gens = R.group.generators
        c_p = frozenset(
            x
            for x in ctx.P.group.elements
            if all(r.conjugate(x) == r for r in gens)
        )
        if c_p != center(R.group).group._eset:
            return False
    return True


def is_normal_in_F(ctx: FusionContext, Q: Subgroup) -> bool:
    """Q normal in F: every morphism extends over Q with Q mapped onto itself.

    For a group fusion system this is equivalent to: every morphism has a
    witness normalizing Q, i.e. the maps induced by G coincide with the maps
    induced by N_G(Q).
    """
    _require_in_P(ctx, Q)
    P = ctx.P.group
    if not is_normal(Subgroup(P, Q.group), P):
        return False
    NQ = normalizer(ctx.G, Q)
    if NQ.order == ctx.G.order:
        return True
    pset = P._eset
    lat = enumerate_subgroups(P)
    for R in lat.class_representatives():
        src = R.group.elements
        from_g = set(_graphs_into(src, ctx.G.elements, pset))
        from_n = set(_graphs_into(src, NQ.group.elements, pset))
        if from_g != from_n:
            return False
    return True


def is_constrained(ctx: FusionContext) -> bool:
    """Whether some F-centric subgroup is normal in F."""
    lat = enumerate_subgroups(ctx.P.group)
    for Q, normal_in_p in zip(lat.subgroups, lat.normal_flags):
        if normal_in_p and is_normal_in_F(ctx, Q) and is_f_centric(ctx, Q):
            return True
    return False


def model_condition(ctx: FusionContext) -> bool:
    """C_G(O_p(G)) <= O_p(G)."""
    O = p_core(ctx.G, ctx.p)
    C = centralizer(ctx.G, O)
    return C.group._eset <= O.group._eset


def normalizer_system(ctx: FusionContext, Q: Subgroup) -> FusionContext:
    """N_F(Q) realized as F_P(N_G(Q)); requires Q normal in P."""
    _require_in_P(ctx, Q)
    if not is_normal(Subgroup(ctx.P.group, Q.group), ctx.P.group):
        raise NotNormalInP("normalizer systems are only formed at Q normal in P")
    N = normalizer(ctx.G, Q)
    return FusionContext(N.group, ctx.p, Subgroup(N.group, ctx.P.group))
