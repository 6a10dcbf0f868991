"""Subgroup lattices of p-groups and families of abelian subgroups.

The lattice is built bottom-up: every cyclic subgroup is seeded, then pairs
are joined until a fixpoint. That reaches every subgroup (each one is a join
of cyclic subgroups) and is easy to audit, which is the point at this scale.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import AmbientMismatch, LatticeTooLarge, NotAPGroup
from .groups import (
    Group,
    Subgroup,
    center,
    commutator_subgroup,
    is_normal,
    is_prime_power,
    join,
    subgroup_generated,
    trivial_subgroup,
)

# 3^5; every other prime gets p^4. Overridable per call or via the CLI.
DEFAULT_BOUND_P3 = 243

_bound_override: int | None = None


def set_lattice_bound_override(bound: int | None) -> None:
    """Process-wide lattice bound override (used by the CLI's --limit-lattice)."""
    global _bound_override
    _bound_override = bound


def default_lattice_bound(p: int | None) -> int:
    if p is None:
        return 1
    return DEFAULT_BOUND_P3 if p == 3 else p**4


def p_group_prime(P: Group) -> int | None:
    """The prime p with |P| = p^k, None for the trivial group."""
    if P.order == 1:
        return None
    p = is_prime_power(P.order)
    if p is None:
        raise NotAPGroup(f"group of order {P.order} is not a p-group")
    return p


class SubgroupLattice:
    """All subgroups of a p-group P, with normality flags and P-conjugacy."""

    __slots__ = ("P", "prime", "subgroups", "normal_flags", "_index", "_classes")

    def __init__(self, P: Group, prime: int | None, subgroups: tuple[Subgroup, ...]):
        self.P = P
        self.prime = prime
        self.subgroups = subgroups
        self.normal_flags = tuple(is_normal(H, P) for H in subgroups)
        self._index = {H.group._eset: i for i, H in enumerate(subgroups)}
        self._classes: tuple[tuple[int, ...], ...] | None = None

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.subgroups)

    def index_of(self, H: Subgroup) -> int:
        try:
            return self._index[H.group._eset]
        except KeyError:
            raise ValueError("subgroup is not in this lattice") from None

    def includes(self, i: int, j: int) -> bool:
        """Whether subgroup i is contained in subgroup j."""
        return self.subgroups[i].group._eset <= self.subgroups[j].group._eset

    def normal_subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(
            H for H, flag in zip(self.subgroups, self.normal_flags) if flag
        )

    def abelian_subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(H for H in self.subgroups if H.group.is_abelian())

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of subgroup indices under conjugation by P."""
        if self._classes is None:
            gens = self.P.generators
            unseen = set(range(len(self.subgroups)))
            classes = []
            while unseen:
                start = min(unseen)
                orbit = {start}
                frontier = [start]
                while frontier:
                    nxt = []
                    for i in frontier:
                        eset = self.subgroups[i].group._eset
                        for g in gens:
                            j = self._index[frozenset(x.conjugate(g) for x in eset)]
                            if j not in orbit:
                                orbit.add(j)
                                nxt.append(j)
                    frontier = nxt
                unseen -= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(sorted(classes))
        return self._classes

    def class_representatives(self) -> tuple[Subgroup, ...]:
        return tuple(self.subgroups[c[0]] for c in self.conjugacy_classes())


@lru_cache(maxsize=None)
def _enumerate_all(P: Group) -> tuple[Subgroup, ...]:
    seen: dict[frozenset, Subgroup] = {}
    triv = trivial_subgroup(P)
    seen[triv.group._eset] = triv
    for x in P.elements:
        if x.is_identity():
            continue
        H = subgroup_generated(P, (x,))
        seen.setdefault(H.group._eset, H)
    done_pairs: set[tuple[frozenset, frozenset]] = set()
    while True:
        added = False
        items = sorted(seen.values(), key=lambda H: H.sort_key())
        for i, a in enumerate(items):
            for b in items[i + 1 :]:
                key = (a.group._eset, b.group._eset)
                if key in done_pairs:
                    continue
                done_pairs.add(key)
                if key[0] <= key[1] or key[1] <= key[0]:
                    continue
                J = join(a, b)
                if J.group._eset not in seen:
                    seen[J.group._eset] = J
                    added = True
        if not added:
            break
    return tuple(sorted(seen.values(), key=lambda H: H.sort_key()))


@lru_cache(maxsize=None)
def _lattice_cached(P: Group) -> SubgroupLattice:
    return SubgroupLattice(P, p_group_prime(P), _enumerate_all(P))


def enumerate_subgroups(P: Group, max_order: int | None = None) -> SubgroupLattice:
    """The complete subgroup lattice of the p-group P.

    Refuses groups past the size bound (p^4, or 3^5 for p = 3) unless a larger
    max_order is passed explicitly or set via set_lattice_bound_override.
    """
    prime = p_group_prime(P)
    bound = max_order
    if bound is None:
        bound = _bound_override
    if bound is None:
        bound = default_lattice_bound(prime)
    if P.order > max(bound, 1):
        raise LatticeTooLarge(
            f"group of order {P.order} exceeds the lattice bound {bound}"
        )
    return _lattice_cached(P)


class AbelianFamily:
    """A finite set of abelian subgroups of a fixed p-group P.

    Members are deduplicated by element set and kept in a deterministic
    order. The label records provenance only and is ignored by equality.
    """

    __slots__ = ("P", "members", "label", "_keys")

    def __init__(self, P: Group, members: Iterable[Subgroup], label: str = "custom"):
        uniq: dict[frozenset, Subgroup] = {}
        for H in members:
            if not H.group._eset <= P._eset:
                raise AmbientMismatch("family member does not lie in P")
            if not H.group.is_abelian():
                raise ValueError("family members must be abelian")
            uniq.setdefault(H.group._eset, Subgroup(P, H.group))
        self.P = P
        self.members = tuple(sorted(uniq.values(), key=lambda H: H.sort_key()))
        self.label = label
        self._keys = frozenset(uniq)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.members)

    def contains_subgroup(self, H: Subgroup) -> bool:
        return H.group._eset in self._keys

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AbelianFamily)
            and self.P._eset == other.P._eset
            and self._keys == other._keys
        )

    def __hash__(self) -> int:
        return hash((self.P._eset, self._keys))

    def __repr__(self) -> str:
        return f"<family '{self.label}': {len(self.members)} subgroup(s) of order-{self.P.order} group>"


KIND_ALL_ABELIAN = "all-abelian"
KIND_MAX_ABELIAN = "max-abelian"
KIND_MAX_ELEMENTARY = "max-elementary-abelian"
KIND_CUSTOM = "custom"
FAMILY_KINDS = (KIND_ALL_ABELIAN, KIND_MAX_ABELIAN, KIND_MAX_ELEMENTARY, KIND_CUSTOM)


def build_family(
    P: Group,
    kind: str,
    members: Iterable[Subgroup] | None = None,
    max_order: int | None = None,
) -> AbelianFamily:
    """One of the built-in abelian families over P, or a custom list."""
    if kind == KIND_CUSTOM:
        return AbelianFamily(P, tuple(members or ()), label=KIND_CUSTOM)
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    lat = enumerate_subgroups(P, max_order=max_order)
    abelians = lat.abelian_subgroups()
    if kind == KIND_ALL_ABELIAN:
        chosen = abelians
    elif kind == KIND_MAX_ABELIAN:
        top = max(H.order for H in abelians)
        chosen = tuple(H for H in abelians if H.order == top)
    else:
        p = lat.prime
        elementary = tuple(
            H
            for H in abelians
            if p is None or all(x.order() in (1, p) for x in H.group.elements)
        )
        top = max(H.order for H in elementary)
        chosen = tuple(H for H in elementary if H.order == top)
    return AbelianFamily(P, chosen, label=kind)


def family_join(fam: AbelianFamily) -> Subgroup:
    """J = <A : A in the family>; the trivial subgroup for an empty family."""
    result = trivial_subgroup(fam.P)
    for H in fam.members:
        result = join(result, H)
    return result


def family_meet(fam: AbelianFamily) -> Subgroup:
    """I = intersection of the family; the trivial subgroup when empty."""
    if not fam.members:
        return trivial_subgroup(fam.P)
    eset = fam.members[0].group._eset
    for H in fam.members[1:]:
        eset = eset & H.group._eset
    return Subgroup(fam.P, Group.from_elements(eset, fam.P.degree))


def family_restrict(fam: AbelianFamily, Q: Subgroup) -> AbelianFamily:
    """The members contained in Q."""
    if not Q.group._eset <= fam.P._eset:
        raise AmbientMismatch("restriction subgroup must lie in P")
    kept = tuple(H for H in fam.members if H.group._eset <= Q.group._eset)
    return AbelianFamily(fam.P, kept, label=f"{fam.label}|restricted")


def thompson_J(P: Group, max_order: int | None = None) -> Subgroup:
    """J(P): generated by the abelian subgroups of P of maximal order."""
    return family_join(build_family(P, KIND_MAX_ABELIAN, max_order=max_order))


def thompson_ZJ(P: Group, max_order: int | None = None) -> Subgroup:
    """Z(J(P))."""
    J = thompson_J(P, max_order=max_order)
    return Subgroup(P, center(J.group).group)


def nilpotency_class(H: Subgroup) -> int:
    """Length of the lower central series: 0 for trivial, 1 for abelian."""
    term = Subgroup(H.ambient, H.group)
    c = 0
    while term.order > 1:
        nxt = commutator_subgroup(term, H)
        if nxt.order == term.order:
            raise ValueError("subgroup is not nilpotent")
        term = nxt
        c += 1
    return c


def normal_class_le2_subgroups(P: Group, max_order: int | None = None) -> tuple[Subgroup, ...]:
    """Every B normal in P of nilpotency class at most two (trivial included)."""
    lat = enumerate_subgroups(P, max_order=max_order)
    return tuple(
        H
        for H, flag in zip(lat.subgroups, lat.normal_flags)
        if flag and nilpotency_class(H) <= 2
    )
