"""Finite permutation groups with fully materialized element sets.

Everything here is exact and exhaustive by design: the groups stay small
(default closure limit 100 000 elements) and every operator is a direct
transcription of its definition, so results double as test oracles.
Groups and subgroups are immutable after construction and safe to share;
all operations are pure, which also makes the caches below sound.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    AmbientMismatch,
    DegreeMismatch,
    DoesNotNormalize,
    NotInAmbient,
    PropertyFailure,
    SizeLimitExceeded,
)
from .perm import Permutation, commutator

DEFAULT_ELEMENT_LIMIT = 100_000


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_prime_power(n: int) -> int | None:
    """The prime p with n = p^k (k >= 1), or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def odd_prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    d = 3
    while n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return tuple(out)


def _closure(generators: Iterable[Permutation], degree: int, limit: int) -> frozenset[Permutation]:
    """BFS closure of a generator set; always contains the identity."""
    ident = Permutation.identity(degree)
    gens = [g for g in generators if not g.is_identity()]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    if len(seen) >= limit:
                        raise SizeLimitExceeded(
                            f"closure exceeds the element limit of {limit}"
                        )
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)


class Group:
    """An immutable permutation group; equality and hashing are by element set."""

    __slots__ = ("degree", "order", "elements", "_eset", "_gens", "name")

    def __init__(
        self,
        elements: Iterable[Permutation],
        degree: int,
        generators: Iterable[Permutation] | None = None,
        name: str | None = None,
    ):
        self._eset: frozenset[Permutation] = frozenset(elements)
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(
            sorted(self._eset, key=lambda p: p.images)
        )
        self.order = len(self.elements)
        self._gens = None if generators is None else tuple(generators)
        self.name = name

    @classmethod
    def generate(
        cls,
        generators: Iterable[Permutation],
        degree: int | None = None,
        limit: int = DEFAULT_ELEMENT_LIMIT,
        name: str | None = None,
    ) -> "Group":
        gens = sorted(set(generators))
        if degree is None:
            if not gens:
                raise DegreeMismatch("degree is required for an empty generating set")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator of degree {g.degree} in a degree-{degree} group"
                )
        elements = _closure(gens, degree, limit)
        return cls(elements, degree, generators=gens, name=name)

    @classmethod
    def from_elements(
        cls, elements: Iterable[Permutation], degree: int, name: str | None = None
    ) -> "Group":
        """Wrap an already-closed element set (trusted: no closure recheck)."""
        return cls(elements, degree, name=name)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        """A reduced generating set, computed greedily on first use."""
        if self._gens is None:
            gens: list[Permutation] = []
            cur: frozenset[Permutation] = frozenset((self.identity,))
            for x in self.elements:
                if x not in cur:
                    gens.append(x)
                    cur = _closure(gens, self.degree, self.order)
                    if len(cur) == self.order:
                        break
            self._gens = tuple(gens)
        return self._gens

    def __contains__(self, p: Permutation) -> bool:
        return p in self._eset

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self._eset == other._eset

    def __hash__(self) -> int:
        return hash(self._eset)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label}: order {self.order}, degree {self.degree}>"


class Subgroup:
    """A group tagged with the ambient group it lives in.

    Equality and hashing look only at the element set, never at the ambient
    or at the particular generators used to build it.
    """

    __slots__ = ("ambient", "group")

    def __init__(self, ambient: Group, group: Group):
        if not group._eset <= ambient._eset:
            raise NotInAmbient("subgroup elements must lie in the ambient group")
        self.ambient = ambient
        self.group = group

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self.group.elements

    def __contains__(self, p: Permutation) -> bool:
        return p in self.group._eset

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and self.group._eset == other.group._eset

    def __hash__(self) -> int:
        return hash(self.group._eset)

    def __le__(self, other: "Subgroup | Group") -> bool:
        oset = other.group._eset if isinstance(other, Subgroup) else other._eset
        return self.group._eset <= oset

    def sort_key(self):
        return (self.order, tuple(p.images for p in self.group.elements))

    def describe(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.group.generators) or "()"
        return f"order {self.order} = <{gens}>"

    def __repr__(self) -> str:
        return f"<subgroup {self.describe()} of order-{self.ambient.order} group>"


def build_group(
    generators: Iterable[Permutation],
    degree: int | None = None,
    limit: int = DEFAULT_ELEMENT_LIMIT,
    name: str | None = None,
) -> Group:
    """Close a generating set into a Group with exact order and membership."""
    return Group.generate(generators, degree=degree, limit=limit, name=name)


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, Group.from_elements((G.identity,), G.degree))


def whole_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, G)


def rebase(H: Subgroup, ambient: Group) -> Subgroup:
    """The same subgroup viewed inside a different ambient group."""
    return Subgroup(ambient, H.group)


def subgroup_generated(ambient: Group, gens: Iterable[Permutation]) -> Subgroup:
    """The smallest subgroup of the ambient group containing gens."""
    gen_list = sorted(set(gens))
    for g in gen_list:
        if g not in ambient:
            raise NotInAmbient(f"generator {g} is not in the ambient group")
    elements = _closure(gen_list, ambient.degree, ambient.order)
    return Subgroup(ambient, Group(elements, ambient.degree, generators=gen_list))


def conjugate_subgroup(H: Subgroup, g: Permutation) -> Subgroup:
    """H^g = {g^-1 h g : h in H}."""
    if g not in H.ambient:
        raise NotInAmbient("conjugating element is not in the ambient group")
    elements = frozenset(x.conjugate(g) for x in H.group._eset)
    gens = None
    if H.group._gens is not None:
        gens = tuple(x.conjugate(g) for x in H.group._gens)
    return Subgroup(H.ambient, Group(elements, H.degree, generators=gens))


def _require_subgroup_of(G: Group, H: Subgroup) -> None:
    if not H.group._eset <= G._eset:
        raise NotInAmbient("subgroup does not lie in the given group")


def normalizing_elements(pool: Iterable[Permutation], H: Group) -> frozenset[Permutation]:
    """Elements of the pool that normalize H (generator conjugation test)."""
    gens = H.generators
    hset = H._eset
    return frozenset(
        g for g in pool if all(h.conjugate(g) in hset for h in gens)
    )


@lru_cache(maxsize=None)
def normalizer(G: Group, H: Subgroup) -> Subgroup:
    """N_G(H). Requires H <= G."""
    _require_subgroup_of(G, H)
    elems = normalizing_elements(G.elements, H.group)
    return Subgroup(G, Group.from_elements(elems, G.degree))


@lru_cache(maxsize=None)
def centralizer(G: Group, H: Subgroup) -> Subgroup:
    """C_G(H). Requires H <= G."""
    _require_subgroup_of(G, H)
    gens = H.group.generators
    elems = frozenset(
        g for g in G.elements if all(h.conjugate(g) == h for h in gens)
    )
    return Subgroup(G, Group.from_elements(elems, G.degree))


@lru_cache(maxsize=None)
def center(G: Group) -> Subgroup:
    """Z(G) = C_G(G)."""
    gens = G.generators
    elems = frozenset(
        x for x in G.elements if all(x.conjugate(g) == x for g in gens)
    )
    return Subgroup(G, Group.from_elements(elems, G.degree))


def is_normal(H: Subgroup, G: Group | Subgroup) -> bool:
    """H normal in G; requires H <= G."""
    grp = G.group if isinstance(G, Subgroup) else G
    if not H.group._eset <= grp._eset:
        raise NotInAmbient("normality test requires H <= G")
    hset = H.group._eset
    return all(
        h.conjugate(g) in hset for g in grp.generators for h in H.group.generators
    )


def commutator_subgroup(K: Subgroup, H: Subgroup) -> Subgroup:
    """[K, H], generated by all commutators [k, h] (all pairs, no shortcuts)."""
    if H.ambient._eset != K.ambient._eset:
        raise AmbientMismatch("commutator subgroup needs a shared ambient")
    comms = sorted({commutator(k, h) for k in K.group.elements for h in H.group.elements})
    elements = _closure(comms, K.degree, K.ambient.order)
    return Subgroup(K.ambient, Group(elements, K.degree, generators=tuple(comms)))


def derived_subgroup(B: Subgroup) -> Subgroup:
    """[B, B]."""
    return commutator_subgroup(B, B)


def commutator_with_element(A: Subgroup, b: Permutation) -> Subgroup:
    """[A, b] = <[a, b] : a in A>."""
    if b not in A.ambient:
        raise NotInAmbient("element is not in the ambient group")
    comms = sorted({commutator(a, b) for a in A.group.elements})
    elements = _closure(comms, A.degree, A.ambient.order)
    return Subgroup(A.ambient, Group(elements, A.degree, generators=tuple(comms)))


def _require_same_ambient(H: Subgroup, K: Subgroup) -> None:
    if H.ambient._eset != K.ambient._eset:
        raise AmbientMismatch("subgroups live in different ambient groups")


def meet(H: Subgroup, K: Subgroup) -> Subgroup:
    """H intersect K (by elements)."""
    _require_same_ambient(H, K)
    return Subgroup(
        H.ambient, Group.from_elements(H.group._eset & K.group._eset, H.degree)
    )


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    """<H union K>."""
    _require_same_ambient(H, K)
    gens = sorted(set(H.group.generators) | set(K.group.generators))
    elements = _closure(gens, H.degree, H.ambient.order)
    return Subgroup(H.ambient, Group(elements, H.degree, generators=tuple(gens)))


@lru_cache(maxsize=None)
def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown by normalizer climbing.

    For p not dividing |G| this is the trivial subgroup, not an error.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    seed = None
    for x in G.elements:
        o = x.order()
        if o % p == 0:
            seed = x ** (o // p_part(o, p))
            break
    assert seed is not None  # p divides |G|, so a p-element exists (Cauchy)
    gens = [seed]
    cur = _closure(gens, G.degree, G.order)
    while len(cur) < target:
        norm = normalizing_elements(G.elements, Group(cur, G.degree, generators=tuple(gens)))
        grown = False
        for cand in sorted(norm):
            if cand in cur:
                continue
            o = cand.order()
            if o != p_part(o, p):
                continue
            trial = _closure(gens + [cand], G.degree, G.order)
            t = len(trial)
            if t > len(cur) and t == p_part(t, p):
                gens.append(cand)
                cur = trial
                grown = True
                break
        if not grown:
            raise PropertyFailure("sylow climbing stalled below the p-part")
    return Subgroup(G, Group(cur, G.degree, generators=tuple(gens)))


@lru_cache(maxsize=None)
def p_core(G: Group, p: int) -> Subgroup:
    """O_p(G): the intersection of all conjugates of one Sylow p-subgroup."""
    S = sylow_subgroup(G, p)
    core = S.group._eset
    seen = {core}
    for g in G.elements:
        conj = frozenset(x.conjugate(g) for x in S.group._eset)
        if conj not in seen:
            seen.add(conj)
            core = core & conj
    return Subgroup(G, Group.from_elements(core, G.degree))


@lru_cache(maxsize=None)
def p_prime_generated(G: Group, p: int) -> Subgroup:
    """<x in G : ord(x) coprime to p>.

    G is p-nilpotent exactly when this subgroup has order |G| / |G|_p, which
    makes it an independent p-nilpotency oracle.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    gens: list[Permutation] = []
    cur: frozenset[Permutation] = frozenset((G.identity,))
    for x in G.elements:
        if x.order() % p != 0 and x not in cur:
            gens.append(x)
            cur = _closure(gens, G.degree, G.order)
    return Subgroup(G, Group(cur, G.degree, generators=tuple(gens)))


class ActionImage:
    """The conjugation action of a group N on a subgroup Q.

    The image consists of permutations of Q's element list; project maps each
    element of the source onto the permutation it induces. The kernel of
    project is C_N(Q), so image ~ N / C_N(Q).
    """

    __slots__ = ("source", "target_points", "image", "_projection")

    def __init__(
        self,
        source: Group,
        target_points: tuple[Permutation, ...],
        image: Group,
        projection: dict[Permutation, Permutation],
    ):
        self.source = source
        self.target_points = target_points
        self.image = image
        self._projection = projection

    def project(self, g: Permutation) -> Permutation:
        try:
            return self._projection[g]
        except KeyError:
            raise NotInAmbient("element is not in the acting group") from None

    @property
    def kernel(self) -> Group:
        ident = Permutation.identity(len(self.target_points))
        elems = frozenset(g for g, pg in self._projection.items() if pg == ident)
        return Group.from_elements(elems, self.source.degree)


def induced_action(N: Subgroup, Q: Subgroup) -> ActionImage:
    """Conjugation action of N on Q; raises unless N normalizes Q."""
    points = Q.group.elements
    index = {q: i + 1 for i, q in enumerate(points)}
    qset = Q.group._eset
    projection: dict[Permutation, Permutation] = {}
    images: set[Permutation] = set()
    for g in N.group.elements:
        imgs = [0] * len(points)
        for i, q in enumerate(points):
            c = q.conjugate(g)
            if c not in qset:
                raise DoesNotNormalize("the acting group does not normalize Q")
            imgs[i] = index[c]
        pg = Permutation._unchecked(tuple(imgs))
        projection[g] = pg
        images.add(pg)
    image = Group.from_elements(images, len(points))
    return ActionImage(N.group, points, image, projection)


def minimal_generators(G: Group) -> tuple[Permutation, ...]:
    """A small generating set: greedily add the element growing the closure most.

    Quadratic in |G| (one closure per candidate per step); meant for the tiny
    groups handed to the automorphism scan, where a short generator tuple
    matters far more than this search costs.
    """
    gens: list[Permutation] = []
    cur: frozenset[Permutation] = frozenset((G.identity,))
    while len(cur) < G.order:
        best = None
        best_size = 0
        for x in G.elements:
            if x in cur:
                continue
            trial = _closure(gens + [x], G.degree, G.order)
            if len(trial) > best_size:
                best, best_size, best_closure = x, len(trial), trial
                if best_size == G.order:
                    break
        gens.append(best)
        cur = best_closure
    return tuple(gens)


def automorphisms(G: Group) -> Iterator[dict[Permutation, Permutation]]:
    """Brute-force Aut(G): every generator-image assignment that extends.

    Exponential; intended for tiny groups only (the characteristic-subgroup
    check caps callers at order 200).
    """
    gens = minimal_generators(G)
    if not gens:
        yield {G.identity: G.identity}
        return
    pools = [
        tuple(x for x in G.elements if x.order() == g.order()) for g in gens
    ]
    def rec(i: int, chosen: list[Permutation]) -> Iterator[dict[Permutation, Permutation]]:
        if i == len(gens):
            phi = _extend_homomorphism(G, gens, tuple(chosen))
            if phi is not None and len(set(phi.values())) == G.order:
                yield phi
            return
        for cand in pools[i]:
            chosen.append(cand)
            yield from rec(i + 1, chosen)
            chosen.pop()
    yield from rec(0, [])


def _extend_homomorphism(
    G: Group, gens: tuple[Permutation, ...], images: tuple[Permutation, ...]
) -> dict[Permutation, Permutation] | None:
    """Extend gens -> images to all of G, or None if inconsistent."""
    ident = G.identity
    phi = {ident: ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            fx = phi[x]
            for g, h in zip(gens, images):
                y = x * g
                fy = fx * h
                prev = phi.get(y)
                if prev is None:
                    phi[y] = fy
                    new.append(y)
                elif prev != fy:
                    return None
        frontier = new
    return phi


def is_characteristic(H: Subgroup, G: Group) -> bool:
    """H fixed (setwise) by every automorphism of G. Brute force over Aut(G)."""
    _require_subgroup_of(G, H)
    if H.order in (1, G.order):
        return True
    hset = H.group._eset
    for phi in automorphisms(G):
        if frozenset(phi[h] for h in hset) != hset:
            return False
    return True
