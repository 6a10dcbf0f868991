"""The built-in corpus of small groups, as GroupFile records.

Generators are constructed programmatically (affine maps, matrix actions on
vectors, projective-line maps) and exposed in cycle notation, so every entry
round-trips through the group file format.
"""

from __future__ import annotations

from functools import lru_cache

from .groupfile import GroupFile
from .perm import Permutation


def _perm_from_map(degree: int, mapping) -> Permutation:
    return Permutation(tuple(mapping(i) for i in range(1, degree + 1)))


def _cyclic(n: int) -> GroupFile:
    gens = () if n == 1 else (Permutation.from_cycles(n, [list(range(1, n + 1))]),)
    return GroupFile(name=f"C{n}", degree=max(n, 1), generators=gens)


def _dihedral(n: int) -> GroupFile:
    # D_{2n}, symmetries of an n-gon; n = 2 is the Klein four group on 4 points
    if n == 2:
        gens = (
            Permutation.from_cycles(4, [[1, 2]]),
            Permutation.from_cycles(4, [[3, 4]]),
        )
        return GroupFile(name="D4", degree=4, generators=gens)
    rot = Permutation.from_cycles(n, [list(range(1, n + 1))])
    refl = _perm_from_map(n, lambda i: n + 1 - i)
    return GroupFile(name=f"D{2 * n}", degree=n, generators=(rot, refl))


def _symmetric(n: int) -> GroupFile:
    gens = [Permutation.from_cycles(n, [[1, 2]])]
    if n > 2:
        gens.insert(0, Permutation.from_cycles(n, [list(range(1, n + 1))]))
    return GroupFile(name=f"S{n}", degree=n, generators=tuple(gens))


def _alternating(n: int) -> GroupFile:
    gens = [Permutation.from_cycles(n, [[1, 2, 3]])]
    if n > 3:
        cycle = list(range(1, n + 1)) if n % 2 == 1 else list(range(2, n + 1))
        gens.append(Permutation.from_cycles(n, [cycle]))
    return GroupFile(name=f"A{n}", degree=n, generators=tuple(gens))


def _elementary_abelian(p: int, k: int) -> GroupFile:
    degree = p * k
    gens = tuple(
        Permutation.from_cycles(degree, [list(range(i * p + 1, (i + 1) * p + 1))])
        for i in range(k)
    )
    return GroupFile(name=f"E{p ** k}", degree=degree, generators=gens)


def _extraspecial_27_exponent3() -> GroupFile:
    # Affine maps of F_3^2: x:(a,b)->(a+1,b), y:(a,b)->(a,b+a); point (a,b)
    # is labelled 3a+b+1.
    def label(a: int, b: int) -> int:
        return 3 * (a % 3) + (b % 3) + 1

    def unlabel(i: int) -> tuple[int, int]:
        return divmod(i - 1, 3)

    def x_map(i: int) -> int:
        a, b = unlabel(i)
        return label(a + 1, b)

    def y_map(i: int) -> int:
        a, b = unlabel(i)
        return label(a, b + a)

    gens = (_perm_from_map(9, x_map), _perm_from_map(9, y_map))
    return GroupFile(name="ES27+", degree=9, generators=gens)


def _extraspecial_27_exponent9() -> GroupFile:
    # C9 : C3 with the automorphism z -> 4z of Z/9 (labels are residues, 9 = 0)
    x = Permutation.from_cycles(9, [list(range(1, 10))])
    y = _perm_from_map(9, lambda i: ((4 * (i % 9)) % 9) or 9)
    return GroupFile(name="ES27-", degree=9, generators=(x, y))


def _c3_wr_c3() -> GroupFile:
    base = Permutation.from_cycles(9, [[1, 2, 3]])
    base2 = Permutation.from_cycles(9, [[4, 5, 6]])
    base3 = Permutation.from_cycles(9, [[7, 8, 9]])
    top = Permutation.from_cycles(9, [[1, 4, 7], [2, 5, 8], [3, 6, 9]])
    return GroupFile(name="C3wrC3", degree=9, generators=(base, base2, base3, top))


def _sl23() -> GroupFile:
    # Action of [[1,1],[0,1]] and [[0,-1],[1,0]] on the 8 nonzero vectors of
    # F_3^2, ordered lexicographically.
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i + 1 for i, v in enumerate(vectors)}

    def act(matrix):
        (m00, m01), (m10, m11) = matrix

        def mapping(i: int) -> int:
            a, b = vectors[i - 1]
            return index[((m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3)]

        return _perm_from_map(8, mapping)

    gens = (act(((1, 1), (0, 1))), act(((0, 2), (1, 0))))
    return GroupFile(name="SL23", degree=8, generators=gens)


def _frobenius(q: int, multiplier: int, name: str) -> GroupFile:
    # C_q : C_3 acting by r -> multiplier * r on Z/q (labels are residues, q = 0)
    x = Permutation.from_cycles(q, [list(range(1, q + 1))])
    y = _perm_from_map(q, lambda i: ((multiplier * (i % q)) % q) or q)
    return GroupFile(name=name, degree=q, generators=(x, y))


def _psl27() -> GroupFile:
    # z -> z+1 and z -> -1/z on the projective line over F_7;
    # labels 1..7 are the values 0..6 and label 8 is the point at infinity.
    shift = Permutation.from_cycles(8, [[1, 2, 3, 4, 5, 6, 7]])

    def neg_inv(i: int) -> int:
        if i == 8:
            return 1
        v = i - 1
        if v == 0:
            return 8
        return (-pow(v, 5, 7)) % 7 + 1  # v^5 = v^-1 mod 7

    return GroupFile(name="PSL27", degree=8, generators=(shift, _perm_from_map(8, neg_inv)))


@lru_cache(maxsize=1)
def builtin_catalog() -> tuple[GroupFile, ...]:
    entries: list[GroupFile] = []
    entries.extend(_cyclic(n) for n in range(1, 31))
    entries.extend(_dihedral(n) for n in range(2, 16))
    entries.extend(_symmetric(n) for n in range(2, 7))
    entries.extend(_alternating(n) for n in range(3, 7))
    entries.extend(_elementary_abelian(p, k) for p in (3, 5) for k in (2, 3))
    entries.append(_extraspecial_27_exponent3())
    entries.append(_extraspecial_27_exponent9())
    entries.append(_c3_wr_c3())
    entries.append(_sl23())
    entries.append(_frobenius(7, 2, "F21"))
    entries.append(_frobenius(13, 3, "F39"))
    entries.append(_psl27())
    return tuple(entries)


def builtin_names() -> tuple[str, ...]:
    return tuple(gf.name for gf in builtin_catalog())


def get_builtin(name: str) -> GroupFile:
    for gf in builtin_catalog():
        if gf.name == name:
            return gf
    raise KeyError(name)
