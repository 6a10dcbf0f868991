"""Permutations of {1..n}, the element type for every group in this package.

Products apply the left factor first: (p * q)(i) = q(p(i)), so conjugation
x ** g = g^-1 * x * g relabels the points of x by g (a -> b becomes
g(a) -> g(b)).
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .errors import DegreeMismatch, InvalidCycle


class Permutation:
    """An immutable bijection of {1..degree}, stored as a 1-based image tuple."""

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a bijection of 1..{len(imgs)}: {imgs!r}")
        self.images = imgs

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        # Fast path for products/inverses, where bijectivity is guaranteed.
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._unchecked(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 1-based points; fixed points omitted."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 1 <= pt <= degree:
                    raise InvalidCycle(f"point {pt} out of range 1..{degree}")
                if pt in seen:
                    raise InvalidCycle(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise DegreeMismatch(
                f"degree {len(self.images)} vs {len(other.images)}"
            )
        o = other.images
        return Permutation._unchecked(tuple(o[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, e: int) -> "Permutation":
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        e %= base.order()
        result = Permutation.identity(len(self.images))
        for _ in range(e):
            result = result * base
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g: wherever self maps a -> b, the result maps g(a) -> g(b)."""
        if len(g.images) != len(self.images):
            raise DegreeMismatch(f"degree {len(self.images)} vs {len(g.images)}")
        gi, si = g.images, self.images
        out = [0] * len(gi)
        for a in range(len(gi)):
            out[gi[a] - 1] = gi[si[a] - 1]
        return Permutation._unchecked(tuple(out))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least point; fixed points omitted."""
        imgs = self.images
        seen = [False] * len(imgs)
        out = []
        for start in range(1, len(imgs) + 1):
            if seen[start - 1] or imgs[start - 1] == start:
                continue
            cycle = [start]
            seen[start - 1] = True
            j = imgs[start - 1]
            while j != start:
                cycle.append(j)
                seen[j - 1] = True
                j = imgs[j - 1]
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_string(self, sep: str = "") -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return sep.join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = lcm(n, len(c))
        return n

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}, deg {self.degree}]"


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y
