"""Permutations of {0, ..., n-1} stored as explicit image tuples.

Composition is left-to-right: ``(a * b)(x) == b(a(x))``, so conjugation
``a ** g`` is ``g.inverse() * a * g`` and right cosets/right actions read
naturally.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import BadParameter, DegreeMismatch


class Permutation:
    __slots__ = ("images", "_hash")

    images: tuple

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n == 0:
            raise BadParameter("a permutation needs degree >= 1")
        seen = [False] * n
        for v in imgs:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise BadParameter(f"not a bijection on 0..{n - 1}: {imgs!r}")
            seen[v] = True
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        # trusted internal constructor: skips bijection validation
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise BadParameter("degree must be >= 1")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise BadParameter(f"repeated point in cycle {cyc!r}")
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                if not 0 <= a < degree:
                    raise BadParameter(f"point {a} outside degree {degree}")
                if images[a] != a:
                    raise BadParameter(f"point {a} appears in two cycles")
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DegreeMismatch(f"degrees {len(a)} and {len(b)}")
        return Permutation._raw(tuple(map(b.__getitem__, a)))

    def inverse(self) -> "Permutation":
        a = self.images
        inv = [0] * len(a)
        for i, v in enumerate(a):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def order(self) -> int:
        cyc = self.cycles()
        return math.lcm(*(len(c) for c in cyc)) if cyc else 1

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list:
        """Nontrivial cycles, each rotated to start at its minimum, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id/{self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Perm{body}"


def _mul(a: Permutation, b: Permutation) -> Permutation:
    """Unchecked compose (apply a, then b); hot path for closures."""
    return Permutation._raw(tuple(map(b.images.__getitem__, a.images)))


def _conj(a: Permutation, g: Permutation, g_inv: Permutation) -> Permutation:
    return _mul(_mul(g_inv, a), g)
