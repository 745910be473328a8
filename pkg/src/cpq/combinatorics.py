"""Multi-indices and permutations behind the q-Grassmann algebra.

Multi-indices are plain sorted tuples of integers in ``1..l``; the rank
``l`` is passed where it matters (complements, enumeration).  Orders are
lexicographic, which fixes the basis order of every matrix built on top.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .qscalar import DomainError

MultiIndex = tuple


class InvalidShiftError(DomainError):
    """Raising/lowering applied where ``j#i`` has the wrong value."""


def multi_index(entries: Sequence[int], ell: int) -> MultiIndex:
    """Validate and return ``entries`` as a multi-index of rank ``ell``."""
    t = tuple(int(x) for x in entries)
    if any(b <= a for a, b in zip(t, t[1:])):
        raise DomainError(f"{t} is not strictly increasing")
    if t and (t[0] < 1 or t[-1] > ell):
        raise DomainError(f"{t} has entries outside 1..{ell}")
    return t


def enumerate_multiindices(ell: int, k: int) -> list[MultiIndex]:
    """All ``i`` with ``1 <= i_1 < ... < i_k <= ell``, lexicographic."""
    if not 0 <= k <= ell:
        raise DomainError(f"k={k} outside 0..{ell}")
    return list(itertools.combinations(range(1, ell + 1), k))


def all_multiindices(ell: int) -> list[MultiIndex]:
    """Every multi-index, by degree and then lexicographically."""
    return [i for k in range(ell + 1) for i in enumerate_multiindices(ell, k)]


def sharp(j: int, i: MultiIndex) -> int:
    """``j#i``: occurrences of ``j`` minus occurrences of ``j+1``."""
    return (j in i) - ((j + 1) in i)


def shift(i: MultiIndex, j: int, direction: str) -> MultiIndex:
    """``i^{j,+}`` (replace j by j+1) or ``i^{j,-}`` (replace j+1 by j)."""
    s = sharp(j, i)
    if direction == "+":
        if s != 1:
            raise InvalidShiftError(f"{j}#{i} = {s}, need +1")
        return tuple(j + 1 if x == j else x for x in i)
    if direction == "-":
        if s != -1:
            raise InvalidShiftError(f"{j}#{i} = {s}, need -1")
        return tuple(j if x == j + 1 else x for x in i)
    raise DomainError(f"direction must be '+' or '-', got {direction!r}")


def complement(i: MultiIndex, ell: int) -> MultiIndex:
    s = set(i)
    return tuple(x for x in range(1, ell + 1) if x not in s)


def union(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    """Ordered union of disjoint multi-indices."""
    if set(a) & set(b):
        raise DomainError(f"{a} and {b} are not disjoint")
    return tuple(sorted(a + b))


def weight(i: MultiIndex) -> int:
    """``|i|``, the sum of the entries."""
    return sum(i)


def position(j: int, i: MultiIndex) -> int:
    """1-based position of ``j`` in ``i``."""
    try:
        return i.index(j) + 1
    except ValueError:
        raise DomainError(f"{j} not in {i}") from None


class Permutation:
    """A bijection of ``{1..n}`` stored by its images ``(p(1), ..., p(n))``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __len__(self):
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(x) = self(other(x))``."""
        if len(self) != len(other):
            raise DomainError("size mismatch")
        return Permutation(self.images[y - 1] for y in other.images)

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def inversion_count(p: Permutation | Sequence[int]) -> int:
    """``||p||``, the number of pairs ``a < b`` with ``p(a) > p(b)``."""
    im = p.images if isinstance(p, Permutation) else tuple(p)
    n = len(im)
    return sum(1 for a in range(n) for b in range(a + 1, n) if im[a] > im[b])


def enumerate_shuffles(h: int, k: int) -> Iterator[Permutation]:
    """``S^{(h)}_{h+k}``: increasing on the first ``h`` and last ``k`` slots.

    Yielded in lexicographic order of the first ``h`` images.
    """
    if h < 0 or k < 0:
        raise DomainError("negative block size")
    n = h + k
    for first in itertools.combinations(range(1, n + 1), h):
        s = set(first)
        yield Permutation(first + tuple(x for x in range(1, n + 1) if x not in s))


def shuffle_factorization(p: Permutation, k: int) -> tuple[Permutation, Permutation]:
    """Write ``p = p1 p2`` with ``p1`` a ``(k, n-k)`` shuffle and ``p2`` block-preserving."""
    n = len(p)
    first = tuple(sorted(p.images[:k]))
    rest = tuple(sorted(p.images[k:]))
    p1 = Permutation(first + rest)
    p2 = p1.inverse().compose(p)
    return p1, p2


def run_suite(ell: int) -> list[tuple[str, bool, int]]:
    """Counting, shift and shuffle identities for rank ``ell``."""
    res = []
    ok = all(len(enumerate_multiindices(ell, k)) == math.comb(ell, k) for k in range(ell + 1))
    res.append(("|Lambda_k| = binom(l, k)", ok, 0))
    res.append(("complement involution",
                all(complement(complement(i, ell), ell) == i for i in all_multiindices(ell)), 0))
    ok = True
    for i in all_multiindices(ell):
        for j in range(1, ell):
            s = sharp(j, i)
            if s == 1:
                ok = ok and shift(shift(i, j, "+"), j, "-") == i and sharp(j, shift(i, j, "+")) == -1
            elif s == -1:
                ok = ok and shift(shift(i, j, "-"), j, "+") == i
    res.append(("shift round trip", ok, 0))
    ok = True
    for h in range(ell + 1):
        for k in range(ell + 1 - h):
            sh = list(enumerate_shuffles(h, k))
            ok = ok and len(sh) == math.comb(h + k, h)
            # inversion numbers of shuffles generate the Gaussian binomial
            dist: dict = {}
            for p in sh:
                c = inversion_count(p)
                dist[c] = dist.get(c, 0) + 1
            ok = ok and dist == _gauss_coeffs(h + k, h)
    res.append(("shuffle count and inversion distribution", ok, 0))
    ok = True
    n = min(ell, 5)
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        for k in range(n + 1):
            p1, p2 = shuffle_factorization(p, k)
            ok = ok and p1.compose(p2) == p
            ok = ok and inversion_count(p) == inversion_count(p1) + inversion_count(p2)
    res.append(("shuffle factorization", ok, 0))
    return res


def _gauss_coeffs(n: int, k: int) -> dict:
    """Coefficients of the Gaussian binomial in ``x``: ``{power: count}``."""
    if k == 0 or k == n:
        return {0: 1}
    a, b = _gauss_coeffs(n - 1, k - 1), _gauss_coeffs(n - 1, k)
    out = dict(b)
    for e, c in a.items():
        out[e + n - k] = out.get(e + n - k, 0) + c
    return out
