"""Normal forms in the coordinate algebra of the quantum sphere S^{2l+1}_q.

Generators are ``z_1..z_n`` and their adjoints, ``n = l + 1``.  A letter is
``(i, 0)`` for ``z_i`` and ``(i, 1)`` for ``z_i*``.  The normal order puts
unstarred letters first with indices ascending, then starred letters with
indices descending, and never leaves ``z_n z_n*`` adjacent (it is replaced
through the sphere relation).

Rewrite rules on an adjacent pair::

    z_j z_i    -> q^-1 z_i z_j                           (i < j)
    z_i* z_j   -> q z_j z_i*                             (i != j)
    z_1* z_1   -> z_1 z_1*
    z_i* z_i   -> z_i z_i* + (1 - q^2) sum_{j<i} z_j z_j*
    z_i* z_j*  -> q^-1 z_j* z_i*                         (i < j)
    z_n z_n*   -> 1 - sum_{j<n} z_j z_j*
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .qscalar import ONE, ZERO, DomainError, QScalar, as_qscalar, qmultinom, qpow

Letter = tuple
MIXED = "mixed"


def _key(a: Letter):
    return (0, a[0]) if a[1] == 0 else (1, -a[0])


def _reducible(a: Letter, b: Letter, n: int) -> bool:
    return _key(a) > _key(b) or (a == (n, 0) and b == (n, 1))


class SphereWord:
    """A monomial already in normal order."""

    __slots__ = ("letters", "n")

    def __init__(self, letters: Iterable[Letter], n: int):
        letters = tuple(tuple(a) for a in letters)
        for a in letters:
            if a[1] not in (0, 1) or not 1 <= a[0] <= n:
                raise DomainError(f"bad letter {a}")
        for a, b in zip(letters, letters[1:]):
            if _reducible(a, b, n):
                raise DomainError(f"{letters} is not in normal order")
        self.letters, self.n = letters, n

    @property
    def deg_z(self) -> int:
        return sum(1 for a in self.letters if a[1] == 0)

    @property
    def deg_zstar(self) -> int:
        return sum(1 for a in self.letters if a[1] == 1)

    def __str__(self):
        return " ".join(f"z{i}*" if s else f"z{i}" for i, s in self.letters) or "1"

    def __repr__(self):
        return f"SphereWord({self})"


class SpherePoly:
    """Finite sum ``{letters: QScalar}`` in rank ``l``; words need not be normal."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms: dict | None = None):
        if ell < 1:
            raise DomainError("l must be >= 1")
        self.ell = ell
        self.terms: dict = {}
        for w, c in (terms or {}).items():
            self._add(tuple(w), as_qscalar(c))

    @property
    def n(self) -> int:
        return self.ell + 1

    def _add(self, w, c: QScalar):
        if c.is_zero():
            return
        new = self.terms[w] + c if w in self.terms else c
        if new.is_zero():
            del self.terms[w]
        else:
            self.terms[w] = new

    @classmethod
    def scalar(cls, ell: int, c) -> "SpherePoly":
        return cls(ell, {(): c})

    def _coerce(self, other) -> "SpherePoly":
        if isinstance(other, SpherePoly):
            if other.ell != self.ell:
                raise DomainError("rank mismatch")
            return other
        return SpherePoly.scalar(self.ell, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = SpherePoly(self.ell, self.terms)
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "SpherePoly":
        c = as_qscalar(c)
        return SpherePoly(self.ell, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SpherePoly):
            return self.scale(other)
        other = self._coerce(other)
        out = SpherePoly(self.ell)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._add(w1 + w2, c1 * c2)
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int):
        out = SpherePoly.scalar(self.ell, 1)
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "SpherePoly":
        return SpherePoly(self.ell, {tuple((i, 1 - s) for i, s in reversed(w)): c.conjugate()
                                     for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> QScalar | None:
        if set(self.terms) <= {()}:
            return self.terms.get((), ZERO)
        return None

    def words(self) -> list[tuple[QScalar, SphereWord]]:
        """Terms as ``(coefficient, SphereWord)``; fails unless in normal form."""
        return [(c, SphereWord(w, self.n)) for w, c in sorted(self.terms.items())]

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, SpherePoly):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __repr__(self):
        return f"SpherePoly(ell={self.ell}, terms={len(self.terms)})"


def z(ell: int, i: int) -> SpherePoly:
    if not 1 <= i <= ell + 1:
        raise DomainError(f"generator index {i} outside 1..{ell + 1}")
    return SpherePoly(ell, {((i, 0),): ONE})


def zstar(ell: int, i: int) -> SpherePoly:
    if not 1 <= i <= ell + 1:
        raise DomainError(f"generator index {i} outside 1..{ell + 1}")
    return SpherePoly(ell, {((i, 1),): ONE})


# ---------------------------------------------------------------------------
# rewriting


@lru_cache(maxsize=None)
def _rewrite_pair(a: Letter, b: Letter, n: int) -> tuple:
    """Replacement of ``ab`` as ``((coeff, letters), ...)``."""
    (i, s), (j, t) = a, b
    q, qi = qpow(1), qpow(-1)
    if s == 0 and t == 0:
        return ((qi, (b, a)),)
    if s == 1 and t == 1:
        return ((qi, (b, a)),)
    if s == 1 and t == 0:
        if i != j:
            return ((q, (b, a)),)
        out = [(ONE, ((i, 0), (i, 1)))]
        c = ONE - q * q
        out += [(c, ((k, 0), (k, 1))) for k in range(1, i)]
        return tuple(out)
    # z_n z_n*
    return ((ONE, ()),) + tuple((-ONE, ((k, 0), (k, 1))) for k in range(1, n))


def _find(w: tuple, n: int, strategy: str) -> int:
    rng = range(len(w) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for p in rng:
        if _reducible(w[p], w[p + 1], n):
            return p
    return -1


@lru_cache(maxsize=None)
def _reduce_word(w: tuple, n: int, strategy: str) -> tuple:
    p = _find(w, n, strategy)
    if p < 0:
        return ((w, ONE),)
    acc: dict = {}
    for c, rep in _rewrite_pair(w[p], w[p + 1], n):
        for u, d in _reduce_word(w[:p] + rep + w[p + 2:], n, strategy):
            v = acc[u] + c * d if u in acc else c * d
            if v.is_zero():
                acc.pop(u)
            else:
                acc[u] = v
    return tuple(acc.items())


STRATEGIES = ("leftmost", "rightmost")


def normal_form(p: SpherePoly, strategy: str = "leftmost") -> SpherePoly:
    """Reduce every word to normal order (``strategy`` picks the redex)."""
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}")
    out = SpherePoly(p.ell)
    for w, c in p.terms.items():
        for u, d in _reduce_word(w, p.n, strategy):
            out._add(u, c * d)
    return out


def is_normal(p: SpherePoly) -> bool:
    return all(_find(w, p.n, "leftmost") < 0 for w in p.terms)


# ---------------------------------------------------------------------------
# partition of unity and grading


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All ``(j_1..j_parts)`` of non-negative integers summing to ``total``."""
    out = []
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, js = -1, []
        for b in bars:
            js.append(b - prev - 1)
            prev = b
        js.append(total + parts - 1 - prev - 1)
        out.append(tuple(js))
    return out


def z_power(ell: int, j: Iterable[int]) -> SpherePoly:
    """``z^j = z_1^{j_1} ... z_n^{j_n}``."""
    letters = tuple((i, 0) for i, ji in enumerate(j, 1) for _ in range(ji))
    return SpherePoly(ell, {letters: ONE})


def c_N(ell: int, N: int, insert: SpherePoly | None = None) -> SpherePoly:
    """``sum_{|j|=N} [j]! z^j (insert) (z^j)*`` before reduction."""
    mid = insert if insert is not None else SpherePoly.scalar(ell, 1)
    out = SpherePoly(ell)
    for j in compositions(N, ell + 1):
        zj = z_power(ell, j)
        out = out + (zj * mid * zj.star()).scale(qmultinom(j))
    return out


def sphere_relation(ell: int) -> SpherePoly:
    """``sum_i z_i z_i*``."""
    return sum((z(ell, i) * zstar(ell, i) for i in range(1, ell + 2)), SpherePoly(ell))


def partition_of_unity_check(ell: int, N: int, strategy: str = "leftmost"):
    """``(ok, residual, summands)`` for ``sum_{|j|=N} [j]! z^j (z^j)* = 1``."""
    if N < 0:
        raise DomainError("N must be >= 0")
    summands = len(compositions(N, ell + 1))
    residual = normal_form(c_N(ell, N), strategy) - 1
    return residual.is_zero(), residual, summands


def khat_grading(p: SpherePoly):
    """Common ``N = deg_z* - deg_z`` of the normal form, or ``MIXED``.

    ``None`` for the zero polynomial, which lies in every graded piece.
    """
    nf = p if is_normal(p) else normal_form(p)
    degs = {sum(1 if s else -1 for _, s in w) for w in nf.terms}
    if not degs:
        return None
    if len(degs) > 1:
        return MIXED
    return degs.pop()


def khat_eigenvalue(ell: int, N: int) -> QScalar:
    """``q^(l N/(l+1))``, the K-hat eigenvalue on the degree-N piece."""
    return qpow(Fraction(ell * N, ell + 1))


def khat_action(p: SpherePoly) -> QScalar | None:
    """Eigenvalue of ``L_Khat a = a <| Khat^-1`` read off the representation pi.

    ``z_i`` is a matrix coefficient in the last row, so ``z_i <| Khat`` is
    ``pi(Khat)_{nn} z_i`` and ``z_i* <| Khat`` is its inverse times ``z_i*``.
    ``None`` when the terms do not share one eigenvalue.
    """
    from .uqsl import fundamental_rep

    top = qpow(fundamental_rep(p.ell).kh_exp[-1])
    vals = set()
    for w in normal_form(p).terms:
        right = ONE
        for _, st in w:
            right = right * (top.inverse() if st else top)
        vals.add(right.inverse())
    return vals.pop() if len(vals) == 1 else None


def psi_entries(ell: int, N: int) -> list[SpherePoly]:
    """The monomials ``(z^j)*`` with ``|j| = N`` (square-rooted weights dropped)."""
    return [z_power(ell, j).star() for j in compositions(N, ell + 1)]


def random_poly(rng, ell: int, max_degree: int = 6, terms: int = 3) -> SpherePoly:
    """A random polynomial with small integer-times-power-of-q coefficients."""
    out = SpherePoly(ell)
    for _ in range(terms):
        d = rng.randint(0, max_degree)
        w = tuple((rng.randint(1, ell + 1), rng.randint(0, 1)) for _ in range(d))
        c = qpow(rng.randint(-2, 2)) * rng.choice([-2, -1, 1, 2, 3])
        out = out + SpherePoly(ell, {w: c})
    return out


def run_suite(ell: int, max_N: int = 4, samples: int = 100, seed: int = 0):
    """Partition of unity, recurrence, confluence sample and grading checks."""
    import random

    res = []
    rel = normal_form(sphere_relation(ell))
    res.append(("sphere relation reduces to 1", rel == SpherePoly.scalar(ell, 1), 0))
    for N in range(max_N + 1):
        ok, residual, _ = partition_of_unity_check(ell, N)
        res.append((f"partition of unity N={N}", ok, len(residual.terms)))
    for N in range(min(max_N, 3)):
        lhs = normal_form(c_N(ell, N, sphere_relation(ell)))
        rhs = normal_form(c_N(ell, N + 1))
        res.append((f"c_{N} recurrence", lhs == rhs, 0))
    rng = random.Random(seed)
    idem = agree = True
    for _ in range(samples):
        p = random_poly(rng, ell)
        a, b = normal_form(p, "leftmost"), normal_form(p, "rightmost")
        idem = idem and normal_form(a) == a and is_normal(a)
        agree = agree and a == b
    res.append(("normal form idempotent", idem, 0))
    res.append(("strategies agree", agree, 0))
    ok = all(khat_grading(m) == N and khat_action(m) == khat_eigenvalue(ell, N)
             for N in range(max_N + 1) for m in psi_entries(ell, N))
    res.append(("Psi_N entries graded by N", ok, 0))
    return res
