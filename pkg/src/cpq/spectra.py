"""Casimir eigenvalues, the harmonic decomposition of Omega^k_N and D_N spectra.

Everything is exact in :class:`QScalar` until the caller asks for numbers.
The per-block value of ``D_N^2`` is the ground truth; the pairing of blocks
into ``+-`` eigenvalues of ``D_N`` is derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
import numpy as np

from .qscalar import ONE, ZERO, DomainError, QScalar, qnum, qpow

HighestWeight = tuple


class PairingError(RuntimeError):
    """Blocks with non-zero D^2 that do not pair across adjacent degrees."""


def _weight(ell: int, n: Sequence[int]) -> HighestWeight:
    n = tuple(int(x) for x in n)
    if len(n) != ell:
        raise DomainError(f"weight {n} has length {len(n)}, expected {ell}")
    if any(x < 0 for x in n):
        raise DomainError(f"weight {n} has negative entries")
    return n


@lru_cache(maxsize=None)
def _pole() -> QScalar:
    d = qpow(1) - qpow(-1)
    return (d * d).inverse()


# ---------------------------------------------------------------------------
# Casimir values and dimensions


@lru_cache(maxsize=None)
def casimir_eigenvalue(ell: int, n: HighestWeight) -> QScalar:
    """The closed form ``1/2 sum [x_i]^2 + (l+1-[l+1])/(q-q^-1)^2``.

    This symmetric form agrees with the action of C_q on a highest-weight
    vector only for ``l = 1`` or at ``q = 1``; see
    :func:`casimir_highest_weight` for the value the engine uses.
    """
    n = _weight(ell, n)
    s = ZERO
    for i in range(1, ell + 2):
        a = sum(j * n[j - 1] for j in range(1, i)) - sum((ell + 1 - j) * n[j - 1] for j in range(i, ell + 1))
        x = Fraction(a, ell + 1) + i - Fraction(ell + 2, 2)
        v = qnum(x)
        s = s + v * v
    return s * Fraction(1, 2) + (ONE * (ell + 1) - qnum(ell + 1)) * _pole()


@lru_cache(maxsize=None)
def casimir_highest_weight(ell: int, n: HighestWeight) -> QScalar:
    """Eigenvalue of C_q on V_n, read off the highest-weight vector.

    Only the Cartan part of C_q survives there, giving
    ``(sum_i q^(2 y_i) - [l+1]) / (q - q^-1)^2`` with
    ``y_i = l/2 + 1 - i + sum_{j>=i} n_j - sum_j j n_j / (l+1)``.
    """
    n = _weight(ell, n)
    h = Fraction(sum(j * n[j - 1] for j in range(1, ell + 1)), ell + 1)
    tot = ZERO
    for i in range(1, ell + 2):
        y = Fraction(ell, 2) + 1 - i + sum(n[i - 1:]) - h
        tot = tot + qpow(2 * y)
    return (tot - qnum(ell + 1)) * _pole()


def weyl_dim(ell: int, n: Sequence[int]) -> int:
    n = _weight(ell, n)
    num = 1
    for r in range(1, ell + 1):
        for s in range(r, ell + 1):
            num *= s - r + 1 + sum(n[r - 1:s])
    den = math.prod(math.factorial(r) for r in range(1, ell + 1))
    if num % den:
        raise ArithmeticError(f"non-integral Weyl dimension for {n}")
    return num // den


def hook_dim(ell: int, n1: int, nl: int, k: int) -> int:
    """Dimension of V at weight ``(n1, 0, ..., 0, nl) + e_k``, closed form."""
    if not 1 <= k <= ell:
        raise DomainError(f"k={k} outside 1..{ell}")
    v = (Fraction(k * (n1 + nl + ell + 1), (n1 + k) * (nl + ell + 1 - k))
         * math.comb(n1 + ell, ell) * math.comb(nl + ell, ell) * math.comb(ell, k))
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral dimension for ({n1},{nl},{k})")
    return int(v)


def hook_weight(ell: int, n1: int, nl: int, k: int | None = None) -> HighestWeight:
    """``n1 e_1 + nl e_l (+ e_k)``; for ``l = 1`` both land in the one slot."""
    n = [0] * ell
    n[0] += n1
    n[-1] += nl
    if k:
        n[k - 1] += 1
    return tuple(n)


def eig_lambda(ell: int, n1: int, nl: int, k: int) -> QScalar:
    """The hook-weight eigenvalue, with ``N = n1 - nl + k``."""
    if not 1 <= k <= ell:
        raise DomainError(f"k={k} outside 1..{ell}")
    N = Fraction(n1 - nl + k)
    a = qnum(n1 + k) * qnum(n1 - 2 * N / (ell + 1) + ell + 2 - k)
    b = qnum(nl) * qnum(nl + 2 * N / (ell + 1) + ell)
    c = qnum(N / (ell + 1))
    return (a + b + qnum(ell + 1) * c * c) * Fraction(1, 2)


# ---------------------------------------------------------------------------
# harmonic decomposition


@dataclass(frozen=True)
class IrrepBlock:
    weight: HighestWeight
    dim: int
    casimir: QScalar
    casimir_reversed: QScalar
    level: int
    case: str


@dataclass
class DecompositionTable:
    ell: int
    N: int
    k: int
    m_max: int
    blocks: list[IrrepBlock] = field(default_factory=list)


def _block_weights(ell: int, N: int, k: int, m: int) -> list[tuple[str, HighestWeight]]:
    w = lambda a, b, e=None: hook_weight(ell, a, b, e)
    if k == 0:
        return [("k=0, N>=0", w(m + N, m))] if N >= 0 else [("k=0, N<0", w(m, m - N))]
    if k == ell:
        if N <= ell:
            return [("k=l, N<=l", w(m, m - N + ell + 1))]
        return [("k=l, N>l", w(m + N - ell - 1, m))]
    if 1 <= k <= min(N, ell) - 1:
        return [("1<=k<N", w(m + N - k, m, k)), ("1<=k<N", w(m + N - k - 1, m, k + 1))]
    if max(1, N) <= k <= ell - 1:
        return [("N<=k<l", w(m, m - N + k, k)), ("N<=k<l", w(m, m - N + k + 1, k + 1))]
    raise AssertionError(f"no decomposition branch for N={N}, k={k}")


def harmonic_decomposition(ell: int, N: int, k: int, m_max: int) -> DecompositionTable:
    if not 0 <= k <= ell:
        raise DomainError(f"k={k} outside 0..{ell}")
    if m_max < 0:
        raise DomainError("m_max must be >= 0")
    table = DecompositionTable(ell, N, k, m_max)
    for m in range(m_max + 1):
        for case, n in _block_weights(ell, N, k, m):
            table.blocks.append(IrrepBlock(
                weight=n, dim=weyl_dim(ell, n),
                casimir=casimir_highest_weight(ell, n),
                casimir_reversed=casimir_highest_weight(ell, n[::-1]),
                level=m, case=case))
    return table


# ---------------------------------------------------------------------------
# Laplacian and D_N^2 per block


def _unit_weight(rank: int, k: int) -> HighestWeight:
    return tuple(int(i == k) for i in range(1, rank + 1))


@lru_cache(maxsize=None)
def laplacian_constant(ell: int, k: int, N: int) -> QScalar:
    """Eigenvalue of ``C_q - sum_i q^(l+1-2i) X_i X_i^*`` on Omega^k_N.

    C'_q enters through its highest-weight value on the weight ``e_k`` of
    rank ``l-1`` (zero for ``k`` in ``{0, l}``).
    """
    cp = casimir_highest_weight(ell - 1, _unit_weight(ell - 1, k)) if 0 < k < ell else ZERO
    return _laplacian_constant(ell, k, N, cp)


@lru_cache(maxsize=None)
def laplacian_constant_printed(ell: int, k: int, N: int) -> QScalar:
    """Same constant with the symmetric closed form for the C'_q value."""
    kk = Fraction(k, ell)
    cp = (qnum(k) * qnum(ell + 1 - (ell + 2) * kk) + qnum(ell) * qnum(kk) * qnum(kk)) * Fraction(1, 2)
    return _laplacian_constant(ell, k, N, cp)


def _laplacian_constant(ell, k, N, cp: QScalar) -> QScalar:
    c = _pole()
    a = qpow(1 + Fraction(2 * k, ell) - Fraction(2 * N, ell + 1)) * (cp + qnum(ell) * c)
    b = qpow(-2 * k + ell * (Fraction(2 * N, ell + 1) - 1)) * c
    return a + b - qnum(ell + 1) * c


def dddag_constant(ell: int, k: int, N: int) -> QScalar:
    """The additive constant ``q^(N-l-k) [k][l+1-N]`` of the Laplacian."""
    return qpow(N - ell - k) * qnum(k) * qnum(ell + 1 - N)


def _xx_values(ell: int, N: int, k: int, block: IrrepBlock) -> tuple[QScalar, QScalar]:
    """Eigenvalues of ``sum q^-2i X_i X_i^*`` and of its ``S^-1`` mirror."""
    scale = qpow(-(ell + 1))
    a = scale * (block.casimir - laplacian_constant(ell, k, N))
    b = scale * (block.casimir_reversed - laplacian_constant(ell, ell - k, ell + 1 - N))
    return a, b


def laplacian_eigenvalue(ell: int, N: int, k: int, block: IrrepBlock) -> QScalar:
    """``(dbar dbar^+ + dbar^+ dbar)`` on the block."""
    a, _ = _xx_values(ell, N, k, block)
    return qpow(Fraction(2 * N, ell + 1)) * a + dddag_constant(ell, k, N)


_PROBE = 0.5


def dirac_squared_eigenvalue(ell: int, N: int, k: int, block: IrrepBlock, check: bool = True) -> QScalar:
    """``D_N^2`` on the block, from the two Laplacian-type pieces."""
    a, b = _xx_values(ell, N, k, block)
    e = Fraction(N * (ell - 1), ell + 1)
    v = (qpow(k - e) * a + qpow(e - k + 1) * b
         + qpow(-ell) * qnum(k) * qnum(ell + 1 - N)
         + qpow(-ell) * qnum(ell - k) * qnum(N))
    v = v / (ONE + qpow(1))
    if check and not v.is_zero() and v.evaluate(_PROBE, dps=30) < -1e-20:
        raise ArithmeticError(f"negative D^2 on block {block.weight} (l={ell}, N={N}, k={k})")
    return v


# ---------------------------------------------------------------------------
# spectra


@dataclass(frozen=True)
class SpectralLine:
    """One spectral line.

    ``kind`` is ``"d2"`` (a block of D_N^2 in a fixed degree), ``"d"`` (an
    eigenvalue of D_N with sign ``sign``) or ``"kernel"``.  ``value`` is the
    eigenvalue squared; ``numeric`` its float value at the requested q, or
    the exact rational at ``q = 1``.
    """

    kind: str
    degree: int
    level: int
    weight: HighestWeight
    value: object
    multiplicity: int
    sign: int = 0
    numeric: object = None


@dataclass
class Spectrum:
    ell: int
    N: int
    m_max: int
    q: object
    convention: str
    d2_lines: list[SpectralLine]
    d_lines: list[SpectralLine]
    kernel: list[SpectralLine]

    @property
    def kernel_dim(self) -> int:
        return sum(x.multiplicity for x in self.kernel)


def _numeric(v: QScalar, q):
    if q is None:
        return None
    if q == 1:
        return v.at_one()
    return float(v.evaluate(q))


def _parse_q(q):
    if q is None or q == "symbolic":
        return None
    if isinstance(q, str):
        q = Fraction(q)
    if q == 1:
        return 1
    qf = float(q)
    if not 0 < qf < 1:
        raise DomainError("q must lie in (0, 1]")
    return qf


def full_spectrum(ell: int, N: int, m_max: int, q=None, convention: str = "general") -> Spectrum:
    """D_N^2 per block and the derived +-D_N eigenvalues, up to level ``m_max``.

    ``convention="cp1"`` (only for ``l = 1``) reports ``q^(l+1)`` times the
    unweighted Laplacian, i.e. the operator normalised as on the Podles
    sphere; ``"general"`` reports ``D_N^2`` itself.
    """
    if ell < 1:
        raise DomainError("rank must be >= 1")
    if m_max < 0:
        raise DomainError("m_max must be >= 0")
    if convention == "auto":
        convention = "cp1" if ell == 1 else "general"
    if convention not in ("general", "cp1"):
        raise DomainError(f"unknown convention {convention!r}")
    if convention == "cp1" and ell != 1:
        raise DomainError("the cp1 convention applies to l = 1 only")
    qv = _parse_q(q)
    # one extra level: a block's partner may sit one level higher
    occ: dict = {}
    d2_lines = []
    for k in range(ell + 1):
        for b in harmonic_decomposition(ell, N, k, m_max + 1).blocks:
            v = dirac_squared_eigenvalue(ell, N, k, b)
            if convention == "cp1":
                # paired degrees are 0 and 1, so D_N^2 = q^-N Laplacian
                v = v * qpow(ell + 1 + N)
            occ.setdefault(b.weight, []).append((k, b, v))
            if b.level <= m_max:
                d2_lines.append(SpectralLine("d2", k, b.level, b.weight, v, b.dim,
                                             numeric=_numeric(v, qv)))
    kernel, pairs = [], []
    for n, items in occ.items():
        if len(items) == 1 and items[0][2].is_zero():
            k, b, v = items[0]
            if b.level <= m_max:
                kernel.append(SpectralLine("kernel", k, b.level, n, ZERO, b.dim, numeric=_numeric(ZERO, qv)))
            continue
        if len(items) == 1:
            if items[0][1].level > m_max:
                continue
            raise PairingError(f"unpaired block {n} with non-zero D^2")
        if len(items) != 2:
            raise PairingError(f"weight {n} occurs {len(items)} times")
        (k1, b1, v1), (k2, b2, v2) = sorted(items, key=lambda t: t[0])
        if k2 != k1 + 1 or v1 != v2 or v1.is_zero():
            raise PairingError(f"blocks of weight {n} in degrees {k1},{k2} do not pair")
        if min(b1.level, b2.level) <= m_max:
            pairs.append((min(b1.level, b2.level), k1, b1, v1))
    pairs.sort(key=lambda t: (t[0], t[1]))
    grouped: dict = {}
    order = []
    for level, k1, b, v in pairs:
        if v not in grouped:
            grouped[v] = [level, k1, b.weight, 0]
            order.append(v)
        # each pair contributes dim to both degrees; halving gives dim per sign
        total = 2 * b.dim
        if total % 2:
            raise PairingError("odd multiplicity for a non-zero eigenvalue")
        grouped[v][3] += total // 2
    d_lines = []
    for v in order:
        level, k1, n, mult = grouped[v]
        num = _numeric(v, qv)
        for sign in (1, -1):
            d_lines.append(SpectralLine("d", k1, level, n, v, mult, sign=sign, numeric=num))
    kernel.sort(key=lambda x: (x.degree, x.level))
    return Spectrum(ell, N, m_max, q, convention, d2_lines, d_lines, kernel)


def classical_spectrum(ell: int, N: int, m_max: int) -> Spectrum:
    """The q = 1 spectrum of D_N in closed form, ``lambda^2 = (m+N')(m+k)``."""
    if ell < 1 or m_max < 0:
        raise DomainError("need l >= 1 and m_max >= 0")

    def mu(Np, m, k):
        v = (Fraction(k * (2 * m + k + Np), (m + Np) * (m + k))
             * math.comb(m + ell, ell) * math.comb(m + k + Np - 1, ell) * math.comb(ell, k))
        if v.denominator != 1:
            raise ArithmeticError("non-integral multiplicity")
        return int(v)

    series = []
    kernel = []
    if N <= 0:
        kernel.append(SpectralLine("kernel", 0, 0, (), Fraction(0), math.comb(-N + ell, ell), numeric=Fraction(0)))
        series = [(ell + 1 - N, k) for k in range(1, ell + 1)]
    elif N > ell:
        kernel.append(SpectralLine("kernel", ell, 0, (), Fraction(0), math.comb(N - 1, ell), numeric=Fraction(0)))
        series = [(N, k) for k in range(1, ell + 1)]
    else:
        series = [(N, ell + 1 - k) for k in range(1, N)] + [(ell + 1 - N, k) for k in range(N, ell + 1)]
    lines = []
    for m in range(m_max + 1):
        for Np, k in series:
            v = Fraction((m + Np) * (m + k))
            for sign in (1, -1):
                lines.append(SpectralLine("d", k, m, (), v, mu(Np, m, k), sign=sign, numeric=v))
    return Spectrum(ell, N, m_max, 1, "classical", [], lines, kernel)


def classical_threshold(ell: int, N: int, m_max: int) -> Fraction:
    """Smallest classical eigenvalue squared first appearing at level ``m_max + 1``."""
    nxt = classical_spectrum(ell, N, m_max + 1)
    return min(x.value for x in nxt.d_lines if x.level == m_max + 1)


def multiset(lines: Sequence[SpectralLine], below=None) -> dict:
    """``{eigenvalue squared: multiplicity per sign}`` of positive-sign lines."""
    out: dict = {}
    for x in lines:
        if x.sign != 1:
            continue
        v = x.numeric
        if below is not None and v >= below:
            continue
        out[v] = out.get(v, 0) + x.multiplicity
    return out


def simple_formula_l2(N: int, n: HighestWeight) -> QScalar:
    """For l = 2: ``q^(2N/3-3) C_q + (q^N [N] - q^(N/3+2) [3][N/3]) / (1-q^2)``."""
    c = casimir_highest_weight(2, n)
    const = (qpow(N) * qnum(N) - qpow(Fraction(N, 3) + 2) * qnum(3) * qnum(Fraction(N, 3))) / (ONE - qpow(2))
    return qpow(Fraction(2 * N, 3) - 3) * c + const


# ---------------------------------------------------------------------------
# growth


@dataclass
class GrowthReport:
    ell: int
    N: int
    q: float
    m_max: int
    slope: float
    expected_slope: float
    relative_error: float
    level_minima: list[float]
    partial_sums: dict
    tail_ratios: dict


def growth_diagnostics(ell: int, N: int, q: float, m_max: int,
                       exponents: Sequence[float] = (0.5, 0.1, 0.01)) -> GrowthReport:
    """Exponential growth of D_N^2 and summability probes for ``|D_N|^-s``.

    The slope is a least-squares fit of ``log(min non-zero D^2 at level m)``
    against ``m``.  For each ``s`` the tail ratio is the last level-to-level
    ratio of the multiplicity-weighted mean of ``|lambda|^-s``, which
    separates the geometric decay from the polynomial growth of the
    multiplicities.
    """
    q = float(q)
    if not 0 < q < 1:
        raise DomainError("q must lie in (0, 1)")
    if m_max < 5:
        raise DomainError("m_max must be >= 5")
    sp = full_spectrum(ell, N, m_max, q=q)
    per_level: dict = {}
    for x in sp.d_lines:
        if x.sign == 1:
            per_level.setdefault(x.level, []).append((x.numeric, x.multiplicity))
    levels = sorted(per_level)
    minima = [min(v for v, _ in per_level[m]) for m in levels]
    slope = float(np.polyfit(levels, np.log(minima), 1)[0])
    expected = 2 * math.log(1 / q)
    sums, ratios = {}, {}
    for s in exponents:
        weights = [sum(mult * mpmath.power(v, -s / 2) for v, mult in per_level[m]) for m in levels]
        counts = [sum(mult for _, mult in per_level[m]) for m in levels]
        sums[s] = [float(x) for x in np.cumsum([float(2 * w) for w in weights])]
        means = [w / c for w, c in zip(weights, counts)]
        ratios[s] = float(means[-1] / means[-2])
    return GrowthReport(ell, N, q, m_max, slope, expected, abs(slope - expected) / expected,
                        minima, sums, ratios)


def run_suite(ell: int, m_max: int = 4) -> list[tuple[str, bool, int]]:
    """Pairing, kernel, classical-limit and formula checks for rank ``ell``."""
    res = []
    for N in range(-2, ell + 3):
        try:
            sp = full_spectrum(ell, N, m_max, q=1)
            ok = True
        except PairingError:
            res.append((f"pairing N={N}", False, 0))
            continue
        res.append((f"pairing N={N}", ok, 0))
        cl = classical_spectrum(ell, N, m_max)
        t = classical_threshold(ell, N, m_max)
        res.append((f"classical limit N={N}", multiset(sp.d_lines, t) == multiset(cl.d_lines, t), 0))
        res.append((f"kernel dimension N={N}", sp.kernel_dim == cl.kernel[0].multiplicity if cl.kernel
                    else sp.kernel_dim == 0, 0))
    ok = all(weyl_dim(ell, hook_weight(ell, a, b, k)) == hook_dim(ell, a, b, k)
             for a in range(4) for b in range(4) for k in range(1, ell + 1))
    res.append(("hook dimension = Weyl dimension", ok, 0))
    ok = all(eig_lambda(ell, a, b, k) == casimir_eigenvalue(ell, hook_weight(ell, a, b, k))
             for a in range(4) for b in range(4) for k in range(1, ell + 1))
    res.append(("hook eigenvalue = closed Casimir", ok, 0))
    ok = all(casimir_highest_weight(ell, n).at_one() == casimir_eigenvalue(ell, n).at_one()
             for n in _small_weights(ell))
    res.append(("Casimir values agree at q=1", ok, 0))
    if ell == 1:
        sp = full_spectrum(1, 0, 6, convention="cp1")
        # the pair of level k-1 in degree 1 meets level k in degree 0
        vals = {x.level + 1: x.value for x in sp.d_lines if x.sign == 1}
        ok = all(vals[k] == qnum(k) * qnum(k + 1) for k in range(1, 8))
        res.append(("CP^1 eigenvalues [k][k+1]", ok, 0))
    return res


def _small_weights(ell: int):
    import itertools
    return list(itertools.product(range(3), repeat=ell))
