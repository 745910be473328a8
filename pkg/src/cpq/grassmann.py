"""The q-Grassmann algebra Gr^l_q = W_0 + ... + W_l.

W_k has basis the multi-indices of length k in lexicographic order.  The
whole algebra is handled as one 2^l dimensional space ordered by degree
and then lexicographically; operators are :class:`QMatrix` on that space,
optionally tagged antilinear (conjugate the input first).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .combinatorics import (
    all_multiindices, complement, enumerate_multiindices, enumerate_shuffles,
    inversion_count, sharp, shift, weight,
)
from .qmatrix import QMatrix
from .qscalar import I_UNIT, ONE, ZERO, DomainError, QScalar, as_qscalar, qbinom, qpow
from .uqsl import E, F, K, MatrixRep, NCElement, defining_relations


class GrVector:
    """A homogeneous element of degree ``degree`` in Gr^l_q."""

    __slots__ = ("ell", "degree", "coeffs")

    def __init__(self, ell: int, degree: int, coeffs: dict | None = None):
        if not 0 <= degree <= ell:
            raise DomainError(f"degree {degree} outside 0..{ell}")
        self.ell, self.degree = ell, degree
        self.coeffs: dict = {}
        for i, c in (coeffs or {}).items():
            i = tuple(i)
            if len(i) != degree:
                raise DomainError(f"index {i} has wrong length for degree {degree}")
            c = as_qscalar(c)
            if not c.is_zero():
                self.coeffs[i] = c

    @classmethod
    def basis(cls, ell: int, i: Iterable[int]) -> "GrVector":
        i = tuple(i)
        return cls(ell, len(i), {i: ONE})

    def __getitem__(self, i) -> QScalar:
        return self.coeffs.get(tuple(i), ZERO)

    def __add__(self, other: "GrVector") -> "GrVector":
        if (self.ell, self.degree) != (other.ell, other.degree):
            raise DomainError("degree mismatch")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out[i] + c if i in out else c
        return GrVector(self.ell, self.degree, out)

    def scale(self, c) -> "GrVector":
        c = as_qscalar(c)
        return GrVector(self.ell, self.degree, {i: v * c for i, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, GrVector):
            return NotImplemented
        return (self.ell, self.degree, self.coeffs) == (other.ell, other.degree, other.coeffs)

    def __repr__(self):
        return f"GrVector(ell={self.ell}, degree={self.degree}, nnz={len(self.coeffs)})"

    def to_full(self) -> list[QScalar]:
        idx = _index(self.ell)
        v = [ZERO] * (1 << self.ell)
        for i, c in self.coeffs.items():
            v[idx[i]] = c
        return v


@lru_cache(maxsize=None)
def _basis(ell: int) -> tuple:
    return tuple(all_multiindices(ell))


@lru_cache(maxsize=None)
def _index(ell: int) -> dict:
    return {i: n for n, i in enumerate(_basis(ell))}


def from_full(ell: int, vec: list[QScalar]) -> dict[int, GrVector]:
    """Split a full-space vector into its non-zero homogeneous parts."""
    parts: dict = {}
    for i, c in zip(_basis(ell), vec):
        if not c.is_zero():
            parts.setdefault(len(i), {})[i] = c
    return {k: GrVector(ell, k, d) for k, d in parts.items()}


# ---------------------------------------------------------------------------
# wedge product


def wedge(v: GrVector, w: GrVector) -> GrVector:
    """``v ^_q w``; the zero vector of degree ``l`` stands in when ``h+k > l``."""
    if v.ell != w.ell:
        raise DomainError("rank mismatch")
    ell, h, k = v.ell, v.degree, w.degree
    if h + k > ell:
        return GrVector(ell, ell)
    out = {}
    shuffles = [(p, (-qpow(-1)) ** inversion_count(p)) for p in enumerate_shuffles(h, k)]
    for i in enumerate_multiindices(ell, h + k):
        s = ZERO
        for p, sign in shuffles:
            a = v[tuple(i[p(r) - 1] for r in range(1, h + 1))]
            if a.is_zero():
                continue
            b = w[tuple(i[p(r) - 1] for r in range(h + 1, h + k + 1))]
            if not b.is_zero():
                s = s + sign * a * b
        if not s.is_zero():
            out[i] = s
    return GrVector(ell, h + k, out)


def wedge_degree_one_left(v: GrVector, w: GrVector) -> GrVector:
    """``v ^ w`` for ``deg v = 1`` via ``sum_r (-q)^(1-r) v_{i_r} w_{i without i_r}``."""
    ell, k = w.ell, w.degree
    if v.degree != 1:
        raise DomainError("v must have degree 1")
    if k + 1 > ell:
        return GrVector(ell, ell)
    out = {}
    for i in enumerate_multiindices(ell, k + 1):
        s = ZERO
        for r in range(1, k + 2):
            s = s + (-qpow(1)) ** (1 - r) * v[(i[r - 1],)] * w[i[:r - 1] + i[r:]]
        out[i] = s
    return GrVector(ell, k + 1, out)


def wedge_degree_one_right(w: GrVector, v: GrVector) -> GrVector:
    """``w ^ v`` for ``deg v = 1`` via ``sum_r (-q)^(r-k-1) w_{i without i_r} v_{i_r}``."""
    ell, k = w.ell, w.degree
    if v.degree != 1:
        raise DomainError("v must have degree 1")
    if k + 1 > ell:
        return GrVector(ell, ell)
    out = {}
    for i in enumerate_multiindices(ell, k + 1):
        s = ZERO
        for r in range(1, k + 2):
            s = s + (-qpow(1)) ** (r - k - 1) * w[i[:r - 1] + i[r:]] * v[(i[r - 1],)]
        out[i] = s
    return GrVector(ell, k + 1, out)


# ---------------------------------------------------------------------------
# operators


class GrOperator:
    """Operator on the full Gr^l_q, linear or antilinear."""

    __slots__ = ("ell", "matrix", "antilinear")

    def __init__(self, ell: int, matrix: QMatrix, antilinear: bool = False):
        n = 1 << ell
        if matrix.shape != (n, n):
            raise DomainError(f"expected a {n}x{n} matrix")
        self.ell, self.matrix, self.antilinear = ell, matrix, antilinear

    @classmethod
    def identity(cls, ell: int) -> "GrOperator":
        return cls(ell, QMatrix.identity(1 << ell))

    @classmethod
    def from_block(cls, ell: int, k_dom: int, k_cod: int, block: QMatrix,
                   antilinear: bool = False) -> "GrOperator":
        """Embed a ``W_{k_dom} -> W_{k_cod}`` matrix into the full space."""
        idx = _index(ell)
        dom = enumerate_multiindices(ell, k_dom)
        cod = enumerate_multiindices(ell, k_cod)
        if block.shape != (len(cod), len(dom)):
            raise DomainError("block shape does not match the degrees")
        m = QMatrix((1 << ell, 1 << ell))
        for r, c, v in block.entries():
            m.add_to(idx[cod[r]], idx[dom[c]], v)
        return cls(ell, m, antilinear)

    def block(self, k_dom: int, k_cod: int) -> QMatrix:
        idx = _index(self.ell)
        dom = enumerate_multiindices(self.ell, k_dom)
        cod = enumerate_multiindices(self.ell, k_cod)
        return QMatrix.from_entries((len(cod), len(dom)),
                                    [(r, c, self.matrix[idx[a], idx[b]])
                                     for r, a in enumerate(cod) for c, b in enumerate(dom)])

    def __call__(self, v: GrVector) -> dict[int, GrVector]:
        vec = v.to_full()
        if self.antilinear:
            vec = [x.conjugate() for x in vec]
        return from_full(self.ell, self.matrix.apply(vec))

    def compose(self, other: "GrOperator") -> "GrOperator":
        """``self o other``."""
        right = other.matrix.conj() if self.antilinear else other.matrix
        return GrOperator(self.ell, self.matrix @ right, self.antilinear != other.antilinear)

    __matmul__ = compose

    def inverse(self) -> "GrOperator":
        """Inverse of a monomial matrix (one non-zero entry per row and column)."""
        inv = QMatrix(self.matrix.shape)
        seen = set()
        for i, j, v in self.matrix.entries():
            if j in seen:
                raise DomainError("only monomial operators can be inverted")
            seen.add(j)
            inv.add_to(j, i, v.inverse())
        if len(seen) != self.matrix.shape[0]:
            raise DomainError("operator is singular")
        return GrOperator(self.ell, inv.conj() if self.antilinear else inv, self.antilinear)

    def scale(self, c) -> "GrOperator":
        return GrOperator(self.ell, self.matrix.scale(c), self.antilinear)

    def adjoint(self) -> "GrOperator":
        if self.antilinear:
            raise DomainError("adjoint of an antilinear operator is not defined here")
        return GrOperator(self.ell, self.matrix.adjoint())

    def __add__(self, other: "GrOperator") -> "GrOperator":
        if self.antilinear != other.antilinear:
            raise DomainError("cannot add linear and antilinear operators")
        return GrOperator(self.ell, self.matrix + other.matrix, self.antilinear)

    def __sub__(self, other: "GrOperator") -> "GrOperator":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, GrOperator):
            return NotImplemented
        return (self.ell, self.antilinear) == (other.ell, other.antilinear) and self.matrix == other.matrix

    def __repr__(self):
        kind = "antilinear" if self.antilinear else "linear"
        return f"GrOperator(ell={self.ell}, {kind}, nnz={self.matrix.nnz()})"


def _operator_from_map(ell: int, f) -> GrOperator:
    """Matrix of a linear map given on basis vectors."""
    idx = _index(ell)
    m = QMatrix((1 << ell, 1 << ell))
    for col, i in enumerate(_basis(ell)):
        out = f(GrVector.basis(ell, i))
        if out is None:
            continue
        for j, c in out.coeffs.items():
            m.add_to(idx[j], col, c)
    return GrOperator(ell, m)


# ---------------------------------------------------------------------------
# the representations sigma_k of U_q(su(l))


@lru_cache(maxsize=None)
def sigma_rep(ell: int, k: int) -> MatrixRep:
    """sigma_k as a representation of U_q(su(l)) (rank ``l-1``) on W_k."""
    if not 0 <= k <= ell:
        raise DomainError(f"k={k} outside 0..{ell}")
    basis = enumerate_multiindices(ell, k)
    pos = {i: n for n, i in enumerate(basis)}
    d = len(basis)
    k_exp, e, f = [], [], []
    for j in range(1, ell):
        k_exp.append([sharp(j, i) / 2 for i in basis])
        em, fm = QMatrix((d, d)), QMatrix((d, d))
        for i in basis:
            s = sharp(j, i)
            if s == 1:
                em.add_to(pos[i], pos[shift(i, j, "+")], ONE)
            elif s == -1:
                fm.add_to(pos[i], pos[shift(i, j, "-")], ONE)
        e.append(em)
        f.append(fm)
    return MatrixRep(ell - 1, k_exp, e, f, label=f"sigma_{k}", dim=d)


_GENERATORS = {"K": lambda j: K(j), "Kinv": lambda j: K(j, -1), "E": E, "F": F}


def sigma_k(ell: int, k: int, generator: str, j: int) -> GrOperator:
    """sigma_k of ``K_j``, ``K_j^-1`` (``"Kinv"``), ``E_j`` or ``F_j`` on W_k."""
    if not 1 <= j <= ell - 1:
        raise DomainError(f"j={j} outside 1..{ell - 1}")
    if generator not in _GENERATORS:
        raise DomainError(f"unknown generator {generator!r}")
    m = sigma_rep(ell, k).evaluate(_GENERATORS[generator](j))
    return GrOperator.from_block(ell, k, k, m)


def sigma_full(ell: int, x: NCElement) -> GrOperator:
    """``x`` acting on every W_k at once (block diagonal)."""
    idx = _index(ell)
    m = QMatrix((1 << ell, 1 << ell))
    for k in range(ell + 1):
        basis = enumerate_multiindices(ell, k)
        for r, c, v in sigma_rep(ell, k).evaluate(x).entries():
            m.add_to(idx[basis[r]], idx[basis[c]], v)
    return GrOperator(ell, m)


# ---------------------------------------------------------------------------
# J, exterior products and contractions


def _j_coefficient(ell: int, i) -> QScalar:
    return (-qpow(-1)) ** weight(i) * qpow(Fraction(ell * (ell + 1), 4))


@lru_cache(maxsize=None)
def jmap_operator(ell: int) -> GrOperator:
    """The antilinear ``J: W_k -> W_{l-k}`` on the whole algebra."""
    idx = _index(ell)
    m = QMatrix((1 << ell, 1 << ell))
    for i in _basis(ell):
        m.add_to(idx[i], idx[complement(i, ell)], _j_coefficient(ell, i))
    return GrOperator(ell, m, antilinear=True)


def jmap(w: GrVector) -> GrVector:
    """``(Jw)_i = (-q^-1)^{|i|} q^{l(l+1)/4} conj(w_{i^c})``."""
    ell = w.ell
    out = {}
    for i in enumerate_multiindices(ell, ell - w.degree):
        c = w[complement(i, ell)]
        if not c.is_zero():
            out[i] = _j_coefficient(ell, i) * c.conjugate()
    return GrVector(ell, ell - w.degree, out)


def j_square_sign(ell: int) -> int:
    return -1 if (ell + 1) // 2 % 2 else 1


def exterior(x: GrVector, side: str = "L") -> GrOperator:
    """``e^L_x w = x ^ w`` or ``e^R_x w = (-q)^k w ^ x`` on every degree."""
    ell = x.ell
    if side == "L":
        return _operator_from_map(ell, lambda w: wedge(x, w))
    if side == "R":
        if x.degree != 1:
            raise DomainError("right exterior product needs a degree-1 vector")
        return _operator_from_map(ell, lambda w: wedge(w, x).scale((-qpow(1)) ** w.degree))
    raise DomainError(f"side must be 'L' or 'R', got {side!r}")


def contraction(x: GrVector, side: str = "L") -> GrOperator:
    """Adjoint of the exterior product; the right one by its closed form."""
    if side == "L":
        return exterior(x, "L").adjoint()
    if side != "R":
        raise DomainError(f"side must be 'L' or 'R', got {side!r}")
    if x.degree != 1:
        raise DomainError("contraction needs a degree-1 vector")
    ell = x.ell
    idx = _index(ell)
    m = QMatrix((1 << ell, 1 << ell))
    mq = -qpow(1)
    for i in _basis(ell):
        for j in range(1, ell + 1):
            if j in i:
                continue
            xj = x[(j,)]
            if xj.is_zero():
                continue
            ij = tuple(sorted(i + (j,)))
            m.add_to(idx[i], idx[ij], mq ** (ij.index(j)) * xj.conjugate())
    return GrOperator(ell, m)


def qdim_W(ell: int, k: int) -> QScalar:
    """``sum_{i in Lambda_k} q^(k(l+1) - 2|i|)``."""
    if not 0 <= k <= ell:
        raise DomainError(f"k={k} outside 0..{ell}")
    s = ZERO
    for i in enumerate_multiindices(ell, k):
        s = s + qpow(k * (ell + 1) - 2 * weight(i))
    return s


def qdim_trace(ell: int, k: int) -> QScalar:
    """Trace of ``prod_j K_j^(2j(l-j))`` in sigma_k."""
    x = NCElement.word(*(("K", j, Fraction(2 * j * (ell - j))) for j in range(1, ell)))
    m = sigma_rep(ell, k).evaluate(x)
    s = ZERO
    for v in m.diagonal():
        s = s + v
    return s


def total_dimension(ell: int) -> int:
    return sum(math.comb(ell, k) for k in range(ell + 1))


# ---------------------------------------------------------------------------
# suite


def run_suite(ell: int) -> list[tuple[str, bool, int]]:
    """Relation, associativity, equivariance, J and qdim checks for rank ``ell``."""
    res = []
    for k in range(ell + 1):
        res += [(f"sigma_{k} {n}", ok, z) for n, ok, z in defining_relations(sigma_rep(ell, k))]
    res += [(n, ok, 0) for n, ok in wedge_checks(ell)]
    res += [(n, ok, 0) for n, ok in j_checks(ell)]
    for k in range(ell + 1):
        a, b, c = qdim_W(ell, k), qbinom(ell, k), qdim_trace(ell, k)
        res.append((f"qdim W_{k} = q-binomial", a == b, 0))
        res.append((f"qdim W_{k} = trace", a == c, 0))
        res.append((f"qdim W_{k} q<->1/q", a == invert_q(a), 0))
    return res


def invert_q(x: QScalar) -> QScalar:
    """``x(q^-1)``: negate every exponent."""
    return QScalar({-e: c for e, c in x.num.items()}, {-e: c for e, c in x.den.items()}, x.r)


def basis_vectors(ell: int, k: int) -> list[GrVector]:
    return [GrVector.basis(ell, i) for i in enumerate_multiindices(ell, k)]


def wedge_checks(ell: int) -> list[tuple[str, bool]]:
    """Associativity, equivariance under generators and the degree-one formulas."""
    out = []
    vecs = {k: basis_vectors(ell, k) for k in range(ell + 1)}
    assoc = True
    for a in range(ell + 1):
        for b in range(ell + 1 - a):
            for c in range(ell + 1 - a - b):
                for u in vecs[a]:
                    for v in vecs[b]:
                        uv = wedge(u, v)
                        for w in vecs[c]:
                            if wedge(uv, w) != wedge(u, wedge(v, w)):
                                assoc = False
    out.append(("wedge associative", assoc))
    for j in range(1, ell):
        for name, x in (("K", K(j)), ("E", E(j)), ("F", F(j))):
            ok = True
            cop = x.coproduct().terms
            for h in range(ell + 1):
                for k in range(ell + 1 - h):
                    left_rep, right_rep, top = sigma_rep(ell, h), sigma_rep(ell, k), sigma_rep(ell, h + k)
                    for v in vecs[h]:
                        for w in vecs[k]:
                            lhs = _apply(top, x, wedge(v, w))
                            rhs = GrVector(ell, h + k)
                            for (w1, w2), c in cop.items():
                                a = _apply(left_rep, NCElement({w1: c}), v)
                                b = _apply(right_rep, NCElement.word(*w2), w)
                                rhs = rhs + wedge(a, b)
                            ok = ok and lhs == rhs
            out.append((f"wedge equivariant {name}{j}", ok))
    ok1 = True
    for k in range(ell):
        for v in vecs[1]:
            for w in vecs[k]:
                ok1 = ok1 and wedge(v, w) == wedge_degree_one_left(v, w)
                ok1 = ok1 and wedge(w, v) == wedge_degree_one_right(w, v)
    out.append(("degree-one product formulas", ok1))
    out.append(("dim Gr = 2^l", total_dimension(ell) == 2 ** ell))
    return out


def _apply(rep: MatrixRep, x: NCElement, v: GrVector) -> GrVector:
    basis = enumerate_multiindices(v.ell, v.degree)
    vec = [v[i] for i in basis]
    res = rep.evaluate(x).apply(vec)
    return GrVector(v.ell, v.degree, {i: c for i, c in zip(basis, res)})


def j_checks(ell: int) -> list[tuple[str, bool]]:
    """J^2, J-equivariance and the conjugation of exterior products by J."""
    out = []
    J = jmap_operator(ell)
    Jinv = J.inverse()
    s = j_square_sign(ell)
    out.append(("J^2 sign", J @ J == GrOperator.identity(ell).scale(s)))
    out.append(("J inverse", J @ Jinv == GrOperator.identity(ell)))
    ok = all(jmap(jmap(v)) == v.scale(s) for k in range(ell + 1) for v in basis_vectors(ell, k))
    out.append(("J^2 on basis vectors", ok))
    for j in range(1, ell):
        for name, x in (("K", K(j)), ("E", E(j)), ("F", F(j))):
            lhs = sigma_full(ell, x.star()) @ J
            rhs = J @ sigma_full(ell, x.antipode())
            out.append((f"J equivariance {name}{j}", lhs == rhs))
    xs = basis_vectors(ell, 1)
    if ell >= 2:
        xs.append(GrVector(ell, 1, {(1,): ONE, (2,): I_UNIT}))
    ok = True
    for x in xs:
        ok = ok and J @ exterior(x, "L") @ Jinv == contraction(x, "R").scale(-qpow(1))
    out.append(("J e^L J^-1 = -q i^R", ok))
    ok = all(contraction(x, "R") == exterior(x, "R").adjoint() for x in xs)
    out.append(("i^R closed form = adjoint of e^R", ok))
    return out
