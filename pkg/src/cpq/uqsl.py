"""Word calculus for U_q(su(l+1)) and its evaluation in matrix representations.

Elements are free linear combinations of words in the letters

    ('E', i)  ('F', i)  ('K', i, p)  ('Kh', p)

where ``p`` is a rational power.  Nothing is simplified at the word level;
identities are checked by evaluating both sides in representations where
the group-like generators act diagonally (so fractional powers are exact).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .qmatrix import QMatrix
from .qscalar import ONE, ZERO, DomainError, QScalar, as_qscalar, qnum, qpow

Letter = tuple
Word = tuple


# ---------------------------------------------------------------------------
# elements


class NCElement:
    """Formal sum ``{word: coefficient}``; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Word, QScalar] = {}
        for w, c in (terms or {}).items():
            self._add(w, as_qscalar(c))

    def _add(self, w: Word, c: QScalar):
        if c.is_zero():
            return
        old = self.terms.get(w)
        new = c if old is None else old + c
        if new.is_zero():
            self.terms.pop(w, None)
        else:
            self.terms[w] = new

    @classmethod
    def word(cls, *letters: Letter, coeff=1) -> "NCElement":
        return cls({tuple(letters): coeff})

    @classmethod
    def scalar(cls, c) -> "NCElement":
        return cls({(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _elem(other)
        out = NCElement()
        out.terms = dict(self.terms)
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-_elem(other))

    def __rsub__(self, other):
        return _elem(other) - self

    def scale(self, c) -> "NCElement":
        c = as_qscalar(c)
        out = NCElement()
        if not c.is_zero():
            out.terms = {w: v * c for w, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, NCElement):
            return self.scale(other)
        out = NCElement()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._add(w1 + w2, c1 * c2)
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n: int):
        out = NCElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        """Equality of formal sums of words (no relations are applied)."""
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"NCElement({len(self.terms)} terms)"

    # -- involutions ------------------------------------------------------

    def star(self) -> "NCElement":
        """Antilinear anti-homomorphism with E* = F and self-adjoint K, Khat."""
        out = NCElement()
        for w, c in self.terms.items():
            out._add(tuple(_star_letter(a) for a in reversed(w)), c.conjugate())
        return out

    def antipode(self) -> "NCElement":
        return self._anti(_S_letter)

    def antipode_inverse(self) -> "NCElement":
        return self._anti(_Sinv_letter)

    def _anti(self, f) -> "NCElement":
        out = NCElement()
        for w, c in self.terms.items():
            coeff = c
            letters = []
            for a in reversed(w):
                s, b = f(a)
                coeff = coeff * s
                letters.append(b)
            out._add(tuple(letters), coeff)
        return out

    def coproduct(self) -> "TensorElement":
        out = TensorElement()
        for w, c in self.terms.items():
            acc = {((), ()): c}
            for a in w:
                nxt: dict = {}
                for (l, r), v in acc.items():
                    for (x, y), s in _delta_letter(a):
                        key = (l + x, r + y)
                        nv = v * s
                        nxt[key] = nxt[key] + nv if key in nxt else nv
                acc = nxt
            for key, v in acc.items():
                out._add(key, v)
        return out


def _elem(x) -> NCElement:
    return x if isinstance(x, NCElement) else NCElement.scalar(x)


def _star_letter(a: Letter) -> Letter:
    if a[0] == "E":
        return ("F", a[1])
    if a[0] == "F":
        return ("E", a[1])
    return a


def _S_letter(a: Letter):
    kind = a[0]
    if kind == "E":
        return -qpow(1), a
    if kind == "F":
        return -qpow(-1), a
    if kind == "K":
        return ONE, ("K", a[1], -a[2])
    return ONE, ("Kh", -a[1])


def _Sinv_letter(a: Letter):
    kind = a[0]
    if kind == "E":
        return -qpow(-1), a
    if kind == "F":
        return -qpow(1), a
    return _S_letter(a)


def _delta_letter(a: Letter):
    kind = a[0]
    if kind in ("E", "F"):
        i = a[1]
        return [(((a,), (("K", i, Fraction(1)),)), ONE),
                (((("K", i, Fraction(-1)),), (a,)), ONE)]
    return [(((a,), (a,)), ONE)]


class TensorElement:
    """Formal sum ``{(left word, right word): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict = {}
        for k, c in (terms or {}).items():
            self._add(k, as_qscalar(c))

    _add = NCElement._add

    @classmethod
    def tensor(cls, a: NCElement, b: NCElement) -> "TensorElement":
        out = cls()
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                out._add((w1, w2), c1 * c2)
        return out

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = TensorElement()
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            out._add(k, c)
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorElement":
        c = as_qscalar(c)
        out = TensorElement()
        if not c.is_zero():
            out.terms = {k: v * c for k, v in self.terms.items()}
        return out


# ---------------------------------------------------------------------------
# generators


def E(i: int) -> NCElement:
    return NCElement.word(("E", i))


def F(i: int) -> NCElement:
    return NCElement.word(("F", i))


def K(i: int, p=1) -> NCElement:
    return NCElement.word(("K", i, Fraction(p)))


def Khat(p=1) -> NCElement:
    return NCElement.word(("Kh", Fraction(p)))


def k_product(indices: Iterable[int], p=1) -> NCElement:
    """``(K_a K_b ...)^p`` for commuting K's."""
    p = Fraction(p)
    return NCElement.word(*(("K", i, p) for i in indices))


def q_commutator(a: NCElement, b: NCElement) -> NCElement:
    """``[a, b]_q = ab - q^-1 ba``."""
    return a * b - (b * a).scale(qpow(-1))


def commutator(a: NCElement, b: NCElement) -> NCElement:
    return a * b - b * a


def adjoint_action(x: NCElement, h: NCElement) -> NCElement:
    """Right adjoint action ``x <|ad h = S(h_(1)) x h_(2)``."""
    out = NCElement()
    for (w1, w2), c in h.coproduct().terms.items():
        s = NCElement({w1: c}).antipode()
        for sw, sc in s.terms.items():
            for xw, xc in x.terms.items():
                out._add(sw + xw + w2, sc * xc)
    return out


# ---------------------------------------------------------------------------
# root vectors and Casimirs


class RootVectors:
    """M_jk, N_jk, X_i and K_2rho for U_q(su(l+1))."""

    def __init__(self, ell: int):
        if ell < 1:
            raise DomainError("rank must be >= 1")
        self.ell = ell
        self._m: dict = {}

    def M(self, j: int, k: int) -> NCElement:
        ell = self.ell
        if j > k or j < 1 or k > ell:
            return NCElement()
        if (j, k) not in self._m:
            if j == k:
                self._m[j, k] = E(j)
            else:
                self._m[j, k] = q_commutator(E(j), self.M(j + 1, k))
        return self._m[j, k]

    def N(self, j: int, k: int, p=1) -> NCElement:
        """``N_jk^p``; ``k`` may be ``j-1`` (or 0)."""
        ell = self.ell
        idx = list(range(j, ell + 1)) + list(range(k + 1, ell + 1))
        p = Fraction(p)
        return NCElement.word(*(("K", i, p) for i in idx), ("Kh", -p))

    def X(self, i: int) -> NCElement:
        return self.N(i, self.ell) * self.M(i, self.ell).star()

    def K2rho(self) -> NCElement:
        ell = self.ell
        return NCElement.word(*(("K", j, Fraction(2 * j * (ell - j + 1)))
                                for j in range(1, ell + 1)))


def _inv_pole() -> QScalar:
    d = qpow(1) - qpow(-1)
    return (d * d).inverse()


def casimir(ell: int) -> NCElement:
    """The Casimir C_q of U_q(su(l+1))."""
    rv = RootVectors(ell)
    pole = _inv_pole()
    out = NCElement()
    for i in range(1, ell + 1):
        out = out + rv.N(i, i - 1, 2).scale(qpow(ell + 2 - 2 * i) * pole)
    out = out + Khat(-2).scale(qpow(-ell) * pole)
    for j in range(1, ell + 1):
        for k in range(j, ell + 1):
            out = out + (rv.M(j, k).star() * rv.N(j, k, 2) * rv.M(j, k)).scale(qpow(ell + 1 - 2 * j))
    return out - NCElement.scalar(qnum(ell + 1) * pole)


def casimir_prime_rhs(ell: int) -> NCElement:
    """``Khat^(2/l) C'_q``, the Casimir of U_q(su(l)) before dividing out."""
    rv = RootVectors(ell)
    pole = _inv_pole()
    out = NCElement()
    for i in range(1, ell + 1):
        out = out + rv.N(i, i - 1, 2).scale(qpow(ell + 1 - 2 * i) * pole)
    for j in range(1, ell):
        for k in range(j, ell):
            out = out + (rv.M(j, k).star() * rv.N(j, k, 2) * rv.M(j, k)).scale(qpow(ell - 2 * j))
    return out - Khat(Fraction(2, ell)).scale(qnum(ell) * pole)


def casimir_prime(ell: int) -> NCElement:
    """C'_q itself, i.e. ``Khat^(-2/l)`` times :func:`casimir_prime_rhs`."""
    if ell < 1:
        raise DomainError("rank must be >= 1")
    return Khat(Fraction(-2, ell)) * casimir_prime_rhs(ell)


def casimir_from_prime(ell: int) -> NCElement:
    """Right-hand side of the relation expressing C_q through C'_q."""
    rv = RootVectors(ell)
    pole = _inv_pole()
    out = (Khat(Fraction(2, ell)) * (casimir_prime(ell) + NCElement.scalar(qnum(ell) * pole))).scale(qpow(1))
    out = out + Khat(-2).scale(qpow(-ell) * pole)
    for i in range(1, ell + 1):
        out = out + (rv.M(i, ell).star() * rv.N(i, ell, 2) * rv.M(i, ell)).scale(qpow(ell + 1 - 2 * i))
    return out - NCElement.scalar(qnum(ell + 1) * pole)


# ---------------------------------------------------------------------------
# representations


class MatrixRep:
    """Representation with diagonal K_i, Khat and sparse E_i, F_i.

    ``k_exp[i-1][a]`` is the exponent of q in the ``a``-th diagonal entry of
    ``K_i``; powers ``K_i^p`` scale it by ``p``.  Khat is the positive root
    ``(K_1 K_2^2 ... K_l^l)^(2/(l+1))`` unless given explicitly.
    """

    def __init__(self, ell: int, k_exp, e_mats, f_mats, kh_exp=None, label: str = "",
                 dim: int | None = None):
        self.ell = ell
        self.k_exp = [tuple(Fraction(x) for x in row) for row in k_exp]
        if dim is None:
            dim = len(self.k_exp[0]) if self.k_exp else 1
        self.dim = dim
        self.E = list(e_mats)
        self.F = list(f_mats)
        if kh_exp is None:
            kh_exp = [Fraction(2, ell + 1) * sum((i + 1) * self.k_exp[i][a] for i in range(ell))
                      for a in range(self.dim)]
        self.kh_exp = tuple(Fraction(x) for x in kh_exp)
        self.label = label
        self._letters: dict = {}
        self._words: dict = {}

    def letter(self, a: Letter) -> QMatrix:
        m = self._letters.get(a)
        if m is None:
            kind = a[0]
            if kind == "E":
                m = self.E[a[1] - 1]
            elif kind == "F":
                m = self.F[a[1] - 1]
            elif kind == "K":
                m = QMatrix.diag(qpow(a[2] * x) for x in self.k_exp[a[1] - 1])
            elif kind == "Kh":
                m = QMatrix.diag(qpow(a[1] * x) for x in self.kh_exp)
            else:
                raise DomainError(f"unknown letter {a!r}")
            self._letters[a] = m
        return m

    def evaluate_word(self, w: Word) -> QMatrix:
        m = self._words.get(w)
        if m is None:
            if not w:
                m = QMatrix.identity(self.dim)
            elif len(w) == 1:
                m = self.letter(w[0])
            else:
                m = self.evaluate_word(w[:-1]) @ self.letter(w[-1])
            self._words[w] = m
        return m

    def evaluate(self, x) -> QMatrix:
        x = _elem(x)
        out = QMatrix((self.dim, self.dim))
        for w, c in x.terms.items():
            for i, j, v in self.evaluate_word(w).entries():
                out.add_to(i, j, v * c)
        return out

    def __call__(self, x) -> QMatrix:
        return self.evaluate(x)

    def __repr__(self):
        return f"MatrixRep({self.label or 'rep'}, ell={self.ell}, dim={self.dim})"


def fundamental_rep(ell: int) -> MatrixRep:
    """The (l+1)-dimensional representation pi; E_i has a 1 at row i+1, column i."""
    if ell < 1:
        raise DomainError("rank must be >= 1")
    n = ell + 1
    k_exp = [[Fraction((j == i + 1) - (j == i), 2) for j in range(1, n + 1)]
             for i in range(1, ell + 1)]
    e = [QMatrix.from_entries((n, n), [(i, i - 1, 1)]) for i in range(1, ell + 1)]
    f = [m.transpose() for m in e]
    return MatrixRep(ell, k_exp, e, f, label="pi")


def tensor_rep(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """``(a (x) b) o Delta``."""
    if a.ell != b.ell:
        raise DomainError("ranks differ")
    k_exp = [[x + y for x in a.k_exp[i] for y in b.k_exp[i]] for i in range(a.ell)]
    kh = [x + y for x in a.kh_exp for y in b.kh_exp]
    e, f = [], []
    for i in range(1, a.ell + 1):
        kb, kai = b.letter(("K", i, Fraction(1))), a.letter(("K", i, Fraction(-1)))
        e.append(a.E[i - 1].kron(kb) + kai.kron(b.E[i - 1]))
        f.append(a.F[i - 1].kron(kb) + kai.kron(b.F[i - 1]))
    return MatrixRep(a.ell, k_exp, e, f, kh_exp=kh, label=f"{a.label}(x){b.label}")


def evaluate_tensor(t: TensorElement, a: MatrixRep, b: MatrixRep) -> QMatrix:
    out = QMatrix((a.dim * b.dim, a.dim * b.dim))
    for (w1, w2), c in t.terms.items():
        for i, j, v in a.evaluate_word(w1).kron(b.evaluate_word(w2)).scale(c).entries():
            out.add_to(i, j, v)
    return out


def casimir_matrix(rep: MatrixRep, which: str = "C_q") -> QMatrix:
    if which == "C_q":
        return rep(casimir(rep.ell))
    if which == "C_prime_q":
        # Khat^(2/l) is diagonal and invertible, so divide it out
        return rep(casimir_prime(rep.ell))
    raise DomainError(f"unknown Casimir {which!r}")


# ---------------------------------------------------------------------------
# relation checks


def _residual(name: str, lhs: QMatrix, rhs: QMatrix, out: list):
    d = lhs - rhs
    out.append((name, d.is_zero(), d.nnz()))


def defining_relations(rep: MatrixRep) -> list[tuple[str, bool, int]]:
    """Residuals of the defining relations of U_q(su(l+1)) in ``rep``.

    Each entry is ``(name, holds, nonzero entries of the residual)``.
    """
    ell = rep.ell
    out: list = []
    qm, q = qpow(-1), qpow(1)
    pole = (q - qm).inverse()
    for i in range(1, ell + 1):
        Ki, Kim = rep(K(i)), rep(K(i, -1))
        for j in range(1, ell + 1):
            Kj = rep(K(j))
            _residual(f"[K{i},K{j}]", Ki @ Kj, Kj @ Ki, out)
            Ej, Fj = rep(E(j)), rep(F(j))
            if i == j:
                ce, cf = q, qm
            elif abs(i - j) == 1:
                ce, cf = qpow(Fraction(-1, 2)), qpow(Fraction(1, 2))
            else:
                ce, cf = ONE, ONE
            _residual(f"K{i}E{j}K{i}^-1", Ki @ Ej @ Kim, Ej.scale(ce), out)
            _residual(f"K{i}F{j}K{i}^-1", Ki @ Fj @ Kim, Fj.scale(cf), out)
            Ei = rep(E(i))
            rhs = (rep(K(i, 2)) - rep(K(i, -2))).scale(pole) if i == j else QMatrix((rep.dim, rep.dim))
            _residual(f"[E{i},F{j}]", Ei @ Fj - Fj @ Ei, rhs, out)
            for G, g in (("E", E), ("F", F)):
                gi, gj = rep(g(i)), rep(g(j))
                zero = QMatrix((rep.dim, rep.dim))
                if abs(i - j) == 1:
                    serre = gi @ gi @ gj - (gi @ gj @ gi).scale(q + qm) + gj @ gi @ gi
                    _residual(f"serre {G}{i}{G}{j}", serre, zero, out)
                    a = rep(q_commutator(g(i), q_commutator(g(j), g(i))))
                    b = rep(q_commutator(q_commutator(g(i), g(j)), g(i)))
                    _residual(f"serre-q left {G}{i}{G}{j}", a, zero, out)
                    _residual(f"serre-q right {G}{i}{G}{j}", b, zero, out)
                elif abs(i - j) > 1:
                    _residual(f"[{G}{i},{G}{j}]", gi @ gj - gj @ gi, zero, out)
    return out


def _kron_delta(a, b) -> int:
    return int(a == b)


def lemma_a(rep: MatrixRep) -> list:
    ell = rep.ell
    rv = RootVectors(ell)
    pole = (qpow(1) - qpow(-1)).inverse()
    out = []
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            for k in range(j, ell + 1):
                lhs = commutator(F(i), rv.M(j, k))
                rhs = NCElement()
                if i == j:
                    rhs = rhs + rv.M(j + 1, k) * K(i, -2)
                if i == k:
                    rhs = rhs - K(i, 2) * rv.M(j, k - 1)
                if i == j == k:
                    rhs = rhs - (K(i, 2) - K(i, -2)).scale(pole)
                _residual(f"lemmaA i={i} j={j} k={k}", rep(lhs), rep(rhs), out)
                lhs2 = commutator(E(i), rv.M(j, k).star())
                _residual(f"lemmaA* i={i} j={j} k={k}", rep(lhs2), rep(rhs.star().scale(-1)), out)
    return out


def lemma_b(rep: MatrixRep) -> list:
    ell = rep.ell
    rv = RootVectors(ell)
    out = []
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            for k in range(j, ell + 1):
                n2 = rv.N(j, k, 2)
                lhs = commutator(E(i), n2 * rv.M(j, k))
                rhs = NCElement()
                if i == j - 1:
                    rhs = rhs + (n2 * rv.M(i, k)).scale(qpow(1))
                if i == k + 1:
                    rhs = rhs - n2 * rv.M(j, i)
                _residual(f"lemmaB i={i} j={j} k={k}", rep(lhs), rep(rhs), out)
    return out


def nen_relation(rep: MatrixRep) -> list:
    ell = rep.ell
    rv = RootVectors(ell)
    out = []
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            for k in range(1, ell + 1):
                lhs = rv.N(j, k, 2) * E(i) * rv.N(j, k, -2)
                d = _kron_delta
                e = -d(i, j - 1) + d(i, j) - d(i, k) + d(i, k + 1)
                _residual(f"NEN i={i} j={j} k={k}", rep(lhs), rep(E(i)).scale(qpow(e)), out)
    return out


def antipode_square(rep: MatrixRep) -> list:
    rv = RootVectors(rep.ell)
    k2, k2i = rep(rv.K2rho()), rep(rv.K2rho().antipode())
    out = []
    for i in range(1, rep.ell + 1):
        for g in (E(i), F(i), K(i)):
            (w,) = g.terms
            lhs = rep(g.antipode().antipode())
            _residual(f"S^2 {w}", lhs, k2 @ rep(g) @ k2i, out)
    return out


def casimir_checks(rep: MatrixRep, expected: QScalar | None = None) -> list:
    """Centrality of C_q and the C_q / C'_q relation; optionally its scalar value."""
    ell = rep.ell
    c = casimir_matrix(rep)
    out = []
    for i in range(1, ell + 1):
        for g, name in ((E(i), "E"), (F(i), "F"), (K(i), "K")):
            gm = rep(g)
            _residual(f"[C_q,{name}{i}]", c @ gm, gm @ c, out)
    _residual("C_q relation to C'_q", c, rep(casimir_from_prime(ell)), out)
    _residual("C_q self-adjoint", c, c.adjoint(), out)
    if expected is not None:
        s = c.is_scalar()
        out.append(("C_q scalar value", s is not None and s == expected, 0 if s is not None else c.nnz()))
    return out


def x_identities(rep: MatrixRep) -> list:
    """X_i q-commutation, adjoint-action equivariance and the [X*, S^-1 X] brackets."""
    ell = rep.ell
    rv = RootVectors(ell)
    pole = (qpow(1) - qpow(-1)).inverse()
    X = {i: rv.X(i) for i in range(1, ell + 1)}
    Xm = {i: rep(X[i]) for i in X}
    out = []
    for i in range(1, ell + 1):
        for j in range(i + 1, ell + 1):
            _residual(f"X{i}X{j}=q^-1 X{j}X{i}", Xm[i] @ Xm[j], (Xm[j] @ Xm[i]).scale(qpow(-1)), out)
    zero = QMatrix((rep.dim, rep.dim))
    for i in range(1, ell + 1):
        _residual(f"X{i} ad Khat", rep(adjoint_action(X[i], Khat())), Xm[i].scale(qpow(1)), out)
        for j in range(1, ell):
            d = _kron_delta
            _residual(f"X{i} ad K{j}", rep(adjoint_action(X[i], K(j))),
                      Xm[i].scale(qpow(Fraction(d(i, j) - d(i, j + 1), 2))), out)
            _residual(f"X{i} ad E{j}", rep(adjoint_action(X[i], E(j))),
                      Xm[i + 1] if i == j else zero, out)
            _residual(f"X{i} ad F{j}", rep(adjoint_action(X[i], F(j))),
                      Xm[i - 1] if i == j + 1 else zero, out)
    for i in range(1, ell + 1):
        xs = X[i].star()
        for j in range(1, i + 1):
            lhs = commutator(xs, X[j].antipode_inverse())
            if j < i:
                rhs = ((Khat() * rv.N(j, i - 1)).antipode()
                       * rv.M(j, i - 1).star().antipode_inverse()).scale(qpow(Fraction(1, 2)))
            else:
                kk = list(range(i, ell + 1))
                rhs = (k_product(kk, 2) - k_product(kk, -2)).scale(-qpow(1) * pole)
            _residual(f"[X{i}*,S^-1 X{j}]", rep(lhs), rep(rhs), out)
    return out


def x_coproduct(a: MatrixRep, b: MatrixRep) -> list:
    """Delta(X_i) against its three-term expansion, on ``a (x) b``."""
    ell = a.ell
    rv = RootVectors(ell)
    c = qpow(Fraction(-1, 2)) * (qpow(1) - qpow(-1))
    out = []
    for i in range(1, ell + 1):
        lhs = rv.X(i).coproduct()
        rhs = TensorElement.tensor(rv.X(i), rv.N(i, i - 1)) + TensorElement.tensor(Khat(-1), rv.X(i))
        for j in range(i, ell):
            rhs = rhs + TensorElement.tensor(rv.X(j + 1), rv.N(i, j) * rv.M(i, j).star()).scale(c)
        _residual(f"Delta(X{i})", evaluate_tensor(lhs, a, b), evaluate_tensor(rhs, a, b), out)
    return out


def hopf_axioms(rep: MatrixRep) -> list:
    """m(S (x) id)Delta(h) = eps(h) and the S^-1 inverse property on generators."""
    out = []
    for i in range(1, rep.ell + 1):
        for g, eps in ((E(i), ZERO), (F(i), ZERO), (K(i), ONE), (Khat(), ONE)):
            acc = NCElement()
            for (w1, w2), c in g.coproduct().terms.items():
                acc = acc + NCElement({w1: c}).antipode() * NCElement.word(*w2)
            (w,) = g.terms
            _residual(f"m(S x id)Delta {w}", rep(acc), QMatrix.identity(rep.dim).scale(eps), out)
            _residual(f"S S^-1 {w}", rep(g.antipode_inverse().antipode()), rep(g), out)
    return out


def run_suite(ell: int) -> list[tuple[str, bool, int]]:
    """All relation checks in pi, plus the tensor-square checks for small rank."""
    from .spectra import casimir_highest_weight

    pi = fundamental_rep(ell)
    res = []
    res += defining_relations(pi)
    res += hopf_axioms(pi)
    res += antipode_square(pi)
    res += nen_relation(pi)
    res += lemma_a(pi)
    res += lemma_b(pi)
    res += casimir_checks(pi, casimir_highest_weight(ell, (0,) * (ell - 1) + (1,)))
    res += x_identities(pi)
    if ell <= 3:
        pp = tensor_rep(pi, pi)
        res += [(f"pi(x)pi {n}", ok, z) for n, ok, z in defining_relations(pp)]
        res += [(f"pi(x)pi {n}", ok, z) for n, ok, z in casimir_checks(pp)]
        res += x_coproduct(pi, pi)
    return res
