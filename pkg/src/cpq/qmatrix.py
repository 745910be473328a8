"""Sparse matrices with exact :class:`QScalar` entries."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .qscalar import ONE, QScalar, as_qscalar


class QMatrix:
    """Sparse ``rows x cols`` matrix stored as ``{row: {col: QScalar}}``."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: tuple[int, int], rows: dict | None = None):
        self.shape = (int(shape[0]), int(shape[1]))
        self.rows: dict[int, dict[int, QScalar]] = rows if rows is not None else {}

    # -- construction --------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "QMatrix":
        return cls((n, n if m is None else m))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls((n, n), {i: {i: ONE} for i in range(n)})

    @classmethod
    def diag(cls, values: Iterable) -> "QMatrix":
        vals = [as_qscalar(v) for v in values]
        return cls((len(vals), len(vals)),
                   {i: {i: v} for i, v in enumerate(vals) if not v.is_zero()})

    @classmethod
    def from_entries(cls, shape, entries: Iterable[tuple[int, int, object]]) -> "QMatrix":
        m = cls(shape)
        for i, j, v in entries:
            m.add_to(i, j, as_qscalar(v))
        return m

    def add_to(self, i: int, j: int, v: QScalar) -> None:
        if v.is_zero():
            return
        row = self.rows.setdefault(i, {})
        old = row.get(j)
        new = v if old is None else old + v
        if new.is_zero():
            row.pop(j, None)
            if not row:
                del self.rows[i]
        else:
            row[j] = new

    # -- access --------------------------------------------------------------

    def __getitem__(self, ij) -> QScalar:
        i, j = ij
        return self.rows.get(i, {}).get(j, as_qscalar(0))

    def entries(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def diagonal(self) -> list[QScalar]:
        return [self[i, i] for i in range(min(self.shape))]

    def is_scalar(self) -> QScalar | None:
        """The scalar ``c`` if ``self == c * I``, else ``None``."""
        if self.shape[0] != self.shape[1] or not self.is_diagonal():
            return None
        d = self.diagonal()
        return d[0] if all(x == d[0] for x in d) else None

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        out = self.copy()
        for i, j, v in other.entries():
            out.add_to(i, j, v)
        return out

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "QMatrix":
        c = as_qscalar(c)
        if c.is_zero():
            return QMatrix(self.shape)
        return QMatrix(self.shape, {i: {j: v * c for j, v in r.items()}
                                    for i, r in self.rows.items()})

    def __mul__(self, c):
        if isinstance(c, QMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: dict = {}
            for k, a in r.items():
                ork = orows.get(k)
                if not ork:
                    continue
                for j, b in ork.items():
                    p = a * b
                    if j in acc:
                        acc[j] = acc[j] + p
                    else:
                        acc[j] = p
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                out[i] = acc
        return QMatrix((self.shape[0], other.shape[1]), out)

    def apply(self, vec: list[QScalar]) -> list[QScalar]:
        out = [as_qscalar(0)] * self.shape[0]
        for i, r in self.rows.items():
            s = as_qscalar(0)
            for j, v in r.items():
                s = s + v * vec[j]
            out[i] = s
        return out

    def transpose(self) -> "QMatrix":
        out = QMatrix((self.shape[1], self.shape[0]))
        for i, j, v in self.entries():
            out.rows.setdefault(j, {})[i] = v
        return out

    def conj(self) -> "QMatrix":
        return QMatrix(self.shape, {i: {j: v.conjugate() for j, v in r.items()}
                                    for i, r in self.rows.items()})

    def adjoint(self) -> "QMatrix":
        """Conjugate transpose (``q`` is real)."""
        return self.transpose().conj()

    def kron(self, other: "QMatrix") -> "QMatrix":
        n2, m2 = other.shape
        out: dict = {}
        for i, r in self.rows.items():
            for k, ro in other.rows.items():
                row = {}
                for j, a in r.items():
                    for l, b in ro.items():
                        row[j * m2 + l] = a * b
                out[i * n2 + k] = row
        return QMatrix((self.shape[0] * n2, self.shape[1] * m2), out)

    def copy(self) -> "QMatrix":
        return QMatrix(self.shape, {i: dict(r) for i, r in self.rows.items()})

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def evaluate(self, q) -> np.ndarray:
        """Dense numeric array at ``q``."""
        vals = {}
        for i, j, v in self.entries():
            vals[i, j] = v.evaluate(q)
        dtype = complex if any(isinstance(x, complex) for x in vals.values()) else float
        a = np.zeros(self.shape, dtype=dtype)
        for (i, j), x in vals.items():
            a[i, j] = float(x) if dtype is float else complex(x)
        return a

    def __repr__(self):
        return f"QMatrix(shape={self.shape}, nnz={self.nnz()})"


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return a @ b - b @ a


def q_commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    """``[a, b]_q = ab - q^-1 ba``."""
    from .qscalar import qpow
    return a @ b - (b @ a).scale(qpow(-1))
