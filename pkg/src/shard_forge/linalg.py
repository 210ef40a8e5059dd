"""Exact linear algebra over a prime field F_p or over the rationals.

Both backends share one interface so the module code never branches on the
scalar field.  Matrices are numpy arrays: ``int64`` reduced mod p for
:class:`GF`, ``object`` arrays of :class:`fractions.Fraction` for :class:`QQ`.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


class ScalarField:
    """Common Gaussian-elimination machinery; subclasses fix the arithmetic."""

    dtype: object = object
    is_finite = False
    order: int | None = None

    def asarray(self, x) -> np.ndarray:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def zeros(self, shape) -> np.ndarray:
        return self.asarray(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.asarray(np.eye(n, dtype=np.int64))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape[-1] == 0 or (b.ndim and b.shape[0] == 0):
            shape = a.shape[:-1] + b.shape[1:]
            return self.zeros(shape)
        return self.reduce(a @ b)

    def kron(self, a, b) -> np.ndarray:
        return self.reduce(np.kron(np.asarray(a), np.asarray(b)))

    def is_zero(self, a) -> bool:
        a = np.asarray(a)
        return a.size == 0 or not np.any(a != 0)

    def rref(self, a) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns (first-pivot order)."""
        r = self.asarray(a).copy()
        rows, cols = r.shape
        pivots: list[int] = []
        row = 0
        for col in range(cols):
            if row >= rows:
                break
            nz = np.nonzero(r[row:, col] != 0)[0]
            if nz.size == 0:
                continue
            pr = row + int(nz[0])
            if pr != row:
                r[[row, pr]] = r[[pr, row]]
            r[row] = self.reduce(r[row] * self.inv(r[row, col]))
            factors = r[:, col].copy()
            factors[row] = 0
            if np.any(factors != 0):
                r = self.reduce(r - np.multiply.outer(factors, r[row]))
            pivots.append(col)
            row += 1
        return r, pivots

    def rank(self, a) -> int:
        a = np.asarray(a)
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a) -> np.ndarray:
        """Columns form a basis of {x : a x = 0}, ordered by free column."""
        a = self.asarray(a)
        rows, cols = a.shape
        if rows == 0:
            return self.eye(cols)
        r, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            basis[f, k] = 1
            for i, p in enumerate(pivots):
                basis[p, k] = self.reduce(np.asarray([-r[i, f]]))[0]
        return basis

    def column_space(self, a) -> np.ndarray:
        """Pivot columns of ``a`` (a basis of its image, pivot order)."""
        a = self.asarray(a)
        if a.size == 0:
            return self.zeros((a.shape[0], 0))
        _, pivots = self.rref(a)
        return a[:, pivots]

    def solve(self, a, b) -> np.ndarray:
        """Some x with a x = b; raises ValueError when inconsistent."""
        a = self.asarray(a)
        b = self.asarray(b)
        vec = b.ndim == 1
        if vec:
            b = b.reshape(-1, 1)
        rows, cols = a.shape
        aug = np.concatenate([a, b], axis=1) if rows else self.zeros((0, cols + b.shape[1]))
        r, pivots = self.rref(aug)
        if any(p >= cols for p in pivots):
            raise ValueError("inconsistent linear system")
        x = self.zeros((cols, b.shape[1]))
        for i, p in enumerate(pivots):
            x[p] = r[i, cols:]
        return x[:, 0] if vec else x

    def inverse(self, a) -> np.ndarray:
        a = self.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("not square")
        if self.rank(a) != n:
            raise ValueError("singular matrix")
        r, _ = self.rref(np.concatenate([a, self.eye(n)], axis=1))
        return r[:, n:]

    def in_span(self, basis, v) -> bool:
        basis = self.asarray(basis)
        if basis.shape[1] == 0:
            return self.is_zero(v)
        return self.rank(np.concatenate([basis, self.asarray(v).reshape(-1, 1)], axis=1)) == self.rank(basis)


class GF(ScalarField):
    """The prime field F_p with int64 storage."""

    dtype = np.int64
    is_finite = True

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def asarray(self, x) -> np.ndarray:
        arr = np.asarray(x)
        if arr.dtype == object:
            arr = np.vectorize(lambda v: int(v) % self.p, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
        return np.mod(arr.astype(np.int64), self.p)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return np.mod(a, self.p)

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def to_json(self, x):
        return int(x)

    def from_json(self, x):
        return int(x) % self.p


class QQ(ScalarField):
    """The rational numbers, exact via Fraction object arrays."""

    dtype = object

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")

    def asarray(self, x) -> np.ndarray:
        arr = np.asarray(x, dtype=object)
        if arr.size:
            arr = np.vectorize(Fraction, otypes=[object])(arr)
        return arr

    def inv(self, a):
        return 1 / Fraction(a)

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return self.asarray(rng.integers(-2, 3, size=shape))

    def to_json(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def from_json(self, x):
        return Fraction(x)


def block_diag(field: ScalarField, blocks) -> np.ndarray:
    blocks = list(blocks)
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = field.zeros((rows, cols))
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
