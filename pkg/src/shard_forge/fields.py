"""The tower F_p = kappa(1) < kappa(d) < kappa(L) = F_{p^L}.

All elements live in the single ambient field F_{p^L}; kappa(d) is the fixed
field of Frobenius^d.  An element is an ``int`` code sum_i c_i p^i, where c_i
are its coefficients in the power basis 1, x, ..., x^{L-1} modulo the
ambient modulus.  :meth:`FieldTower.coeffs` and :meth:`FieldTower.elt`
convert between codes and coefficient lists (the serialized form).
"""
from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .cartan import CartanData
from .linalg import GF

MAX_FIELD_SIZE = 1 << 20


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _polymod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim(list(f))
    g = _trim(list(g))
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for k, gk in enumerate(g):
            f[shift + k] = (f[shift + k] - c * gk) % p
        _trim(f)
    return f


def _is_irreducible(f: list[int], p: int) -> bool:
    deg = len(f) - 1
    for dg in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=dg):
            if not _polymod(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, L: int) -> list[int]:
    """Monic irreducible of degree L minimizing sum_{i<L} c_i p^i (low-to-high coefficients)."""
    for code in range(p**L):
        low = [(code // p**i) % p for i in range(L)]
        f = low + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


class FieldTower:
    def __init__(self, p: int, L: int):
        self.F = GF(p)
        self.p = p
        self.L = L
        self.q = p**L
        if self.q > MAX_FIELD_SIZE:
            raise ValueError(f"F_{p}^{L} too large for table arithmetic")
        self.modulus = smallest_irreducible(p, L)
        self._coeff = np.array([[(x // p**i) % p for i in range(L)] for x in range(self.q)], dtype=np.int64)
        self._place = np.array([p**i for i in range(L)], dtype=np.int64)
        self._coord_solvers: dict[int, np.ndarray] = {}
        self._build_tables()

    def __repr__(self):
        return f"FieldTower(p={self.p}, L={self.L})"

    # -- element plumbing --------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self._coeff[x])

    def elt(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.L:
            raise ValueError(f"field element needs {self.L} coefficients, got {len(coeffs)}")
        return int(np.dot(np.mod(np.asarray(coeffs, dtype=np.int64), self.p), self._place))

    def _polymul(self, a: int, b: int) -> int:
        fa, fb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.L - 1)
        for i, x in enumerate(fa):
            if x:
                for j, y in enumerate(fb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _polymod(prod, self.modulus, self.p)
        return self.elt(r + [0] * (self.L - len(r)))

    def _build_tables(self) -> None:
        q = self.q
        for z in range(2, q) if q > 2 else [1]:
            exp = [1]
            cur = 1
            while True:
                cur = self._polymul(cur, z)
                if cur == 1:
                    break
                exp.append(cur)
            if len(exp) == q - 1:
                break
        else:
            z = 1
            exp = [1]
        self.zeta = z
        self._exp = np.array(exp, dtype=np.int64)
        self._log = np.zeros(q, dtype=np.int64)
        self._log[self._exp] = np.arange(q - 1)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(np.dot((self._coeff[a] + self._coeff[b]) % self.p, self._place))

    def neg(self, a: int) -> int:
        return int(np.dot((-self._coeff[a]) % self.p, self._place))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply by the prime-field scalar c."""
        return int(np.dot((c * self._coeff[a]) % self.p, self._place))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in field tower")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p**k)

    def total(self, xs) -> int:
        out = 0
        for x in xs:
            out = self.add(out, x)
        return out

    # -- subfields -------------------------------------------------------------

    def _check_degree(self, d: int) -> None:
        if d <= 0 or self.L % d:
            raise ValueError(f"degree {d} does not divide L = {self.L}")

    def in_subfield(self, a: int, d: int) -> bool:
        self._check_degree(d)
        return self.frobenius(a, d) == a

    def subfield(self, d: int) -> list[int]:
        return [x for x in range(self.q) if self.in_subfield(x, d)]

    def generator(self, d: int) -> int:
        """u_d: a primitive element of kappa(d), hence a generator over every subfield."""
        self._check_degree(d)
        return int(self._exp[((self.q - 1) // (self.p**d - 1)) % (self.q - 1)])

    def power_basis(self, d: int, over: int = 1) -> list[int]:
        """1, u_d, ..., u_d^{d/over - 1}: a kappa(over)-basis of kappa(d)."""
        self._check_degree(d)
        if d % over:
            raise ValueError(f"{over} does not divide {d}")
        u = self.generator(d)
        return [self.pow(u, k) for k in range(d // over)]

    def trace(self, x: int, to_degree: int, from_degree: int | None = None) -> int:
        e = self.L if from_degree is None else from_degree
        self._check_degree(e)
        if e % to_degree:
            raise ValueError(f"trace: {to_degree} does not divide {e}")
        if not self.in_subfield(x, e):
            raise ValueError(f"trace: element not in kappa({e})")
        return self.total(self.frobenius(x, to_degree * m) for m in range(e // to_degree))

    # -- coordinates over kappa ----------------------------------------------

    def _basis_matrix(self, d: int) -> np.ndarray:
        if d not in self._coord_solvers:
            B = np.array([self.coeffs(b) for b in self.power_basis(d)], dtype=np.int64).T
            self._coord_solvers[d] = B
        return self._coord_solvers[d]

    def coords(self, x: int, d: int) -> np.ndarray:
        """Coordinates over F_p of x in kappa(d) with respect to the power basis of u_d."""
        if not self.in_subfield(x, d):
            raise ValueError(f"element {self.coeffs(x)} not in kappa({d})")
        return self.F.solve(self._basis_matrix(d), np.asarray(self.coeffs(x), dtype=np.int64))

    def from_coords(self, v: Sequence[int], d: int) -> int:
        B = self._basis_matrix(d)
        return int(np.dot(self.F.matmul(B, np.asarray(v, dtype=np.int64).reshape(-1, 1))[:, 0], self._place))

    def mult_matrix(self, x: int, d: int) -> np.ndarray:
        """d x d matrix over F_p of multiplication by x on kappa(d)."""
        basis = self.power_basis(d)
        cols = [self.coords(self.mul(x, b), d) for b in basis]
        return np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)

    # -- linear algebra over a subfield ---------------------------------------

    def solve(self, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
        """Solve A X = B for square invertible A over the ambient field."""
        n = len(A)
        m = [list(A[r]) + list(B[r]) for r in range(n)]
        for col in range(n):
            pr = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pr is None:
                raise ValueError("not a basis (singular matrix)")
            m[col], m[pr] = m[pr], m[col]
            iv = self.inv(m[col][col])
            m[col] = [self.mul(iv, x) for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [self.sub(x, self.mul(f, y)) for x, y in zip(m[r], m[col])]
        return [row[n:] for row in m]

    def det(self, A: list[list[int]]) -> int:
        n = len(A)
        m = [list(r) for r in A]
        out = 1
        for col in range(n):
            pr = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pr is None:
                return 0
            if pr != col:
                m[col], m[pr] = m[pr], m[col]
                out = self.neg(out)
            out = self.mul(out, m[col][col])
            iv = self.inv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = self.mul(m[r][col], iv)
                    m[r] = [self.sub(x, self.mul(f, y)) for x, y in zip(m[r], m[col])]
        return out

    def dual_basis(self, d: int, e: int, basis: Sequence[int]) -> list[int]:
        """Trace-dual of a kappa(d)-basis of kappa(e): tr_{e/d}(b*_a b_b) = delta_ab."""
        k = len(basis)
        if k * d != e:
            raise ValueError("not a basis (wrong size)")
        gram = [[self.trace(self.mul(a, b), d, e) for b in basis] for a in basis]
        ident = [[int(r == s) for s in range(k)] for r in range(k)]
        # X G = I  <=>  G^T X^T = I; G is symmetric
        X = [list(r) for r in zip(*self.solve(gram, ident))]
        return [self.total(self.mul(X[a][c], basis[c]) for c in range(k)) for a in range(k)]

    def is_independent_over(self, elts: Sequence[int], d: int) -> bool:
        """Dedekind/Moore test: det(Frob^{d m}(b_k)) != 0 over the Galois group of kappa(d k)/kappa(d)."""
        k = len(elts)
        M = [[self.frobenius(b, d * m) for b in elts] for m in range(k)]
        return self.det(M) != 0


def species_basis(c: CartanData, tower: FieldTower, i: int, j: int) -> list[int]:
    """A kappa(d_j)-basis of kappa(d_ij) lying inside kappa(d_i): powers of u_{d_i}."""
    if i == j:
        raise ValueError("species_basis needs i != j")
    g = c.gcd_pair(i, j)
    basis = tower.power_basis(c.d[i], over=g)
    if not tower.is_independent_over(basis, c.d[j]):
        raise AssertionError("species basis is not independent over kappa(d_j)")
    return basis
