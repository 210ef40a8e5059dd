"""Symmetrizable crystallographic Cartan data, roots and weights.

Vertices are 0-based throughout the Python API; the text formats (signed
words, map keys in module JSON) use 1-based labels.

Roots are integer tuples in the simple-root basis.  Weights are tuples of
Fractions in the fundamental-weight basis, so that the pairing of a weight
with a root is the plain dot product.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from pathlib import Path
from typing import Sequence

from .errors import CartanError, RootError

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class CartanData:
    A: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    p: int | None = None
    name: str = ""
    L: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "L", reduce(_lcm, self.d, 1))

    @property
    def n(self) -> int:
        return len(self.A)

    def d_pair(self, i: int, j: int) -> int:
        """LCM(d_i, d_j)."""
        return _lcm(self.d[i], self.d[j])

    def gcd_pair(self, i: int, j: int) -> int:
        return math.gcd(self.d[i], self.d[j])

    def arrow_count(self, i: int, j: int) -> int:
        """Number of arrows i -> j in the species quiver: -d_i A_ij / d_ij."""
        if i == j:
            return 0
        return -self.d[i] * self.A[i][j] // self.d_pair(i, j)

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.n) if j != i and self.A[i][j] != 0]

    def simple(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.n))

    # -- forms and pairings ------------------------------------------------

    def bilinear(self, x: Sequence[int], y: Sequence[int]):
        """(x, y) = sum_ij x_i d_i A_ij y_j."""
        n = self.n
        return sum(x[i] * self.d[i] * self.A[i][j] * y[j] for i in range(n) for j in range(n))

    def coroot_pairing(self, i: int, x: Sequence[int]):
        """(alpha_i^vee, x) = sum_j A_ij x_j."""
        return sum(self.A[i][j] * x[j] for j in range(self.n))

    @staticmethod
    def pair(theta: Sequence, x: Sequence) -> Fraction:
        """<theta, x> for a weight theta and a root-space vector x."""
        return sum((Fraction(t) * v for t, v in zip(theta, x)), Fraction(0))

    def d_beta(self, beta: Sequence[int]) -> int:
        q = self.bilinear(beta, beta)
        if q <= 0:
            raise RootError(f"{tuple(beta)} has (beta, beta) = {q} <= 0; not a real root")
        if q % 2:
            raise RootError(f"{tuple(beta)} has odd norm {q}; not a real root")
        return q // 2

    # -- reflections ------------------------------------------------------

    def reflect_root(self, i: int, x: Sequence[int]) -> Root:
        c = self.coroot_pairing(i, x)
        out = list(x)
        out[i] -= c
        return tuple(out)

    def reflect_weight(self, i: int, theta: Sequence) -> Weight:
        """Dual action: s_i(omega_i) = -omega_i + sum_{k != i} (-A_ik) omega_k."""
        th = [Fraction(t) for t in theta]
        ti = th[i]
        out = list(th)
        out[i] = -ti
        for k in range(self.n):
            if k != i:
                out[k] = th[k] - self.A[i][k] * ti
        return tuple(out)

    def reflect_root_word(self, word: Sequence[int], x: Sequence[int]) -> Root:
        """Apply s_{w[0]} first, then s_{w[1]}, ..."""
        y = tuple(x)
        for i in word:
            y = self.reflect_root(i, y)
        return y

    def reflection_matrix_weight(self, i: int) -> list[list[int]]:
        """Integer matrix of s_i on omega-coordinates (column convention)."""
        n = self.n
        cols = [self.reflect_weight(i, tuple(int(k == j) for k in range(n))) for j in range(n)]
        return [[int(cols[j][r]) for j in range(n)] for r in range(n)]

    def to_json(self) -> dict:
        out = {"name": self.name, "A": [list(r) for r in self.A], "d": list(self.d)}
        if self.p is not None:
            out["prime"] = self.p
        return out


def validate(raw: Sequence[Sequence[int]], d: Sequence[int] | None = None, p: int | None = None,
             name: str = "") -> CartanData:
    """Check the Cartan axioms and return an immutable :class:`CartanData`.

    Raises :class:`CartanError` naming the first violated condition with its
    0-based (row, column) position.
    """
    A = [list(r) for r in raw]
    n = len(A)
    if n == 0 or any(len(r) != n for r in A):
        raise CartanError("Cartan matrix must be square and non-empty")
    if any(not isinstance(v, int) or isinstance(v, bool) for r in A for v in r):
        raise CartanError("Cartan matrix entries must be integers (non-crystallographic data unsupported)")
    d = [1] * n if d is None else list(d)
    if len(d) != n:
        raise CartanError(f"symmetrizer has length {len(d)}, expected {n}")
    for i, di in enumerate(d):
        if not isinstance(di, int) or di <= 0:
            raise CartanError(f"symmetrizer entry d[{i}] = {di} is not a positive integer")
    for i in range(n):
        if A[i][i] != 2:
            raise CartanError(f"diagonal: A[{i}][{i}] = {A[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i != j and A[i][j] > 0:
                raise CartanError(f"sign: A[{i}][{j}] = {A[i][j]} > 0")
    for i in range(n):
        for j in range(n):
            if d[i] * A[i][j] != d[j] * A[j][i]:
                raise CartanError(
                    f"symmetrizability: d[{i}]*A[{i}][{j}] = {d[i] * A[i][j]} != "
                    f"d[{j}]*A[{j}][{i}] = {d[j] * A[j][i]}")
            if (A[i][j] == 0) != (A[j][i] == 0):
                raise CartanError(f"symmetrizability: A[{i}][{j}] and A[{j}][{i}] must vanish together")
    for i in range(n):
        for j in range(n):
            if i != j and (d[i] * A[i][j]) % _lcm(d[i], d[j]):
                raise CartanError(
                    f"arrow count: d[{i}]*A[{i}][{j}] / lcm(d[{i}], d[{j}]) is not an integer at ({i}, {j})")
    if p is None and any(di != 1 for di in d):
        raise CartanError("rational backend (no prime) requires all d_i = 1")
    if p is not None and (p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1))):
        raise CartanError(f"prime: {p} is not prime")
    return CartanData(tuple(tuple(r) for r in A), tuple(d), p, name)


def from_json(obj: dict) -> CartanData:
    if "A" not in obj:
        raise CartanError("Cartan JSON needs key 'A'")
    return validate(obj["A"], obj.get("d"), obj.get("prime"), obj.get("name", ""))


DATA_DIR = Path(__file__).parent / "data"


def load(path_or_name: str | Path) -> CartanData:
    """Load a Cartan JSON file, or a bundled datum by name (``"b2"``, ``"d4"``...)."""
    path = Path(path_or_name)
    if not path.exists():
        bundled = DATA_DIR / f"{path_or_name}.json"
        if not bundled.exists():
            raise CartanError(f"no such Cartan file or bundled datum: {path_or_name}")
        path = bundled
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CartanError(f"{path}: invalid JSON ({exc})") from exc
    return from_json(obj)


def rank4_dependence(x: int, y: int, z: int) -> CartanData:
    """Rank-4 symmetric datum: vertices 0,1,2 each joined to 3 with entries -x, -y, -z."""
    A = [[2, 0, 0, -x], [0, 2, 0, -y], [0, 0, 2, -z], [-x, -y, -z, 2]]
    return validate(A, name=f"rank4({x},{y},{z})")


def parse_root(text: str, n: int | None = None) -> Root:
    """Parse ``"2,1"`` into ``(2, 1)``."""
    try:
        root = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise RootError(f"invalid root string {text!r}") from exc
    if n is not None and len(root) != n:
        raise RootError(f"root {text!r} has {len(root)} coordinates, expected {n}")
    return root


def format_root(root: Sequence[int]) -> str:
    return ",".join(str(int(v)) for v in root)
