"""Modules over the preprojective algebra of a species, stored at the kappa level.

Vertex i carries M_i = kappa(d_i)^{m_i}, written in kappa-coordinates as
kappa^{d_i m_i} with index ``l*d_i + s`` standing for u_i^s e_l (u_i the
generator of kappa(d_i)).  An arrow a: i -> j is a kappa(g)-linear map
M_i -> M_j, g = gcd(d_i, d_j), stored as a (d_j m_j) x (d_i m_i) matrix over
kappa.  There are q = -d_i A_ij / lcm(d_i, d_j) arrows for each ordered
pair, and arrow a: i -> j is paired with arrow a: j -> i.

The exchange format used by JSON is the kappa(d_j)-matrix whose column
(a, k, l) is the image of b_k e_l, b_k = u_i^k the chosen kappa(d_j)-basis of
kappa(lcm(d_i, d_j)) inside kappa(d_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .cartan import CartanData, Root
from .errors import ValidationError
from .fields import FieldTower
from .linalg import GF, QQ, ScalarField, block_diag


def sgn(i: int, j: int) -> int:
    return 1 if i < j else -1


class KappaContext:
    """Scalar field kappa plus the structure matrices of the tower over kappa."""

    def __init__(self, c: CartanData):
        self.cartan = c
        if c.p is None:
            self.F: ScalarField = QQ()
            self.tower = None
        else:
            self.F = GF(c.p)
            self.tower = FieldTower(c.p, c.L)

    def __repr__(self):
        return f"KappaContext({self.F!r}, L={self.cartan.L})"

    def _trivial(self, *degrees: int) -> bool:
        if self.tower is None:
            if any(d != 1 for d in degrees):
                raise ValidationError("rational backend only supports d_i = 1")
            return True
        return False

    @lru_cache(maxsize=None)
    def gen_mult(self, d: int, s: int) -> np.ndarray:
        """Multiplication by u_d^s on kappa(d)."""
        if self._trivial(d):
            return self.F.eye(1)
        t = self.tower
        return t.mult_matrix(t.pow(t.generator(d), s), d)

    @lru_cache(maxsize=None)
    def sub_mult(self, d: int, g: int, r: int) -> np.ndarray:
        """Multiplication by u_g^r (an element of kappa(g) inside kappa(d)) on kappa(d)."""
        if self._trivial(d, g):
            return self.F.eye(1)
        t = self.tower
        return t.mult_matrix(t.pow(t.generator(g), r), d)

    @lru_cache(maxsize=None)
    def Q(self, d: int, g: int) -> np.ndarray:
        """Columns t*g + r: power coordinates of u_g^r u_d^t (t < d/g, r < g)."""
        if self._trivial(d, g):
            return self.F.eye(1)
        t = self.tower
        ud, ug = t.generator(d), t.generator(g)
        cols = [t.coords(t.mul(t.pow(ug, r), t.pow(ud, k)), d) for k in range(d // g) for r in range(g)]
        return np.stack(cols, axis=1)

    @lru_cache(maxsize=None)
    def Qinv(self, d: int, g: int) -> np.ndarray:
        return self.F.inverse(self.Q(d, g))

    @lru_cache(maxsize=None)
    def emb(self, g: int, d: int) -> np.ndarray:
        """d x g: kappa(g) -> kappa(d) in power coordinates."""
        if self._trivial(d, g):
            return self.F.eye(1)
        t = self.tower
        ug = t.generator(g)
        return np.stack([t.coords(t.pow(ug, r), d) for r in range(g)], axis=1)

    @lru_cache(maxsize=None)
    def tr(self, d: int, g: int) -> np.ndarray:
        """g x d: the trace kappa(d) -> kappa(g) in power coordinates."""
        if self._trivial(d, g):
            return self.F.eye(1)
        t = self.tower
        ud = t.generator(d)
        return np.stack([t.coords(t.trace(t.pow(ud, s), g, d), g) for s in range(d)], axis=1)

    @lru_cache(maxsize=None)
    def basis_mults(self, d: int, g: int) -> tuple[np.ndarray, ...]:
        """Multiplication by b_k = u_d^k, k < d/g (a kappa(g)-basis of kappa(d))."""
        return tuple(self.gen_mult(d, k) for k in range(d // g))

    @lru_cache(maxsize=None)
    def dual_mults(self, d: int, g: int) -> tuple[np.ndarray, ...]:
        """Multiplication by the trace-dual basis b_k^* of kappa(d) over kappa(g)."""
        if self._trivial(d, g):
            return (self.F.eye(1),)
        t = self.tower
        dual = t.dual_basis(g, d, t.power_basis(d, over=g))
        return tuple(t.mult_matrix(b, d) for b in dual)

    def R(self, d: int, m: int, mat: np.ndarray) -> np.ndarray:
        """Action of a kappa(d)-scalar (given by its d x d matrix) on kappa(d)^m."""
        return self.F.kron(self.F.eye(m), mat)

    # -- element serialization -------------------------------------------------

    def element_to_json(self, coords: np.ndarray, d: int):
        if self.tower is None:
            return [self.F.to_json(coords[0])]
        return list(self.tower.coeffs(self.tower.from_coords(coords, d)))

    def element_from_json(self, obj, d: int) -> np.ndarray:
        if self.tower is None:
            if isinstance(obj, list):
                if len(obj) != 1:
                    raise ValidationError(f"rational field element must have one coefficient, got {obj}")
                obj = obj[0]
            return self.F.asarray([self.F.from_json(obj)])
        x = self.tower.elt(obj)
        if not self.tower.in_subfield(x, d):
            raise ValidationError(f"field element {obj} does not lie in kappa({d})")
        return self.tower.coords(x, d)


_CONTEXTS: dict[CartanData, KappaContext] = {}


def context(c: CartanData) -> KappaContext:
    ctx = _CONTEXTS.get(c)
    if ctx is None:
        ctx = _CONTEXTS.setdefault(c, KappaContext(c))
    return ctx


def adjacent_pairs(c: CartanData) -> list[tuple[int, int]]:
    """Ordered pairs (j, i), i.e. keys 'j<-i', with A_ij < 0."""
    return [(j, i) for i in range(c.n) for j in range(c.n) if i != j and c.A[i][j] < 0]


@dataclass(frozen=True, eq=False)
class SpeciesModule:
    cartan: CartanData
    dims: tuple[int, ...]
    maps: dict  # (j, i) -> tuple of kappa-matrices, one per arrow i -> j

    def __post_init__(self):
        c = self.cartan
        if len(self.dims) != c.n or any(m < 0 for m in self.dims):
            raise ValidationError(f"dims {self.dims} invalid for rank {c.n}")
        for (j, i) in adjacent_pairs(c):
            arrows = self.maps.get((j, i))
            q = c.arrow_count(i, j)
            if arrows is None or len(arrows) != q:
                raise ValidationError(f"expected {q} maps for {j + 1}<-{i + 1}")
            for mat in arrows:
                want = (c.d[j] * self.dims[j], c.d[i] * self.dims[i])
                if mat.shape != want:
                    raise ValidationError(f"map {j + 1}<-{i + 1} has shape {mat.shape}, expected {want}")
                mat.flags.writeable = False
        extra = set(self.maps) - set(adjacent_pairs(c))
        if extra:
            raise ValidationError(f"maps given for non-adjacent pairs {sorted(extra)}")

    @property
    def ctx(self) -> KappaContext:
        return context(self.cartan)

    @property
    def F(self) -> ScalarField:
        return self.ctx.F

    @property
    def dim_vector(self) -> Root:
        return tuple(self.dims)

    def kdim(self, i: int) -> int:
        return self.cartan.d[i] * self.dims[i]

    @property
    def total_kdim(self) -> int:
        return sum(self.kdim(i) for i in range(self.cartan.n))

    def is_zero(self) -> bool:
        return not any(self.dims)

    def __repr__(self):
        return f"SpeciesModule(dims={self.dims})"


# -- conversions between exchange-format values and kappa-level maps -----------

def map_from_values(c: CartanData, i: int, j: int, m_i: int, m_j: int, values: np.ndarray) -> np.ndarray:
    """kappa-level matrix of the kappa(g)-linear map i -> j with phi(b_k e_l) = values[:, k*m_i + l]."""
    ctx = context(c)
    F = ctx.F
    di, dj = c.d[i], c.d[j]
    g = c.gcd_pair(i, j)
    K = di // g
    if m_i == 0 or m_j == 0:
        return F.zeros((dj * m_j, di * m_i))
    parts = []
    for t in range(K):
        block = values[:, t * m_i:(t + 1) * m_i]
        for r in range(g):
            parts.append(F.matmul(ctx.R(dj, m_j, ctx.sub_mult(dj, g, r)), block))
    stack = np.stack(parts, axis=2)  # (dj m_j, m_i, K g)
    out = F.matmul(stack.reshape(-1, K * g), ctx.Qinv(di, g))
    return F.reduce(out.reshape(dj * m_j, m_i * di))


def values_from_map(c: CartanData, i: int, j: int, m_i: int, phi: np.ndarray) -> np.ndarray:
    g = c.gcd_pair(i, j)
    di = c.d[i]
    cols = [k + l * di for k in range(di // g) for l in range(m_i)]
    return phi[:, cols]


def simple(c: CartanData, i: int) -> SpeciesModule:
    dims = tuple(int(k == i) for k in range(c.n))
    return zero_maps_module(c, dims)


def zero_maps_module(c: CartanData, dims: Sequence[int]) -> SpeciesModule:
    F = context(c).F
    maps = {}
    for (j, i) in adjacent_pairs(c):
        maps[(j, i)] = tuple(F.zeros((c.d[j] * dims[j], c.d[i] * dims[i])) for _ in range(c.arrow_count(i, j)))
    return SpeciesModule(c, tuple(dims), maps)


def from_values(c: CartanData, dims: Sequence[int], values: dict) -> SpeciesModule:
    """Build a module from per-arrow value matrices {(j, i): [kappa-matrix (d_j m_j) x (d_i/g m_i), ...]}."""
    dims = tuple(dims)
    F = context(c).F
    maps = {}
    for (j, i) in adjacent_pairs(c):
        q = c.arrow_count(i, j)
        vals = values.get((j, i))
        arrows = []
        for a in range(q):
            if vals is None:
                arrows.append(F.zeros((c.d[j] * dims[j], c.d[i] * dims[i])))
            else:
                arrows.append(map_from_values(c, i, j, dims[i], dims[j], F.asarray(vals[a])))
        maps[(j, i)] = tuple(arrows)
    return SpeciesModule(c, dims, maps)


def random_module(c: CartanData, rng: np.random.Generator, max_dim: int = 2,
                  dims: Sequence[int] | None = None) -> SpeciesModule:
    """Random module with each edge used in one direction only (relation holds automatically)."""
    F = context(c).F
    if dims is None:
        dims = tuple(int(x) for x in rng.integers(0, max_dim + 1, size=c.n))
    values = {}
    for i in range(c.n):
        for j in range(i + 1, c.n):
            if c.A[i][j] == 0:
                continue
            src, dst = (i, j) if rng.integers(0, 2) == 0 else (j, i)
            g = c.gcd_pair(src, dst)
            shape = (c.d[dst] * dims[dst], (c.d[src] // g) * dims[src])
            values[(dst, src)] = [F.random(rng, shape) for _ in range(c.arrow_count(src, dst))]
    return from_values(c, dims, values)


# -- the maps at a vertex ---------------------------------------------------------

@dataclass(frozen=True)
class Summand:
    j: int
    a: int
    lines: int  # kappa(d_i)-dimension of kappa(d_i) (x)_{kappa(g)} M_j
    offset: int  # kappa-coordinate offset inside M_di


def boundary_layout(M: SpeciesModule, i: int) -> list[Summand]:
    c = M.cartan
    out = []
    off = 0
    for j in c.neighbours(i):
        g = c.gcd_pair(i, j)
        lines = M.dims[j] * c.d[j] // g
        for a in range(c.arrow_count(j, i)):
            out.append(Summand(j, a, lines, off))
            off += lines * c.d[i]
    return out


def boundary_lines(M: SpeciesModule, i: int) -> int:
    return sum(s.lines for s in boundary_layout(M, i))


def in_block(c: CartanData, i: int, j: int, m_i: int, m_j: int, psi: np.ndarray) -> np.ndarray:
    """kappa(d_i) (x)_{kappa(g)} M_j -> M_i, c (x) m -> sgn(i,j) c psi(m)."""
    ctx = context(c)
    F = ctx.F
    di, dj = c.d[i], c.d[j]
    g = c.gcd_pair(i, j)
    lines = m_j * dj // g
    out = F.zeros((di * m_i, di * lines))
    if out.size == 0:
        return out
    for s in range(di):
        Rs = ctx.R(di, m_i, ctx.gen_mult(di, s))
        img = F.matmul(Rs, psi)
        for l in range(m_j):
            for t in range(dj // g):
                lam = l * (dj // g) + t
                out[:, lam * di + s] = img[:, l * dj + t]
    return F.reduce(out * sgn(i, j))


def out_block(c: CartanData, i: int, j: int, m_i: int, m_j: int, phi: np.ndarray) -> np.ndarray:
    """M_i -> kappa(d_i) (x)_{kappa(g)} M_j, x -> sum_k b_k^* (x) phi(b_k x)."""
    ctx = context(c)
    F = ctx.F
    di, dj = c.d[i], c.d[j]
    g = c.gcd_pair(i, j)
    lines = m_j * dj // g
    out = F.zeros((di * lines, di * m_i))
    if out.size == 0:
        return out
    to_lines = F.matmul(ctx.R(dj, m_j, ctx.Qinv(dj, g)), phi)  # coordinates over kappa(g), line-major
    emb = ctx.emb(g, di)
    for bk, bk_dual in zip(ctx.basis_mults(di, g), ctx.dual_mults(di, g)):
        lift = ctx.R(di, lines, F.matmul(bk_dual, emb))
        out = out + F.matmul(lift, F.matmul(to_lines, ctx.R(di, m_i, bk)))
    return F.reduce(out)


def phi_from_out_block(c: CartanData, i: int, j: int, m_j: int, G: np.ndarray) -> np.ndarray:
    """Inverse of :func:`out_block` on kappa(d_i)-linear maps."""
    ctx = context(c)
    F = ctx.F
    dj = c.d[j]
    g = c.gcd_pair(i, j)
    lines = m_j * dj // g
    trace = ctx.R(g, lines, ctx.tr(c.d[i], g)) if lines else F.zeros((0, 0))
    back = ctx.R(dj, m_j, ctx.Q(dj, g)) if m_j else F.zeros((0, 0))
    return F.matmul(back, F.matmul(trace, G))


def psi_from_in_block(c: CartanData, i: int, j: int, m_j: int, B: np.ndarray) -> np.ndarray:
    """Inverse of :func:`in_block`."""
    ctx = context(c)
    F = ctx.F
    dj = c.d[j]
    g = c.gcd_pair(i, j)
    lines = m_j * dj // g
    emb = ctx.R(c.d[i], lines, ctx.emb(g, c.d[i])) if lines else F.zeros((0, 0))
    fwd = ctx.R(dj, m_j, ctx.Qinv(dj, g)) if m_j else F.zeros((0, 0))
    out = F.matmul(B, F.matmul(emb, fwd))
    return F.reduce(out * sgn(i, j))


def in_out_maps(M: SpeciesModule, i: int) -> tuple[np.ndarray, np.ndarray]:
    """(M_in: M_di -> M_i, M_out: M_i -> M_di) as kappa-matrices; both kappa(d_i)-linear."""
    c = M.cartan
    F = M.F
    ins, outs = [], []
    for s in boundary_layout(M, i):
        psi = M.maps[(i, s.j)][s.a]
        phi = M.maps[(s.j, i)][s.a]
        ins.append(in_block(c, i, s.j, M.dims[i], M.dims[s.j], psi))
        outs.append(out_block(c, i, s.j, M.dims[i], M.dims[s.j], phi))
    ki = M.kdim(i)
    m_in = np.concatenate(ins, axis=1) if ins else F.zeros((ki, 0))
    m_out = np.concatenate(outs, axis=0) if outs else F.zeros((0, ki))
    return m_in, m_out


def boundary_action(M: SpeciesModule, i: int, s: int) -> np.ndarray:
    """u_i^s acting on M_di."""
    ctx = M.ctx
    return ctx.R(M.cartan.d[i], boundary_lines(M, i), ctx.gen_mult(M.cartan.d[i], s))


def relation_at(M: SpeciesModule, i: int) -> np.ndarray:
    m_in, m_out = in_out_maps(M, i)
    return M.F.matmul(m_in, m_out)


def check_preprojective(M: SpeciesModule) -> bool:
    return all(M.F.is_zero(relation_at(M, i)) for i in range(M.cartan.n))


def vertex_action(M: SpeciesModule, i: int, s: int = 1) -> np.ndarray:
    ctx = M.ctx
    return ctx.R(M.cartan.d[i], M.dims[i], ctx.gen_mult(M.cartan.d[i], s))


def direct_sum(M: SpeciesModule, N: SpeciesModule) -> SpeciesModule:
    F = M.F
    maps = {k: tuple(block_diag(F, [a, b]) for a, b in zip(M.maps[k], N.maps[k])) for k in M.maps}
    dims = tuple(a + b for a, b in zip(M.dims, N.dims))
    return SpeciesModule(M.cartan, dims, maps)


# -- JSON ---------------------------------------------------------------------------

def to_json(M: SpeciesModule) -> dict:
    c = M.cartan
    ctx = M.ctx
    out = {}
    for (j, i), arrows in sorted(M.maps.items()):
        dj = c.d[j]
        cols = []
        for phi in arrows:
            vals = values_from_map(c, i, j, M.dims[i], phi)
            for col in range(vals.shape[1]):
                cols.append(vals[:, col])
        rows = []
        for l in range(M.dims[j]):
            rows.append([ctx.element_to_json(col[l * dj:(l + 1) * dj], dj) for col in cols])
        out[f"{j + 1}<-{i + 1}"] = rows
    return {"dims": list(M.dims), "maps": out}


def from_json(c: CartanData, obj: dict) -> SpeciesModule:
    ctx = context(c)
    F = ctx.F
    dims = tuple(int(x) for x in obj["dims"])
    if len(dims) != c.n:
        raise ValidationError(f"dims has length {len(dims)}, expected {c.n}")
    values = {}
    for key, rows in obj.get("maps", {}).items():
        try:
            j, i = (int(t) - 1 for t in key.split("<-"))
        except ValueError as exc:
            raise ValidationError(f"bad map key {key!r}; expected 'j<-i'") from exc
        if (j, i) not in adjacent_pairs(c):
            raise ValidationError(f"map key {key!r} is not an edge of the Cartan datum")
        dj = c.d[j]
        g = c.gcd_pair(i, j)
        q = c.arrow_count(i, j)
        width = (c.d[i] // g) * dims[i]
        if len(rows) != dims[j] or any(len(r) != q * width for r in rows):
            raise ValidationError(f"map {key} has wrong shape")
        vals = [F.zeros((dj * dims[j], width)) for _ in range(q)]
        for l, row in enumerate(rows):
            for col, entry in enumerate(row):
                a, k = divmod(col, width)
                vals[a][l * dj:(l + 1) * dj, k] = ctx.element_from_json(entry, dj)
        values[(j, i)] = vals
    return from_values(c, dims, values)
