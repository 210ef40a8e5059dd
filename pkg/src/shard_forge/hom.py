"""Hom and Ext^1 between species modules.

Two independent routes: the three-term complex V -> W -> V built from the
projective resolution (``hom_complex``), and a direct solve of the
intertwiner equations (``hom_space``).  Brick and isomorphism tests search
the Hom space for invertible elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cartan import CartanData
from .errors import RootError, ValidationError
from .linalg import ScalarField
from .species import (SpeciesModule, adjacent_pairs, context, map_from_values, sgn,
                      vertex_action)

EXHAUSTIVE_LIMIT = 4096
RANDOM_TRIALS = 50


def _flat(F: ScalarField, mats) -> np.ndarray:
    parts = [np.asarray(m).reshape(-1) for m in mats]
    return np.concatenate(parts) if parts else F.zeros((0,))


def vertex_hom_basis(c: CartanData, i: int, m: int, n: int) -> list[np.ndarray]:
    """kappa-basis of Hom_{kappa(d_i)}(kappa(d_i)^m, kappa(d_i)^n)."""
    ctx = context(c)
    F = ctx.F
    d = c.d[i]
    out = []
    for r in range(n):
        for l in range(m):
            for s in range(d):
                X = F.zeros((d * n, d * m))
                X[r * d:(r + 1) * d, l * d:(l + 1) * d] = ctx.gen_mult(d, s)
                out.append(X)
    return out


def arrow_hom_basis(c: CartanData, i: int, j: int, m_i: int, n_j: int) -> list[np.ndarray]:
    """kappa-basis of Hom_{kappa(g)}(M_i, N_j), g = gcd(d_i, d_j)."""
    F = context(c).F
    g = c.gcd_pair(i, j)
    width = (c.d[i] // g) * m_i
    height = c.d[j] * n_j
    out = []
    for col in range(width):
        for row in range(height):
            vals = F.zeros((height, width))
            vals[row, col] = 1
            out.append(map_from_values(c, i, j, m_i, n_j, vals))
    return out


def _trace_to(c: CartanData, v: int, w: int, m_v: int, n_v: int, X: np.ndarray) -> np.ndarray:
    """Tr_v(X) = sum_k b_k^* X b_k, turning kappa(g)-linear M_v -> N_v into kappa(d_v)-linear."""
    ctx = context(c)
    F = ctx.F
    dv = c.d[v]
    g = c.gcd_pair(v, w)
    out = F.zeros(X.shape)
    for bk, bk_dual in zip(ctx.basis_mults(dv, g), ctx.dual_mults(dv, g)):
        out = out + F.matmul(ctx.R(dv, n_v, bk_dual), F.matmul(X, ctx.R(dv, m_v, bk)))
    return F.reduce(out)


@dataclass
class HomComplex:
    """V -> W -> V; d0 and d1 are matrices in the chosen kappa-bases of V and W."""

    dim_V: int
    dim_W: int
    d0: np.ndarray
    d1: np.ndarray
    F: ScalarField = field(repr=False)

    @property
    def term_dims(self) -> tuple[int, int, int]:
        return (self.dim_V, self.dim_W, self.dim_V)

    def homology(self) -> tuple[int, int, int]:
        r0 = self.F.rank(self.d0)
        r1 = self.F.rank(self.d1)
        return (self.dim_V - r0, self.dim_W - r1 - r0, self.dim_V - r1)


def hom_complex(M: SpeciesModule, N: SpeciesModule) -> HomComplex:
    c = M.cartan
    F = M.F
    n = c.n
    arrows = [(j, i, a) for (j, i) in adjacent_pairs(c) for a in range(c.arrow_count(i, j))]

    V_basis = [(v, X) for v in range(n) for X in vertex_hom_basis(c, v, M.dims[v], N.dims[v])]
    W_basis = [(k, Y) for k, (j, i, a) in enumerate(arrows)
               for Y in arrow_hom_basis(c, i, j, M.dims[i], N.dims[j])]

    def v_ambient(parts: dict) -> np.ndarray:
        return _flat(F, [parts.get(v, F.zeros((c.d[v] * N.dims[v], c.d[v] * M.dims[v]))) for v in range(n)])

    def w_ambient(parts: dict) -> np.ndarray:
        return _flat(F, [parts.get(k, F.zeros((c.d[j] * N.dims[j], c.d[i] * M.dims[i])))
                         for k, (j, i, a) in enumerate(arrows)])

    cols0 = []
    for v, X in V_basis:
        parts = {}
        for k, (j, i, a) in enumerate(arrows):
            term = None
            if i == v:
                term = F.matmul(N.maps[(j, i)][a], X)
            if j == v:
                t2 = F.matmul(X, M.maps[(j, i)][a])
                term = t2 * -1 if term is None else term - t2
            if term is not None:
                parts[k] = F.reduce(term)
        cols0.append(w_ambient(parts))

    cols1 = []
    for k, Y in W_basis:
        j, i, a = arrows[k]
        # Y: M_i -> N_j.  At vertex i it pairs with N_{i<-j}; at vertex j with M_{i<-j}.
        at_i = _trace_to(c, i, j, M.dims[i], N.dims[i], F.matmul(N.maps[(i, j)][a], Y))
        at_j = _trace_to(c, j, i, M.dims[j], N.dims[j], F.matmul(Y, M.maps[(i, j)][a]))
        cols1.append(v_ambient({i: F.reduce(at_i * sgn(i, j)), j: F.reduce(at_j * sgn(j, i))}))

    d0 = _in_basis(F, [w_ambient({k: Y}) for k, Y in W_basis], cols0)
    d1 = _in_basis(F, [v_ambient({v: X}) for v, X in V_basis], cols1)
    return HomComplex(len(V_basis), len(W_basis), d0, d1, F)


def _in_basis(F: ScalarField, basis: list[np.ndarray], images: list[np.ndarray]) -> np.ndarray:
    """Coordinates of the ambient vectors ``images`` in ``basis`` (one column per image)."""
    if not basis or not images:
        return F.zeros((len(basis), len(images)))
    B = np.stack(basis, axis=1)
    return F.solve(B, np.stack(images, axis=1))


def hom_ext_dims(M: SpeciesModule, N: SpeciesModule) -> tuple[int, int, int]:
    """(dim Hom(M,N), dim Ext^1(M,N), dim Hom(N,M)) over kappa, from the complex."""
    return hom_complex(M, N).homology()


def _vec_left_right(F: ScalarField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix of X -> A X B on row-major vec(X)."""
    return F.kron(A, np.asarray(B).T)


def hom_space(M: SpeciesModule, N: SpeciesModule) -> list[tuple[np.ndarray, ...]]:
    """Basis of Hom_Lambda(M, N) by solving the intertwiner equations directly."""
    c = M.cartan
    F = M.F
    n = c.n
    shapes = [(c.d[v] * N.dims[v], c.d[v] * M.dims[v]) for v in range(n)]
    sizes = [r * s for r, s in shapes]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offs[-1])
    if total == 0:
        return []
    rows = []

    def block(v: int, mat: np.ndarray) -> np.ndarray:
        out = F.zeros((mat.shape[0], total))
        out[:, offs[v]:offs[v + 1]] = mat
        return out

    for v in range(n):
        if sizes[v] == 0:
            continue
        RM = vertex_action(M, v)
        RN = vertex_action(N, v)
        # f_v RM - RN f_v = 0
        eq = F.reduce(_vec_left_right(F, F.eye(shapes[v][0]), RM) - _vec_left_right(F, RN, F.eye(shapes[v][1])))
        rows.append(block(v, eq))
    for (j, i) in adjacent_pairs(c):
        for a in range(c.arrow_count(i, j)):
            Na, Ma = N.maps[(j, i)][a], M.maps[(j, i)][a]
            h = Na.shape[0] * Ma.shape[1]
            if h == 0:
                continue
            eq = F.zeros((h, total))
            if sizes[i]:
                eq = eq + block(i, _vec_left_right(F, Na, F.eye(shapes[i][1])))
            if sizes[j]:
                eq = eq - block(j, _vec_left_right(F, F.eye(shapes[j][0]), Ma))
            rows.append(F.reduce(eq))
    system = np.concatenate(rows, axis=0) if rows else F.zeros((0, total))
    null = F.nullspace(system)
    out = []
    for k in range(null.shape[1]):
        vec = null[:, k]
        out.append(tuple(vec[offs[v]:offs[v + 1]].reshape(shapes[v]) for v in range(n)))
    return out


def euler_check(M: SpeciesModule, N: SpeciesModule) -> bool:
    h0, h1, _ = hom_ext_dims(M, N)
    h0_rev = len(hom_space(N, M))
    return h0 - h1 + h0_rev == M.cartan.bilinear(M.dims, N.dims)


# -- invertibility searches -----------------------------------------------------

def _is_invertible(F: ScalarField, f: tuple[np.ndarray, ...]) -> bool:
    for X in f:
        if X.shape[0] != X.shape[1]:
            return False
        if X.size and F.rank(X) != X.shape[0]:
            return False
    return True


def _combo(F: ScalarField, basis, coeffs) -> tuple[np.ndarray, ...]:
    parts = []
    for v in range(len(basis[0])):
        acc = F.zeros(basis[0][v].shape)
        for x, b in zip(coeffs, basis):
            if x:
                acc = acc + b[v] * x
        parts.append(F.reduce(acc))
    return tuple(parts)


@dataclass
class SearchResult:
    found: bool
    method: str
    hom_dim: int
    witness: tuple | None = None


def _projective_points(p: int, h: int):
    """Nonzero vectors of F_p^h with leading nonzero entry 1."""
    for lead in range(h):
        for tail in itertools.product(range(p), repeat=h - lead - 1):
            yield (0,) * lead + (1,) + tail


def _search_invertible(F: ScalarField, basis, seed: int, want_all: bool) -> SearchResult:
    """Look for an invertible combination (want_all=False) or a non-invertible nonzero one (want_all=True)."""
    h = len(basis)
    if F.is_finite and F.order ** h <= EXHAUSTIVE_LIMIT:
        for coeffs in _projective_points(F.order, h):
            f = _combo(F, basis, coeffs)
            inv = _is_invertible(F, f)
            if inv != want_all:
                return SearchResult(True, "exhaustive", h, f)
        return SearchResult(False, "exhaustive", h)
    rng = np.random.default_rng(seed)
    trials = [tuple(int(k == t) for k in range(h)) for t in range(h)]
    while len(trials) < RANDOM_TRIALS + h:
        if F.is_finite:
            v = tuple(int(x) for x in rng.integers(0, F.order, size=h))
        else:
            v = tuple(int(x) for x in rng.integers(-1000, 1001, size=h))
        if any(v):
            trials.append(v)
    for coeffs in trials:
        f = _combo(F, basis, coeffs)
        if _is_invertible(F, f) != want_all:
            return SearchResult(True, "randomized", h, f)
    return SearchResult(False, "randomized", h)


@dataclass
class BrickVerdict:
    is_brick: bool
    method: str
    end_dim: int

    def to_json(self) -> dict:
        return {"is_brick": self.is_brick, "method": self.method, "end_dim": self.end_dim}


def brick_test(M: SpeciesModule, seed: int = 0) -> BrickVerdict:
    if M.is_zero():
        return BrickVerdict(False, "zero module", 0)
    basis = hom_space(M, M)
    h = len(basis)
    if h == 1:
        return BrickVerdict(True, "end is kappa", 1)
    res = _search_invertible(M.F, basis, seed, want_all=True)
    if res.found:
        return BrickVerdict(False, res.method, h)
    if res.method == "randomized":
        try:
            db = M.cartan.d_beta(M.dims)
        except RootError:
            return BrickVerdict(True, "randomized", h)
        return BrickVerdict(h == db, "randomized+certificate", h)
    return BrickVerdict(True, res.method, h)


def is_brick(M: SpeciesModule, seed: int = 0) -> bool:
    return brick_test(M, seed).is_brick


def isomorphism(M: SpeciesModule, N: SpeciesModule, seed: int = 0) -> SearchResult:
    if M.cartan != N.cartan:
        raise ValidationError("modules over different Cartan data")
    if M.dims != N.dims:
        raise ValidationError(f"dimension mismatch: {M.dims} vs {N.dims}")
    if M.is_zero():
        return SearchResult(True, "zero module", 0, tuple())
    basis = hom_space(M, N)
    if not basis:
        return SearchResult(False, "hom is zero", 0)
    return _search_invertible(M.F, basis, seed, want_all=False)


def is_isomorphic(M: SpeciesModule, N: SpeciesModule, seed: int = 0) -> bool:
    return isomorphism(M, N, seed).found
