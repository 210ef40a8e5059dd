"""Stability domains: the sigma recursion, a brute-force oracle, shard modules."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cartan import CartanData, Root, format_root
from .cones import Cone, hyperplane, sigma
from .errors import OracleRangeError
from .functors import SignedWord, bricks_of_dimension
from .roots import PositiveExpression, positive_expression
from .shards import shards_direct
from .species import SpeciesModule, adjacent_pairs, vertex_action

ORACLE_BOUND = 1 << 16


def stab_recursive(c: CartanData, word: SignedWord) -> Cone:
    """sigma_{i_r}^{e_r} ... sigma_{i_1}^{e_1}(alpha_seed^perp)."""
    word.expression(c)  # rejects words that are not positive expressions
    K = hyperplane(c.simple(word.seed))
    for i, e in word.steps:
        K = sigma(c, i, e, K)
    return K


# -- oracle -------------------------------------------------------------------------

def _span_key(F, basis: np.ndarray) -> bytes:
    if basis.shape[1] == 0:
        return b""
    r, piv = F.rref(basis.T)
    return np.asarray(r[:len(piv)]).tobytes()


class _Closure:
    def __init__(self, M: SpeciesModule):
        self.M = M
        self.F = M.F
        c = M.cartan
        self.actions = [[vertex_action(M, v, s) for s in range(c.d[v])] for v in range(c.n)]
        self.edges = [(j, i, phi) for (j, i) in adjacent_pairs(c) for phi in M.maps[(j, i)]]

    def stable_span(self, v: int, vectors: np.ndarray) -> np.ndarray:
        F = self.F
        if vectors.shape[1] == 0:
            return vectors
        cols = np.concatenate([F.matmul(R, vectors) for R in self.actions[v]], axis=1)
        return F.column_space(cols)

    def close(self, spaces: list[np.ndarray]) -> list[np.ndarray]:
        F = self.F
        spaces = list(spaces)
        dirty = True
        while dirty:
            dirty = False
            for j, i, phi in self.edges:
                if spaces[i].shape[1] == 0 or phi.size == 0:
                    continue
                img = F.matmul(phi, spaces[i])
                merged = self.stable_span(j, np.concatenate([spaces[j], img], axis=1))
                if merged.shape[1] > spaces[j].shape[1]:
                    spaces[j] = merged
                    dirty = True
        return spaces


def _check_range(M: SpeciesModule, bound: int) -> None:
    F = M.F
    if not F.is_finite:
        raise OracleRangeError("oracle out of range: the submodule oracle needs a finite field")
    if F.order ** M.total_kdim > bound:
        raise OracleRangeError(
            f"oracle out of range: {F.order}^{M.total_kdim} vectors exceeds bound {bound}")


def submodules(M: SpeciesModule, bound: int = ORACLE_BOUND) -> list[list[np.ndarray]]:
    """All submodules, as per-vertex kappa-bases, built as sums of cyclic submodules."""
    _check_range(M, bound)
    F = M.F
    c = M.cartan
    clo = _Closure(M)
    found: dict[tuple, list[np.ndarray]] = {}
    zero = [F.zeros((M.kdim(v), 0)) for v in range(c.n)]
    found[tuple(b"" for _ in range(c.n))] = zero
    cyclic = []
    for v in range(c.n):
        seen_lines = set()
        for coeffs in itertools.product(range(F.order), repeat=M.kdim(v)):
            if not any(coeffs):
                continue
            vec = F.asarray(np.array(coeffs, dtype=np.int64)).reshape(-1, 1)
            line = clo.stable_span(v, vec)
            lk = _span_key(F, line)
            if lk in seen_lines:
                continue
            seen_lines.add(lk)
            spaces = list(zero)
            spaces[v] = line
            spaces = clo.close(spaces)
            key = tuple(_span_key(F, s) for s in spaces)
            if key not in found:
                found[key] = spaces
                cyclic.append(spaces)
    frontier = list(found.values())
    while frontier:
        new = []
        for X in frontier:
            for Y in cyclic:
                S = [F.column_space(np.concatenate([x, y], axis=1)) for x, y in zip(X, Y)]
                key = tuple(_span_key(F, s) for s in S)
                if key not in found:
                    found[key] = S
                    new.append(S)
        frontier = new
    return list(found.values())


def submodule_dim_vectors(M: SpeciesModule, bound: int = ORACLE_BOUND) -> set[Root]:
    c = M.cartan
    return {tuple(S[v].shape[1] // c.d[v] for v in range(c.n)) for S in submodules(M, bound)}


def stab_oracle(M: SpeciesModule, bound: int = ORACLE_BOUND) -> Cone:
    c = M.cartan
    if M.is_zero():
        return Cone(c.n)
    dims = sorted(submodule_dim_vectors(M, bound))
    return Cone(c.n, [M.dims], [d for d in dims if any(d)])


# -- classification ------------------------------------------------------------

@dataclass
class StabResult:
    word: SignedWord
    dims: Root
    cone: Cone
    method: str
    is_shard_module: bool

    def to_json(self) -> dict:
        return {"word": str(self.word), "dim": format_root(self.dims), "method": self.method,
                "is_shard_module": self.is_shard_module, "cone": self.cone.to_json()}


def stab_result(c: CartanData, word: SignedWord, module: SpeciesModule | None = None) -> StabResult:
    K = stab_recursive(c, word)
    dims = module.dims if module is not None else word.expression(c).root
    return StabResult(word, tuple(dims), K, "recursive", K.dim == c.n - 1)


def classify_shard_modules(c: CartanData, beta: Sequence[int],
                           expr: PositiveExpression | None = None) -> list[StabResult]:
    expr = expr or positive_expression(c, beta)
    return [stab_result(c, w, M) for w, M in bricks_of_dimension(c, beta, expr)]


def bijection_check(c: CartanData, beta: Sequence[int]) -> bool:
    """Shard-module stability cones hit every shard of beta^perp exactly once."""
    results = classify_shard_modules(c, beta)
    cones = sorted(r.cone.key() for r in results if r.is_shard_module)
    shards = sorted(s.cone.key() for s in shards_direct(c, beta))
    return cones == shards
