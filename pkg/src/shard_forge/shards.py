"""Shards of a root hyperplane, by region enumeration and by the sigma recursion."""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .cartan import CartanData, Root, format_root
from .cones import Cone, hyperplane, sigma
from .rank_two import cutting_witnesses
from .roots import PositiveExpression, positive_expression


@dataclass(frozen=True)
class Shard:
    normal: Root
    cone: Cone
    provenance: tuple[int, ...] | None = field(default=None, compare=False, hash=False)

    def to_json(self) -> dict:
        out = {"normal": format_root(self.normal), "cone": self.cone.to_json()}
        if self.provenance is not None:
            out["signs"] = "".join("+" if e > 0 else "-" for e in self.provenance)
        return out


def _map(fn, items, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _unique(shards: Sequence[Shard]) -> list[Shard]:
    seen: dict[Cone, Shard] = {}
    for s in shards:
        seen.setdefault(s.cone, s)
    return sorted(seen.values(), key=lambda s: s.cone.key())


def sign_cells(c: CartanData, beta: Sequence[int], expr: PositiveExpression | None = None,
               threads: int = 1) -> list[tuple[tuple[int, ...], Cone]]:
    """All closed sign cells of the shard arrangement inside beta^perp."""
    expr = expr or positive_expression(c, beta)
    normals = [d for _, d in cutting_witnesses(c, expr)]
    beta = tuple(beta)

    def cell(signs):
        return signs, Cone(c.n, [beta], [tuple(e * x for x in d) for e, d in zip(signs, normals)])

    return _map(cell, list(itertools.product((1, -1), repeat=len(normals))), threads)


def shards_direct(c: CartanData, beta: Sequence[int], threads: int = 1) -> list[Shard]:
    beta = tuple(beta)
    cells = sign_cells(c, beta, threads=threads)
    return _unique([Shard(beta, K) for _, K in cells if K.dim == c.n - 1])


def recursive_sign_cells(c: CartanData, expr: PositiveExpression) -> list[tuple[tuple[int, ...], Cone]]:
    """sigma_{i_r}^{e_r} ... sigma_{i_1}^{e_1}(alpha_j^perp) for every sign vector (e_1..e_r)."""
    memo: dict[tuple[Cone, int, int], Cone] = {}

    def step(K: Cone, i: int, e: int) -> Cone:
        key = (K, i, e)
        if key not in memo:
            memo[key] = sigma(c, i, e, K)
        return memo[key]

    layer = [((), hyperplane(c.simple(expr.seed)))]
    for i in expr.steps:
        layer = [(signs + (e,), step(K, i, e)) for signs, K in layer for e in (1, -1)]
    return layer


def shards_recursive(c: CartanData, expr: PositiveExpression) -> list[Shard]:
    cells = recursive_sign_cells(c, expr)
    return _unique([Shard(expr.root, K, signs) for signs, K in cells if K.dim == c.n - 1])


def same_shards(a: Sequence[Shard], b: Sequence[Shard]) -> bool:
    return sorted(s.cone.key() for s in a) == sorted(s.cone.key() for s in b)
