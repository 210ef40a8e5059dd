"""Rank-two subsystems through a root, and those that cut its hyperplane."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .cartan import CartanData, Root
from .roots import PositiveExpression, deltas, positive_expression


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector with the same direction."""
    fr = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def canonical_rows(rows: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Canonical integer basis of a row space: RREF, each row made primitive."""
    m = [[Fraction(x) for x in r] for r in rows]
    out = []
    if not m:
        return ()
    ncols = len(m[0])
    piv_row = 0
    for col in range(ncols):
        pr = next((r for r in range(piv_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[piv_row], m[pr] = m[pr], m[piv_row]
        lead = m[piv_row][col]
        m[piv_row] = [x / lead for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_row])]
        piv_row += 1
        if piv_row == len(m):
            break
    for r in m[:piv_row]:
        out.append(primitive(r))
    return tuple(out)


@dataclass(frozen=True)
class RankTwoSystem:
    span_basis: tuple[tuple[int, ...], ...]
    witness_pair: tuple[Root, Root] = field(compare=False, hash=False)

    @classmethod
    def spanned_by(cls, beta: Sequence[int], delta: Sequence[int]) -> "RankTwoSystem":
        basis = canonical_rows([beta, delta])
        if len(basis) != 2:
            raise ValueError(f"{tuple(beta)} and {tuple(delta)} are parallel")
        return cls(basis, (tuple(beta), tuple(delta)))

    def reflect(self, c: CartanData, i: int) -> "RankTwoSystem":
        b, d = self.witness_pair
        return RankTwoSystem.spanned_by(c.reflect_root(i, b), c.reflect_root(i, d))

    def contains(self, v: Sequence[int]) -> bool:
        return len(canonical_rows(list(self.span_basis) + [list(v)])) == 2


def cutting_systems(c: CartanData, expr: PositiveExpression) -> set[RankTwoSystem]:
    beta = expr.root
    return {RankTwoSystem.spanned_by(beta, d) for d in deltas(c, expr)}


def cutting_witnesses(c: CartanData, expr: PositiveExpression) -> list[tuple[RankTwoSystem, Root]]:
    """One delta per distinct cutting system, in first-occurrence order."""
    seen: dict[RankTwoSystem, Root] = {}
    for d in deltas(c, expr):
        seen.setdefault(RankTwoSystem.spanned_by(expr.root, d), d)
    return list(seen.items())


def cutting_count_bound_check(c: CartanData, expr: PositiveExpression) -> bool:
    return len(cutting_systems(c, expr)) <= expr.depth


def cutting_recursion_holds(c: CartanData, i: int, beta_prime: Sequence[int]) -> bool:
    """Check cut(s_i beta') = s_i cut(beta') + span(alpha_i, beta') for an up-cover."""
    beta = c.reflect_root(i, beta_prime)
    lhs = cutting_systems(c, positive_expression(c, beta))
    below = cutting_systems(c, positive_expression(c, beta_prime))
    rhs = {R.reflect(c, i) for R in below} | {RankTwoSystem.spanned_by(c.simple(i), beta_prime)}
    return lhs == rhs
