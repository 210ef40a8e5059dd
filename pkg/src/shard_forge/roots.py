"""Root poset: cover directions, depth, positive expressions, inversion sets."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .cartan import CartanData, Root
from .errors import RootError

DEFAULT_DEPTH_BOUND = 64


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"
    FIXED = "fixed"


@dataclass(frozen=True)
class PositiveExpression:
    """beta = s_{steps[-1]} ... s_{steps[0]} alpha_seed, each step going up."""

    seed: int
    steps: tuple[int, ...]
    root: Root

    @property
    def depth(self) -> int:
        return len(self.steps)

    def reflection_word(self) -> tuple[int, ...]:
        """Palindromic word (i_r, ..., i_1, j, i_1, ..., i_r) for the reflection t_beta."""
        return tuple(reversed(self.steps)) + (self.seed,) + self.steps

    def prefix_roots(self, c: CartanData) -> list[Root]:
        out = [c.simple(self.seed)]
        for i in self.steps:
            out.append(c.reflect_root(i, out[-1]))
        return out


def is_simple(beta: Sequence[int]) -> bool:
    return sum(beta) == 1 and all(v in (0, 1) for v in beta)


def _check_positive(beta: Sequence[int]) -> None:
    if not any(beta) or any(v < 0 for v in beta):
        raise RootError(f"{tuple(beta)} is not a positive root")


def cover_direction(c: CartanData, i: int, beta: Sequence[int]) -> Direction:
    _check_positive(beta)
    pairing = c.coroot_pairing(i, beta)
    if pairing < 0:
        return Direction.UP
    if pairing == 0:
        return Direction.FIXED
    if tuple(beta) == c.simple(i):
        raise RootError(f"s_{i} sends the simple root alpha_{i} to a negative root")
    return Direction.DOWN


def _descend(c: CartanData, beta: Sequence[int], bound: int) -> tuple[int, list[int]]:
    """Greedy smallest-index descent to a simple root: (seed, descent indices)."""
    _check_positive(beta)
    cur = tuple(beta)
    taken: list[int] = []
    while not is_simple(cur):
        if len(taken) >= bound:
            raise RootError(f"{tuple(beta)} not reached from a simple root within depth bound {bound}")
        for i in range(c.n):
            if c.coroot_pairing(i, cur) > 0:
                break
        else:
            raise RootError(f"{tuple(beta)} is not a real root (no descent from {cur})")
        cur = c.reflect_root(i, cur)
        if any(v < 0 for v in cur):
            raise RootError(f"{tuple(beta)} is not a real root (descent left the positive cone)")
        taken.append(i)
    return cur.index(1), taken


def depth(c: CartanData, beta: Sequence[int], bound: int = DEFAULT_DEPTH_BOUND) -> int:
    return len(_descend(c, beta, bound)[1])


def positive_expression(c: CartanData, beta: Sequence[int],
                        bound: int = DEFAULT_DEPTH_BOUND) -> PositiveExpression:
    seed, taken = _descend(c, beta, bound)
    return PositiveExpression(seed, tuple(reversed(taken)), tuple(beta))


def is_positive_expression(c: CartanData, seed: int, steps: Sequence[int]) -> bool:
    cur = c.simple(seed)
    for i in steps:
        if c.coroot_pairing(i, cur) >= 0:
            return False
        cur = c.reflect_root(i, cur)
    return True


def all_positive_expressions(c: CartanData, beta: Sequence[int], cap: int = 1000,
                             bound: int = DEFAULT_DEPTH_BOUND) -> list[PositiveExpression]:
    """Every positive expression of beta (at most ``cap`` of them), by exhaustive descent."""
    _descend(c, beta, bound)  # validates
    out: list[PositiveExpression] = []
    top = tuple(beta)

    def walk(cur: Root, taken: list[int]) -> None:
        if len(out) >= cap:
            return
        if is_simple(cur):
            out.append(PositiveExpression(cur.index(1), tuple(reversed(taken)), top))
            return
        for i in range(c.n):
            if c.coroot_pairing(i, cur) > 0:
                walk(c.reflect_root(i, cur), taken + [i])

    walk(top, [])
    return out


def positive_roots(c: CartanData, max_depth: int) -> Iterator[Root]:
    """Positive real roots of depth <= max_depth, in breadth-first order."""
    layer = [c.simple(i) for i in range(c.n)]
    seen = set(layer)
    for _ in range(max_depth + 1):
        yield from layer
        nxt = []
        for beta in layer:
            for i in range(c.n):
                if c.coroot_pairing(i, beta) < 0:
                    gamma = c.reflect_root(i, beta)
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
        layer = nxt


def inversions(c: CartanData, word: Sequence[int]) -> list[Root]:
    """[alpha_{i_1}, s_{i_1} alpha_{i_2}, s_{i_1} s_{i_2} alpha_{i_3}, ...] for a reduced word."""
    out: list[Root] = []
    for k, ik in enumerate(word):
        gamma = c.simple(ik)
        for i in reversed(word[:k]):
            gamma = c.reflect_root(i, gamma)
        if any(v < 0 for v in gamma):
            raise RootError(f"word {tuple(word)} is not reduced (negative root at position {k})")
        out.append(gamma)
    if len(set(out)) != len(out):
        raise RootError(f"word {tuple(word)} is not reduced (repeated inversion)")
    return out


def reflect_across(c: CartanData, beta: Sequence[int], gamma: Sequence[int]) -> Root:
    """t_beta(gamma) = gamma - (beta^vee, gamma) beta, with (beta^vee, gamma) = (beta, gamma) / d_beta."""
    num = c.bilinear(beta, gamma)
    db = c.d_beta(beta)
    if num % db:
        raise RootError(f"non-integral coroot pairing of {tuple(beta)} with {tuple(gamma)}")
    k = num // db
    return tuple(g - k * b for g, b in zip(gamma, beta))


def inversion_involution(c: CartanData, t_root: Sequence[int], gamma: Sequence[int]) -> Root:
    """gamma -> -t(gamma) on the inversion set of the reflection t with root t_root."""
    expr = positive_expression(c, t_root)
    inv = set(inversions(c, expr.reflection_word()))
    if tuple(gamma) not in inv:
        raise RootError(f"{tuple(gamma)} is not an inversion of the reflection in {tuple(t_root)}")
    return tuple(-v for v in reflect_across(c, t_root, gamma))


def deltas(c: CartanData, expr: PositiveExpression) -> list[Root]:
    """delta_k = s_{i_r} ... s_{i_{k+1}} alpha_{i_k} for k = 1..r."""
    out = []
    steps = expr.steps
    for k, ik in enumerate(steps):
        out.append(c.reflect_root_word(steps[k + 1:], c.simple(ik)))
    return out
