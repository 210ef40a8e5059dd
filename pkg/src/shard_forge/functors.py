"""Reflection functors and the real-brick recursion."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cartan import CartanData, Root
from .errors import PreconditionError, RootError, ValidationError
from .hom import is_isomorphic
from .roots import PositiveExpression, is_positive_expression, positive_expression
from .species import (SpeciesModule, boundary_action, boundary_layout, boundary_lines, check_preprojective,
                      in_out_maps, phi_from_out_block, psi_from_in_block, simple)


@dataclass(frozen=True)
class SignedWord:
    """Sigma^{e_r}_{i_r} ... Sigma^{e_1}_{i_1} S_seed; steps listed in application order."""

    seed: int
    steps: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.steps)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.steps)

    def __str__(self) -> str:
        body = " ".join(f"{i + 1}{'+' if e > 0 else '-'}" for i, e in self.steps)
        return f"S{self.seed + 1} ; {body}".rstrip()

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SignedWord":
        m = re.fullmatch(r"\s*S(\d+)\s*;?\s*(.*?)\s*", text)
        if not m:
            raise ValidationError(f"bad signed word {text!r}; expected e.g. 'S6 ; 5+ 4+ 2-'")
        seed = int(m.group(1)) - 1
        steps = []
        for tok in m.group(2).split():
            t = re.fullmatch(r"(\d+)([+-])", tok)
            if not t:
                raise ValidationError(f"bad step {tok!r} in signed word")
            steps.append((int(t.group(1)) - 1, 1 if t.group(2) == "+" else -1))
        word = cls(seed, tuple(steps))
        if n is not None:
            for v in (seed,) + word.vertices:
                if not 0 <= v < n:
                    raise ValidationError(f"vertex {v + 1} out of range 1..{n}")
        return word

    def expression(self, c: CartanData) -> PositiveExpression:
        if not is_positive_expression(c, self.seed, self.vertices):
            raise RootError(f"underlying word of {self} is not a positive expression")
        root = c.reflect_root_word(self.vertices, c.simple(self.seed))
        return PositiveExpression(self.seed, self.vertices, root)


def no_sub(M: SpeciesModule, i: int) -> bool:
    """M_{i,out} injective."""
    _, m_out = in_out_maps(M, i)
    return M.F.rank(m_out) == M.kdim(i)


def no_quot(M: SpeciesModule, i: int) -> bool:
    """M_{i,in} surjective."""
    m_in, _ = in_out_maps(M, i)
    return M.F.rank(m_in) == M.kdim(i)


def _line_basis(F, action, vectors: np.ndarray, d: int) -> np.ndarray:
    """Greedy kappa(d)-basis of the kappa(d)-stable space spanned by ``vectors``.

    Returns columns [u^s v_l], ordered l*d + s.
    """
    chosen: list[np.ndarray] = []
    span = F.zeros((vectors.shape[0], 0))
    for k in range(vectors.shape[1]):
        v = vectors[:, k]
        if F.in_span(span, v):
            continue
        block = [F.matmul(action(s), v.reshape(-1, 1))[:, 0] for s in range(d)]
        chosen.extend(block)
        span = np.stack(chosen, axis=1)
    return span


def _rebuild(M: SpeciesModule, i: int, new_dim: int, new_in: np.ndarray, new_out: np.ndarray) -> SpeciesModule:
    c = M.cartan
    dims = list(M.dims)
    dims[i] = new_dim
    maps = dict(M.maps)
    layout = boundary_layout(M, i)
    di = c.d[i]
    new_maps: dict[tuple[int, int], list] = {}
    for s in layout:
        rows = slice(s.offset, s.offset + s.lines * di)
        phi = phi_from_out_block(c, i, s.j, M.dims[s.j], new_out[rows, :])
        psi = psi_from_in_block(c, i, s.j, M.dims[s.j], new_in[:, rows])
        new_maps.setdefault((s.j, i), [None] * c.arrow_count(i, s.j))[s.a] = phi
        new_maps.setdefault((i, s.j), [None] * c.arrow_count(s.j, i))[s.a] = psi
    for key, arrows in new_maps.items():
        maps[key] = tuple(arrows)
    return SpeciesModule(c, tuple(dims), maps)


def _postconditions(M: SpeciesModule, R: SpeciesModule, i: int, new_in, new_out) -> None:
    c = M.cartan
    if R.dims != c.reflect_root(i, M.dims):
        raise AssertionError(f"reflection functor gave dims {R.dims}, expected {c.reflect_root(i, M.dims)}")
    got_in, got_out = in_out_maps(R, i)
    F = M.F
    if not (F.is_zero(got_in - new_in) and F.is_zero(got_out - new_out)):
        raise AssertionError("edge maps do not reassemble to the constructed vertex maps")
    if not check_preprojective(R):
        raise AssertionError("reflection functor broke the preprojective relation")


def sigma_plus(M: SpeciesModule, i: int) -> SpeciesModule:
    """Sigma_i: replace M_i by Ker(M_in).  Defined on NoQuot_i."""
    F = M.F
    c = M.cartan
    m_in, m_out = in_out_maps(M, i)
    if F.rank(m_in) != M.kdim(i):
        raise PreconditionError(f"reflection functor undefined at vertex {i + 1} (M_in not surjective)")
    di = c.d[i]
    kernel = F.nullspace(m_in)
    iota = _line_basis(F, lambda s: boundary_action(M, i, s), kernel, di)
    new_dim = iota.shape[1] // di
    factor = F.solve(iota, m_out) if m_out.shape[1] else F.zeros((iota.shape[1], 0))
    new_in = F.matmul(factor, m_in)
    R = _rebuild(M, i, new_dim, new_in, iota)
    _postconditions(M, R, i, new_in, iota)
    return R


def sigma_minus(M: SpeciesModule, i: int) -> SpeciesModule:
    """Sigma_i^{-1}: replace M_i by CoKer(M_out).  Defined on NoSub_i."""
    F = M.F
    c = M.cartan
    m_in, m_out = in_out_maps(M, i)
    if F.rank(m_out) != M.kdim(i):
        raise PreconditionError(f"reflection functor undefined at vertex {i + 1} (M_out not injective)")
    di = c.d[i]
    total = boundary_lines(M, i)
    basis = m_out
    comp_cols: list[int] = []
    for lam in range(total):
        cols = list(range(lam * di, (lam + 1) * di))
        trial = np.concatenate([basis, F.eye(total * di)[:, cols]], axis=1)
        if F.rank(trial) == trial.shape[1]:
            basis = trial
            comp_cols.extend(cols)
    B_c = F.eye(total * di)[:, comp_cols]
    inv = F.inverse(basis) if basis.size else F.zeros((0, 0))
    proj = inv[M.kdim(i):, :]
    new_out = F.matmul(m_out, F.matmul(m_in, B_c))
    new_dim = len(comp_cols) // di
    R = _rebuild(M, i, new_dim, proj, new_out)
    _postconditions(M, R, i, proj, new_out)
    return R


def apply_signed(M: SpeciesModule, i: int, sign: int) -> SpeciesModule:
    return sigma_plus(M, i) if sign > 0 else sigma_minus(M, i)


def apply_word(c: CartanData, word: SignedWord) -> SpeciesModule:
    M = simple(c, word.seed)
    for i, e in word.steps:
        M = apply_signed(M, i, e)
    return M


def signed_products(c: CartanData, expr: PositiveExpression) -> list[tuple[SignedWord, SpeciesModule | None]]:
    """Every sign vector for ``expr`` with its module, or None where a functor is undefined."""
    out: list[tuple[SignedWord, SpeciesModule | None]] = []

    def walk(M: SpeciesModule | None, k: int, signs: tuple[int, ...]) -> None:
        if k == len(expr.steps):
            out.append((SignedWord(expr.seed, tuple(zip(expr.steps, signs))), M))
            return
        for e in (1, -1):
            nxt = None
            if M is not None:
                try:
                    nxt = apply_signed(M, expr.steps[k], e)
                except PreconditionError:
                    nxt = None
            walk(nxt, k + 1, signs + (e,))

    walk(simple(c, expr.seed), 0, ())
    return out


def bricks_of_dimension(c: CartanData, beta: Sequence[int], expr: PositiveExpression | None = None,
                        seed: int = 0) -> list[tuple[SignedWord, SpeciesModule]]:
    """One representative per isomorphism class of bricks of dimension beta."""
    expr = expr or positive_expression(c, beta)
    reps: list[tuple[SignedWord, SpeciesModule]] = []
    for word, M in signed_products(c, expr):
        if M is None:
            continue
        if not any(is_isomorphic(M, N, seed) for _, N in reps):
            reps.append((word, M))
    return reps


def roundtrip_is_isomorphism(M: SpeciesModule, i: int, seed: int = 0) -> bool | None:
    """None if neither functor applies; else whether the plus/minus round trip returns M."""
    results = []
    if no_quot(M, i):
        results.append(is_isomorphic(sigma_minus(sigma_plus(M, i), i), M, seed))
    if no_sub(M, i):
        results.append(is_isomorphic(sigma_plus(sigma_minus(M, i), i), M, seed))
    return all(results) if results else None
