"""Exact polyhedral cones in weight space.

A cone is stored by its constraint normals (root-space integer vectors,
read as <x, nu> >= 0 or = 0) and/or its generators (lineality basis plus
extreme rays, primitive integer weight vectors).  Whichever side is missing
is computed on demand by the double description method, in integer
arithmetic with primitive rescaling after every combination.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .cartan import CartanData
from .errors import ValidationError
from .rank_two import canonical_rows, primitive

Vec = tuple[int, ...]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _prim(v: Sequence[int]) -> Vec:
    g = reduce(math.gcd, v, 0)
    return tuple(v) if g <= 1 else tuple(x // g for x in v)


def _combine(ca: int, a: Vec, cb: int, b: Vec) -> Vec:
    return _prim([ca * x + cb * y for x, y in zip(a, b)])


def double_description(n: int, equalities: Iterable[Sequence], inequalities: Iterable[Sequence]
                       ) -> tuple[list[Vec], list[Vec]]:
    """Generators (lineality, rays) of {x in Q^n : <x,e> = 0, <x,a> >= 0}.

    Rays are extreme and irredundant; both lists are unnormalized (see
    :func:`canonical_generators`).
    """
    lin: list[Vec] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[Vec] = []
    seen_ineq: list[Vec] = []
    constraints = [(primitive(e), True) for e in equalities] + [(primitive(a), False) for a in inequalities]

    for a, is_eq in constraints:
        if not any(a):
            continue
        pivot = next((k for k, l in enumerate(lin) if _dot(a, l) != 0), None)
        if pivot is not None:
            l0 = lin.pop(pivot)
            s0 = _dot(a, l0)
            if s0 < 0:
                l0, s0 = tuple(-x for x in l0), -s0
            lin = [_combine(s0, l, -_dot(a, l), l0) for l in lin]
            rays = [_combine(s0, r, -_dot(a, r), l0) for r in rays]
            if not is_eq:
                rays.append(_prim(l0))
        else:
            vals = [_dot(a, r) for r in rays]
            pos = [k for k, v in enumerate(vals) if v > 0]
            neg = [k for k, v in enumerate(vals) if v < 0]
            zero = [k for k, v in enumerate(vals) if v == 0]
            tight = [frozenset(q for q, b in enumerate(seen_ineq) if _dot(b, r) == 0) for r in rays]
            new: list[Vec] = []
            for p in pos:
                for m in neg:
                    common = tight[p] & tight[m]
                    if any(k != p and k != m and common <= tight[k] for k in range(len(rays))):
                        continue
                    new.append(_combine(vals[p], rays[m], -vals[m], rays[p]))
            keep = zero if is_eq else pos + zero
            rays = [rays[k] for k in keep] + new
        if not is_eq:
            seen_ineq.append(a)
    return lin, rays


def _rank(rows: Sequence[Sequence]) -> int:
    return len(canonical_rows(rows)) if rows else 0


def canonical_generators(n: int, lin: Sequence[Vec], rays: Sequence[Vec]
                         ) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Canonical lineality (RREF, primitive rows) and sorted primitive rays orthogonal to it."""
    L = canonical_rows(lin) if lin else ()
    out = set()
    if L:
        # project rays onto the orthogonal complement of span(L)
        gram = [[Fraction(_dot(a, b)) for b in L] for a in L]
        k = len(L)
        for r in rays:
            rhs = [Fraction(_dot(r, l)) for l in L]
            coef = _solve_small(gram, rhs)
            proj = [Fraction(r[t]) - sum(coef[q] * L[q][t] for q in range(k)) for t in range(n)]
            v = primitive(proj)
            if any(v):
                out.add(v)
    else:
        out = {_prim(r) for r in rays if any(r)}
    return L, tuple(sorted(out))


def _solve_small(a, b):
    k = len(a)
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(k):
        pr = next(r for r in range(col, k) if m[r][col] != 0)
        m[col], m[pr] = m[pr], m[col]
        lead = m[col][col]
        m[col] = [x / lead for x in m[col]]
        for r in range(k):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [Fraction(m[r][k]) for r in range(k)]


class Cone:
    """Closed polyhedral cone in Q^n (omega coordinates).

    Build from constraints with ``Cone(n, equalities=..., inequalities=...)``
    or from generators with :meth:`from_generators`.
    """

    def __init__(self, n: int, equalities: Iterable[Sequence[int]] = (),
                 inequalities: Iterable[Sequence[int]] = ()):
        self.n = n
        self._eq = tuple(tuple(int(x) for x in e) for e in equalities)
        self._ineq = tuple(tuple(int(x) for x in a) for a in inequalities)
        for v in self._eq + self._ineq:
            if len(v) != n:
                raise ValidationError(f"constraint {v} has length {len(v)}, expected {n}")
        self._has_h = True
        self._v: tuple[tuple[Vec, ...], tuple[Vec, ...]] | None = None
        self._lock = threading.RLock()

    @classmethod
    def from_generators(cls, n: int, rays: Iterable[Sequence] = (), lineality: Iterable[Sequence] = ()) -> "Cone":
        cone = cls(n)
        cone._has_h = False
        lin = [primitive(v) for v in lineality]
        rs = [primitive(v) for v in rays]
        cone._v = canonical_generators(n, [v for v in lin if any(v)], [v for v in rs if any(v)])
        if cone._v[1]:
            # drop non-extreme generators by a round trip through the constraints
            eq, ineq = facet_enumeration(n, cone._v[0], cone._v[1])
            cone._eq, cone._ineq = eq, ineq
            cone._has_h = True
            cone._v = None
            cone._v_rep()
        return cone

    # -- representations ---------------------------------------------------

    def _v_rep(self) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
        if self._v is None:
            with self._lock:
                if self._v is None:
                    lin, rays = double_description(self.n, self._eq, self._ineq)
                    self._v = canonical_generators(self.n, lin, rays)
        return self._v

    @property
    def lineality(self) -> tuple[Vec, ...]:
        return self._v_rep()[0]

    @property
    def rays(self) -> tuple[Vec, ...]:
        return self._v_rep()[1]

    @property
    def equalities(self) -> tuple[Vec, ...]:
        self._ensure_h()
        return self._eq

    @property
    def inequalities(self) -> tuple[Vec, ...]:
        self._ensure_h()
        return self._ineq

    def _ensure_h(self) -> None:
        if not self._has_h:
            with self._lock:
                if not self._has_h:
                    self._eq, self._ineq = facet_enumeration(self.n, *self._v_rep())
                    self._has_h = True

    @property
    def dim(self) -> int:
        lin, rays = self._v_rep()
        return _rank(list(lin) + list(rays))

    def key(self) -> tuple:
        return self._v_rep()

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self.n == other.n and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.n, self.key()))

    def __repr__(self) -> str:
        lin, rays = self._v_rep()
        return f"Cone(n={self.n}, dim={self.dim}, rays={list(rays)}, lineality={list(lin)})"

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, x: Sequence) -> bool:
        return (all(_dot(e, x) == 0 for e in self.equalities)
                and all(_dot(a, x) >= 0 for a in self.inequalities))

    # -- operations --------------------------------------------------------

    def intersect(self, other: "Cone") -> "Cone":
        return Cone(self.n, self.equalities + other.equalities, self.inequalities + other.inequalities)

    def with_halfspace(self, normal: Sequence[int]) -> "Cone":
        return Cone(self.n, self.equalities, self.inequalities + (tuple(normal),))

    def reflect(self, c: CartanData, i: int) -> "Cone":
        """s_i K, computed on the constraint side (normals are roots)."""
        return Cone(self.n, [c.reflect_root(i, e) for e in self.equalities],
                    [c.reflect_root(i, a) for a in self.inequalities])

    def reflect_generators(self, c: CartanData, i: int) -> "Cone":
        """s_i K, computed on the generator side (rays are weights)."""
        return Cone.from_generators(self.n, [c.reflect_weight(i, r) for r in self.rays],
                                    [c.reflect_weight(i, l) for l in self.lineality])

    def to_json(self) -> dict:
        lin, rays = self._v_rep()
        return {
            "equalities": [list(v) for v in self.equalities],
            "inequalities": [list(v) for v in self.inequalities],
            "rays": [list(v) for v in rays],
            "lineality": [list(v) for v in lin],
            "dim": self.dim,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Cone":
        if obj.get("equalities") or obj.get("inequalities"):
            n = len((obj.get("equalities") or obj.get("inequalities"))[0])
            return cls(n, obj.get("equalities", []), obj.get("inequalities", []))
        gens = obj.get("rays", []) + obj.get("lineality", [])
        if not gens:
            raise ValidationError("cone JSON without constraints needs generators (or use 'n')")
        return cls.from_generators(len(gens[0]), obj.get("rays", []), obj.get("lineality", []))


def facet_enumeration(n: int, lineality: Sequence[Vec], rays: Sequence[Vec]
                      ) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Irredundant (equalities, inequalities) of cone(rays) + span(lineality), via the dual cone."""
    dual_lin, dual_rays = double_description(n, lineality, rays)
    L, R = canonical_generators(n, dual_lin, dual_rays)
    return L, R


def full_space(n: int) -> Cone:
    return Cone(n)


def zero_cone(n: int) -> Cone:
    return Cone(n, equalities=[tuple(int(i == j) for j in range(n)) for i in range(n)])


def hyperplane(beta: Sequence[int]) -> Cone:
    if not any(beta):
        raise ValidationError("hyperplane of the zero vector")
    return Cone(len(beta), equalities=[tuple(beta)])


def dimension(K: Cone) -> int:
    return K.dim


def equal(K1: Cone, K2: Cone) -> bool:
    return K1 == K2


def sigma(c: CartanData, i: int, sign: int, K: Cone) -> Cone:
    """sigma_i^{sign}(K) = s_i(K cap {sign <x, alpha_i> >= 0})."""
    alpha = c.simple(i)
    half = tuple(sign * a for a in alpha)
    return K.with_halfspace(half).reflect(c, i)


def sigma_via_generators(c: CartanData, i: int, sign: int, K: Cone) -> Cone:
    """Same set as :func:`sigma`, by reflecting the generators of the intersection."""
    alpha = c.simple(i)
    return K.with_halfspace(tuple(sign * a for a in alpha)).reflect_generators(c, i)


def sigma_reflect_first(c: CartanData, i: int, sign: int, K: Cone) -> Cone:
    """s_i(K) cap {-sign <x, alpha_i> >= 0}, the other displayed form of sigma_i^{sign}."""
    alpha = c.simple(i)
    return K.reflect(c, i).with_halfspace(tuple(-sign * a for a in alpha))
