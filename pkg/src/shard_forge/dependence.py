"""The rank-4 family whose inversion arrangement depends on the Cartan entries."""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from .cartan import rank4_dependence
from .cones import Cone
from .errors import ValidationError
from .roots import inversions

# s_1 s_2 s_4 s_1 s_3 s_4 s_2 s_3, 0-based
WORD = (0, 1, 3, 0, 2, 3, 1, 2)


def det(rows) -> int:
    return int(sympy.Matrix(rows).det())


def closed_forms(x: int, y: int, z: int) -> tuple[int, Fraction]:
    """(y(x+z)(x-z), y(x+z)(x-z) / ((z^2-1) x^2 y^2)), the reference closed forms."""
    d = y * (x + z) * (x - z)
    return d, Fraction(d, (z * z - 1) * x * x * y * y)


def cross_ratio_from_minors(x: int, y: int, z: int) -> Fraction:
    """(x+z)(x-z) / ((z^2-1) x^2), read off the 2x2 minors in the last two coordinates.

    With gamma_3, gamma_5, gamma_7, gamma_8 restricted to coordinates 3 and 4
    the four determinants are -1, y(x^2 - z^2), -(z^2 - 1) and x^2 y.
    """
    return Fraction((x + z) * (x - z), (z * z - 1) * x * x)


def region_count(gammas) -> int:
    """Full-dimensional closed sign cells of the central arrangement {gamma^perp}."""
    n = len(gammas[0])
    count = 0
    for signs in itertools.product((1, -1), repeat=len(gammas)):
        K = Cone(n, [], [tuple(e * v for v in g) for e, g in zip(signs, gammas)])
        if K.dim == n:
            count += 1
    return count


def cartan_dependence(x: int, y: int, z: int, regions: bool = True) -> dict:
    for name, v in (("x", x), ("y", y), ("z", z)):
        if v < 2:
            raise ValidationError(f"{name} = {v}; the family needs x, y, z >= 2")
    c = rank4_dependence(x, y, z)
    g = inversions(c, WORD)
    G = lambda *idx: [g[k - 1] for k in idx]  # noqa: E731  1-based like the gamma labels
    d1278 = det(G(1, 2, 7, 8))
    num = det(G(1, 2, 3, 5)) * d1278
    den = det(G(1, 2, 3, 8)) * det(G(1, 2, 5, 7))
    cross = Fraction(num, den)
    want_det, want_cross = closed_forms(x, y, z)
    out = {
        "x": x, "y": y, "z": z,
        "word": "s1 s2 s4 s1 s3 s4 s2 s3",
        "gammas": [list(v) for v in g],
        "det_1278": d1278,
        "cross_ratio": str(cross),
        "cross_ratio_sign": (cross > 0) - (cross < 0),
        "det_matches": d1278 == want_det,
        "cross_ratio_matches": cross == want_cross,
        "cross_ratio_matches_minor_form": cross == cross_ratio_from_minors(x, y, z),
    }
    if regions:
        out["regions"] = region_count(g)
    return out
