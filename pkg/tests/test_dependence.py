import itertools

import pytest
import sympy

from shard_forge.cartan import rank4_dependence
from shard_forge.dependence import WORD, cartan_dependence, cross_ratio_from_minors
from shard_forge.errors import ValidationError
from shard_forge.roots import inversions


def test_determinant_zero_when_x_equals_z():
    assert cartan_dependence(2, 2, 2, regions=False)["det_1278"] == 0


def test_determinant_closed_form():
    for x, y, z in itertools.product((2, 3, 4), repeat=3):
        out = cartan_dependence(x, y, z, regions=False)
        assert out["det_1278"] == y * (x + z) * (x - z) and out["det_matches"]


def test_cross_ratio_minor_form_symbolic():
    """Symbolic check of the cross ratio using the inversion vectors themselves."""
    x, y, z = sympy.symbols("x y z")
    # the inversions at generic parameters, lifted to polynomials by interpolation in each entry
    g = [[sympy.interpolate([(t, inversions(rank4_dependence(t, 5, 7), WORD)[k][r]) for t in range(2, 8)], x)
          for r in range(4)] for k in range(8)]
    # independence of y, z is checked numerically below; here just x
    det = lambda *idx: sympy.Matrix([g[k - 1] for k in idx]).det()  # noqa: E731
    ratio = sympy.factor(det(1, 2, 3, 5) * det(1, 2, 7, 8) / (det(1, 2, 3, 8) * det(1, 2, 5, 7)))
    assert sympy.simplify(ratio - (x * x - 49) / (48 * x * x)) == 0


def test_cross_ratio_minor_form_numeric():
    for x, y, z in itertools.product((2, 3, 4, 5), repeat=3):
        out = cartan_dependence(x, y, z, regions=False)
        assert out["cross_ratio_matches_minor_form"]
        assert out["cross_ratio"] == str(cross_ratio_from_minors(x, y, z))


def test_sign_flips_across_x_equals_z():
    assert cartan_dependence(2, 2, 3, regions=False)["cross_ratio_sign"] == -1
    assert cartan_dependence(3, 2, 2, regions=False)["cross_ratio_sign"] == 1
    assert cartan_dependence(3, 2, 2, regions=False)["cross_ratio"] == "5/27"


def test_region_counts_differ():
    assert cartan_dependence(2, 2, 2)["regions"] == 90
    assert cartan_dependence(3, 2, 2)["regions"] == 92


def test_parameter_range():
    with pytest.raises(ValidationError):
        cartan_dependence(1, 2, 2)
