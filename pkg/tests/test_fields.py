import pytest
import sympy
from hypothesis import given, settings, strategies as st

from shard_forge.cartan import validate
from shard_forge.fields import FieldTower, smallest_irreducible, species_basis

TOWERS = [(2, 1), (2, 2), (3, 2), (2, 6), (5, 2), (2, 3)]


def poly_mul_oracle(T, a, b):
    x = sympy.symbols("x")
    dom = sympy.GF(T.p)
    P = lambda e: sympy.Poly(list(reversed(T.coeffs(e))), x, domain=dom)  # noqa: E731
    mod = sympy.Poly(list(reversed(T.modulus)), x, domain=dom)
    r = (P(a) * P(b)).rem(mod)
    cs = [int(v) % T.p for v in reversed(r.all_coeffs())]
    return T.elt(cs + [0] * (T.L - len(cs)))


def test_modulus_p3():
    assert smallest_irreducible(3, 2) == [1, 0, 1]  # x^2 + 1


def test_trace_of_one():
    T = FieldTower(3, 2)
    assert T.trace(1, 1) == 2


@pytest.mark.parametrize("p,L", TOWERS)
def test_mul_matches_polynomial_oracle(p, L):
    T = FieldTower(p, L)
    step = max(1, T.q // 40)
    for a in range(0, T.q, step):
        for b in range(1, T.q, step):
            assert T.mul(a, b) == poly_mul_oracle(T, a, b)


@pytest.mark.parametrize("p,L", TOWERS)
def test_subfields(p, L):
    T = FieldTower(p, L)
    for d in range(1, L + 1):
        if L % d == 0:
            assert len(T.subfield(d)) == p ** d
            u = T.generator(d)
            assert T.in_subfield(u, d)
            assert all(not T.in_subfield(u, e) for e in range(1, d) if d % e == 0)


@pytest.mark.parametrize("p,L", TOWERS)
def test_dual_bases(p, L):
    T = FieldTower(p, L)
    for e in range(1, L + 1):
        for d in range(1, e + 1):
            if L % e or e % d:
                continue
            B = T.power_basis(e, over=d)
            D = T.dual_basis(d, e, B)
            for a, x in enumerate(D):
                for b, y in enumerate(B):
                    assert T.trace(T.mul(x, y), d, e) == int(a == b)
            assert T.total(T.mul(x, y) for x, y in zip(D, B)) == 1


@pytest.mark.parametrize("A,d,p", [
    ([[2, -2], [-1, 2]], [1, 2], 3),
    ([[2, -3], [-2, 2]], [2, 3], 2),
    ([[2, -2], [-2, 2]], [2, 2], 3),
    ([[2, -4], [-1, 2]], [1, 4], 2),
])
def test_species_dual_agrees_across_towers(A, d, p):
    """The trace-dual over kappa(d_ij)/kappa(d_j) coincides with the one over kappa(d_i)/kappa(g)."""
    c = validate(A, d=d, p=p)
    T = FieldTower(p, c.L)
    for i, j in [(0, 1), (1, 0)]:
        g = c.gcd_pair(i, j)
        dij = c.d_pair(i, j)
        B = species_basis(c, T, i, j)
        assert len(B) == dij // c.d[j]
        assert T.dual_basis(c.d[j], dij, B) == T.dual_basis(g, c.d[i], B)


def test_dependent_detected():
    T = FieldTower(3, 2)
    assert not T.is_independent_over([1, T.scale(2, 1)], 1)
    assert T.is_independent_over(T.power_basis(2), 1)


def test_too_large():
    with pytest.raises(ValueError):
        FieldTower(2, 21)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TOWERS), st.data())
def test_field_axioms(tower, data):
    T = FieldTower(*tower)
    a, b, c = (data.draw(st.integers(0, T.q - 1)) for _ in range(3))
    assert T.mul(a, T.add(b, c)) == T.add(T.mul(a, b), T.mul(a, c))
    assert T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c))
    assert T.add(a, T.neg(a)) == 0
    if a:
        assert T.mul(a, T.inv(a)) == 1
    # Frobenius is additive and the trace is Frobenius-invariant
    assert T.frobenius(T.add(a, b)) == T.add(T.frobenius(a), T.frobenius(b))
    assert T.trace(T.frobenius(a), 1) == T.trace(a, 1)
