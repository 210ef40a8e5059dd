import itertools
from concurrent.futures import ThreadPoolExecutor

import sympy
from hypothesis import given, settings, strategies as st

from shard_forge import load
from shard_forge.cones import (Cone, double_description, full_space, hyperplane, sigma,
                               sigma_reflect_first, sigma_via_generators, zero_cone)
from shard_forge.rank_two import primitive

vec = lambda n: st.lists(st.integers(-3, 3), min_size=n, max_size=n).filter(any)  # noqa: E731


def brute_rays(n, eqs, ineqs):
    """Extreme rays of a pointed cone: 1-dim kernels of tight subsystems, checked for feasibility."""
    out = set()
    for k in range(len(ineqs) + 1):
        for tight in itertools.combinations(ineqs, k):
            M = sympy.Matrix(list(eqs) + list(tight)) if (eqs or tight) else sympy.zeros(0, n)
            ker = M.nullspace() if M.rows else [sympy.eye(n)[:, j] for j in range(n)]
            if len(ker) != 1:
                continue
            v = ker[0]
            den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
            v = [int(x * den) for x in v]
            for s in (1, -1):
                w = [s * x for x in v]
                if all(sum(a * b for a, b in zip(r, w)) >= 0 for r in ineqs):
                    out.add(primitive(w))
    return out


def test_simple_cases():
    assert full_space(3).dim == 3 and zero_cone(3).dim == 0
    H = hyperplane((1, 1, 1, 1))
    assert H.dim == 3 and len(H.lineality) == 3 and H.rays == ()


def test_b2_ray_in_hyperplane(b2):
    K = Cone(2, [(1, 1)], [(0, 1)])
    assert K.dim == 1 and K.rays == ((-1, 1),)


def test_b2_sigma_examples(b2):
    assert sigma(b2, 0, 1, hyperplane((0, 1))).rays == ((-1, 2),)
    assert sigma(b2, 1, 1, hyperplane((1, 0))).rays == ((1, -1),)


def test_d4_wrong_sign_is_zero(d4):
    beta = (1, 1, 1, 1)
    octant = Cone(4, [beta], [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert octant.dim == 3
    dims = sorted(sigma(d4, 0, e, octant).dim for e in (1, -1))
    assert dims == [0, 3]


def test_json_round_trip():
    K = Cone(3, [], [(1, 0, 0), (0, 1, 0), (1, 1, -1)])
    assert Cone.from_json(K.to_json()) == K
    G = Cone.from_generators(3, K.rays, K.lineality)
    assert G == K and set(G.inequalities) == set(K.inequalities)


def test_redundant_generators_dropped():
    K = Cone.from_generators(2, [(1, 0), (0, 1), (1, 1), (2, 1)])
    assert K.rays == ((0, 1), (1, 0))


def test_concurrent_access():
    K = Cone(4, [], [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, -1), (0, 0, 0, 1)])
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(lambda _: K.key(), range(32)))
    assert all(r == results[0] for r in results)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(vec(n), min_size=0, max_size=1), st.lists(vec(n), min_size=1, max_size=5))))
def test_dd_matches_brute_force(case):
    n, eqs, ineqs = case
    lin, rays = double_description(n, eqs, ineqs)
    if lin:
        return  # the brute-force oracle only handles pointed cones
    assert {primitive(r) for r in rays} == brute_rays(n, eqs, ineqs)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(vec(n), min_size=0, max_size=1), st.lists(vec(n), min_size=0, max_size=5))))
def test_v_h_round_trip(case):
    n, eqs, ineqs = case
    K = Cone(n, eqs, ineqs)
    G = Cone.from_generators(n, K.rays, K.lineality)
    assert G == K
    for r in K.rays:
        assert K.contains(r)
    for v in K.lineality:
        assert K.contains(v) and K.contains([-x for x in v])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["b2", "a3", "d4", "rank6"]), st.data())
def test_sigma_formulas_agree(name, data):
    c = load(name)
    n = c.n
    eqs = data.draw(st.lists(vec(n), max_size=1))
    ineqs = data.draw(st.lists(vec(n), max_size=3))
    i = data.draw(st.integers(0, n - 1))
    e = data.draw(st.sampled_from([1, -1]))
    K = Cone(n, eqs, ineqs)
    a = sigma(c, i, e, K)
    assert a == sigma_via_generators(c, i, e, K)
    assert a == sigma_reflect_first(c, i, e, K)
    # reflecting twice returns to the half of K that was kept
    assert a.reflect(c, i) == K.with_halfspace([e * x for x in c.simple(i)])
