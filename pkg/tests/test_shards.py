import pytest
from hypothesis import given, settings, strategies as st

from shard_forge import load
from shard_forge.cartan import rank4_dependence
from shard_forge.cones import Cone
from shard_forge.roots import positive_expression, positive_roots
from shard_forge.shards import recursive_sign_cells, same_shards, shards_direct, shards_recursive


@pytest.mark.parametrize("beta,count", [((1, 0), 1), ((0, 1), 1), ((1, 1), 2), ((2, 1), 2)])
def test_b2(b2, beta, count):
    assert len(shards_direct(b2, beta)) == count
    assert len(shards_recursive(b2, positive_expression(b2, beta))) == count


def test_b2_simple_is_whole_line(b2):
    (s,) = shards_direct(b2, (1, 0))
    assert s.cone == Cone(2, [(1, 0)])


def test_b2_two_opposite_rays(b2):
    rays = sorted(s.cone.rays for s in shards_direct(b2, (1, 1)))
    assert rays == [((-1, 1),), ((1, -1),)]


def test_d4(d4):
    assert len(shards_direct(d4, (1, 1, 1, 1))) == 8
    beta = (2, 1, 1, 1)
    cells = recursive_sign_cells(d4, positive_expression(d4, beta))
    assert len(cells) == 16
    assert sum(K.dim < 3 for _, K in cells) == 2
    assert len(shards_direct(d4, beta)) == 14
    assert len(shards_direct(d4, beta, threads=4)) == 14


def test_shards_cover_beta_perp(d4):
    """Every shard lies in beta^perp and the relative interiors are disjoint."""
    beta = (2, 1, 1, 1)
    shards = shards_direct(d4, beta)
    for s in shards:
        assert all(sum(a * b for a, b in zip(r, beta)) == 0 for r in s.cone.rays)
    for a in shards:
        for b in shards:
            if a is not b:
                assert a.cone.intersect(b.cone).dim < 3


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["b2", "a3", "d4", "r222", "r223"]), st.data())
def test_direct_equals_recursive(name, data):
    c = {"r222": rank4_dependence(2, 2, 2), "r223": rank4_dependence(2, 2, 3)}.get(name) or load(name)
    beta = data.draw(st.sampled_from(list(positive_roots(c, 3))))
    e = positive_expression(c, beta)
    assert same_shards(shards_direct(c, beta), shards_recursive(c, e))
