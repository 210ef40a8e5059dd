import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shard_forge import load
from shard_forge.cartan import validate
from shard_forge.demos import RANK6_WORD
from shard_forge.errors import ValidationError
from shard_forge.functors import SignedWord, apply_word, sigma_minus, sigma_plus
from shard_forge.species import (SpeciesModule, adjacent_pairs, boundary_action, check_preprojective, from_json,
                                 in_block, in_out_maps, out_block, phi_from_out_block, psi_from_in_block,
                                 random_module, simple, to_json, vertex_action)

# a few towers beyond the bundled data: G2-like, equal non-unit d, and a degree-4 extension
EXTRA = [
    validate([[2, -3], [-1, 2]], d=[1, 3], p=2),
    validate([[2, -2], [-2, 2]], d=[2, 2], p=3),
    validate([[2, -4], [-1, 2]], d=[1, 4], p=2),
]


def cartans():
    return [load(n) for n in ("a2", "b2", "a3", "d4", "rank6")] + EXTRA


def test_simple_dims(b2):
    assert simple(b2, 1).dims == (0, 1)
    assert simple(b2, 1).kdim(1) == 2


def test_f_brick_boundary(b2):
    f = sigma_minus(simple(b2, 0), 1)
    assert f.dims == (1, 1)
    m_in, m_out = in_out_maps(f, 1)
    F = f.F
    assert F.rank(m_in) == f.kdim(1)     # surjective
    assert F.is_zero(m_out)


def test_rank6_relation(rank6):
    B = apply_word(rank6, SignedWord.parse(RANK6_WORD, 6))
    assert check_preprojective(B)
    for i in range(6):
        m_in, m_out = in_out_maps(B, i)
        assert B.F.is_zero(B.F.matmul(m_in, m_out))


def test_perturbation_breaks_relation(rank6):
    B = apply_word(rank6, SignedWord.parse(RANK6_WORD, 6))
    broken = 0
    for key in B.maps:
        maps = dict(B.maps)
        bumped = B.F.asarray(np.array(maps[key][0]))
        if bumped.size == 0:
            continue
        bumped[0, 0] = bumped[0, 0] + 1
        maps[key] = (bumped,) + maps[key][1:]
        broken += not check_preprojective(SpeciesModule(rank6, B.dims, maps))
    assert broken > 0


def test_shape_validation(b2):
    M = simple(b2, 0)
    maps = dict(M.maps)
    maps[(1, 0)] = (np.zeros((1, 1), dtype=np.int64),)
    with pytest.raises(ValidationError):
        SpeciesModule(b2, (1, 0), maps)


def test_json_errors(b2):
    with pytest.raises(ValidationError):
        from_json(b2, {"dims": [1, 1], "maps": {"3<-1": []}})
    with pytest.raises(ValidationError):
        from_json(b2, {"dims": [1]})


@pytest.mark.parametrize("c", cartans(), ids=lambda c: c.name or str(c.d))
def test_adjunction_inverse_and_linearity(c):
    rng = np.random.default_rng(7)
    for _ in range(5):
        M = random_module(c, rng, max_dim=2)
        F = M.F
        for (j, i) in adjacent_pairs(c):
            for phi in M.maps[(j, i)]:
                G = out_block(c, i, j, M.dims[i], M.dims[j], phi)
                assert np.array_equal(phi_from_out_block(c, i, j, M.dims[j], G), phi)
            for psi in M.maps[(i, j)]:
                B = in_block(c, i, j, M.dims[i], M.dims[j], psi)
                assert np.array_equal(psi_from_in_block(c, i, j, M.dims[j], B), psi)
        for i in range(c.n):
            m_in, m_out = in_out_maps(M, i)
            u = vertex_action(M, i)
            ub = boundary_action(M, i, 1)
            assert np.array_equal(F.matmul(m_in, ub), F.matmul(u, m_in))
            assert np.array_equal(F.matmul(m_out, u), F.matmul(ub, m_out))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(cartans()))), st.integers(0, 2 ** 32 - 1))
def test_json_round_trip(k, seed):
    c = cartans()[k]
    M = random_module(c, np.random.default_rng(seed), max_dim=2)
    text = json.dumps(to_json(M))
    N = from_json(c, json.loads(text))
    assert N.dims == M.dims
    for key in M.maps:
        for a, b in zip(M.maps[key], N.maps[key]):
            assert np.array_equal(a, b)
