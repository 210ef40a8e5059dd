import numpy as np
import pytest

from shard_forge import load
from shard_forge.cones import Cone
from shard_forge.demos import RANK6_WORD
from shard_forge.errors import OracleRangeError
from shard_forge.functors import SignedWord, apply_word, bricks_of_dimension, sigma_minus, sigma_plus
from shard_forge.roots import positive_roots
from shard_forge.species import random_module, simple
from shard_forge.stability import (bijection_check, classify_shard_modules, stab_oracle, stab_recursive,
                                   stab_result, submodule_dim_vectors)


def test_b2_submodules(b2):
    f = sigma_minus(simple(b2, 0), 1)
    g = sigma_plus(simple(b2, 0), 1)
    assert submodule_dim_vectors(f) == {(0, 0), (0, 1), (1, 1)}
    assert submodule_dim_vectors(g) == {(0, 0), (1, 0), (1, 1)}
    assert stab_oracle(f).rays == ((-1, 1),)
    assert stab_oracle(g).rays == ((1, -1),)


def test_b2_word(b2):
    K = stab_recursive(b2, SignedWord.parse("S1 ; 2+", 2))
    assert K == Cone.from_generators(2, [(1, -1)])


def test_rank6(rank6):
    w = SignedWord.parse(RANK6_WORD, 6)
    K = stab_recursive(rank6, w)
    assert K.dim == 2
    assert set(K.rays) == {(0, 0, -1, 0, 1, 0), (0, 0, 1, -1, 1, 0)}


def test_oracle_range(rank6, a3):
    with pytest.raises(OracleRangeError):
        stab_oracle(simple(rank6, 0))
    big = random_module(a3, np.random.default_rng(0), dims=(6, 6, 6))
    with pytest.raises(OracleRangeError):
        stab_oracle(big)


@pytest.mark.parametrize("name", ["a2", "b2", "a3"])
def test_recursion_matches_oracle(name):
    c = load(name)
    for beta in positive_roots(c, 3):
        for w, B in bricks_of_dimension(c, beta):
            assert stab_recursive(c, w) == stab_oracle(B)


@pytest.mark.parametrize("beta", [(1, 0), (0, 1), (1, 1), (2, 1)])
def test_b2_bijection(b2, beta):
    assert bijection_check(b2, beta)


def test_d4_fourteen_shard_modules(d4):
    res = classify_shard_modules(d4, (2, 1, 1, 1))
    assert sum(r.is_shard_module for r in res) == 14
    assert bijection_check(d4, (2, 1, 1, 1))


def test_a3_bijection(a3):
    for beta in positive_roots(a3, 5):
        assert bijection_check(a3, beta)


def test_rank6_non_shard_brick(rank6):
    w = SignedWord.parse(RANK6_WORD, 6)
    B = apply_word(rank6, w)
    assert not stab_result(rank6, w, B).is_shard_module
