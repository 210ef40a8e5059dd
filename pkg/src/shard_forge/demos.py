"""Named, deterministic demos; each returns (json_payload, human_summary)."""
from __future__ import annotations

import numpy as np

from .cartan import CartanData, format_root, load
from .dependence import cartan_dependence
from .functors import SignedWord, apply_signed, apply_word, bricks_of_dimension, no_quot, no_sub
from .hom import brick_test, euler_check, hom_ext_dims, hom_space
from .roots import positive_expression
from .shards import recursive_sign_cells, same_shards, shards_direct, shards_recursive
from .species import SpeciesModule, random_module
from .stability import bijection_check, stab_result

RANK6_WORD = "S6 ; 5+ 4+ 2+ 1- 4- 5- 3+ 4+ 2+ 1-"


def random_mixed_module(c: CartanData, rng: np.random.Generator, max_dim: int = 2,
                        reflections: int = 2, max_total: int = 6) -> SpeciesModule:
    """A one-directional random module pushed through a few random reflection functors."""
    M = random_module(c, rng, max_dim=max_dim)
    for _ in range(reflections):
        i = int(rng.integers(0, c.n))
        e = 1 if rng.integers(0, 2) else -1
        ok = no_quot(M, i) if e > 0 else no_sub(M, i)
        if ok and sum(c.reflect_root(i, M.dims)) <= max_total:
            M = apply_signed(M, i, e)
    return M


def euler_trials(c: CartanData, trials: int, seed: int, max_dim: int = 2) -> dict:
    rng = np.random.default_rng(seed)
    passed = 0
    failures = []
    for t in range(trials):
        M = random_mixed_module(c, rng, max_dim)
        N = random_mixed_module(c, rng, max_dim)
        h0, h1, h2 = hom_ext_dims(M, N)
        direct = len(hom_space(N, M))
        ok = euler_check(M, N) and h2 == direct
        passed += ok
        if not ok:
            failures.append({"trial": t, "M": list(M.dims), "N": list(N.dims), "h": [h0, h1, h2],
                             "hom_NM_direct": direct})
    return {"trials": trials, "seed": seed, "passed": passed, "failed": trials - passed, "failures": failures}


def b2_six_shards() -> tuple[dict, str]:
    c = load("b2")
    rows = []
    total = 0
    for beta in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        expr = positive_expression(c, beta)
        direct = shards_direct(c, beta)
        rec = shards_recursive(c, expr)
        bricks = bricks_of_dimension(c, beta)
        total += len(direct)
        rows.append({"root": format_root(beta), "shards": len(direct), "recursive": len(rec),
                     "match": same_shards(direct, rec), "bricks": [str(w) for w, _ in bricks],
                     "bijection": bijection_check(c, beta)})
    summary = "B2: shards " + ", ".join(f"{r['root']}->{r['shards']}" for r in rows) + f"; total {total}"
    return {"demo": "b2-six-shards", "roots": rows, "total_shards": total}, summary


def d4_fourteen() -> tuple[dict, str]:
    c = load("d4")
    rows = []
    for beta in [(1, 1, 1, 1), (2, 1, 1, 1)]:
        expr = positive_expression(c, beta)
        cells = recursive_sign_cells(c, expr)
        degenerate = ["".join("+" if e > 0 else "-" for e in s) for s, K in cells if K.dim < c.n - 1]
        direct = shards_direct(c, beta)
        rows.append({"root": format_root(beta), "shards": len(direct),
                     "recursive_match": same_shards(direct, shards_recursive(c, expr)),
                     "sign_vectors": len(cells), "degenerate": degenerate})
    summary = "D4: " + ", ".join(f"{r['root']} has {r['shards']} shards" for r in rows)
    return {"demo": "d4-fourteen", "roots": rows}, summary


def rank6_counterexample() -> tuple[dict, str]:
    c = load("rank6")
    word = SignedWord.parse(RANK6_WORD, c.n)
    B = apply_word(c, word)
    verdict = brick_test(B)
    h = hom_ext_dims(B, B)
    res = stab_result(c, word, B)
    payload = {"demo": "rank6-counterexample", "word": RANK6_WORD, "dim": format_root(B.dims),
               "brick": verdict.to_json(), "hom_ext": list(h), "stab": res.to_json()}
    summary = (f"rank6: dim {format_root(B.dims)}, brick={verdict.is_brick}, Ext1={h[1]}, "
               f"Stab dim {res.cone.dim}, shard module={res.is_shard_module}")
    return payload, summary


def cartan_dependence_demo(x: int = 3, y: int = 2, z: int = 2) -> tuple[dict, str]:
    out = cartan_dependence(x, y, z)
    summary = (f"rank4({x},{y},{z}): det {out['det_1278']}, cross ratio {out['cross_ratio']}, "
               f"{out.get('regions')} regions")
    return {"demo": "cartan-dependence", **out}, summary


CATALOG = {
    "b2-six-shards": b2_six_shards,
    "d4-fourteen": d4_fourteen,
    "rank6-counterexample": rank6_counterexample,
    "cartan-dependence": cartan_dependence_demo,
}
