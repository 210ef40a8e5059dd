"""Command line entry point: JSON on stdout, summaries on stderr.

Exit codes: 0 ok, 2 validation error, 3 precondition violated, 4 oracle out of range.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import cartan as cartan_mod
from .cartan import format_root, parse_root
from .demos import CATALOG, euler_trials
from .errors import ShardForgeError
from .functors import SignedWord, apply_word, bricks_of_dimension
from .hom import brick_test, hom_ext_dims
from .roots import positive_expression
from .shards import same_shards, shards_direct, shards_recursive
from .species import to_json as module_json
from .stability import stab_oracle, stab_result

log = logging.getLogger("shard_forge")


def resolve_threads(flag: int | None) -> int:
    env = os.environ.get("SHARD_FORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer SHARD_FORGE_THREADS=%r", env)
    return max(1, flag or 1)


def _root(c, text: str):
    beta = parse_root(text, c.n)
    positive_expression(c, beta)  # raises on non-positive / non-real input
    return beta


def cmd_shards(args) -> tuple[object, str]:
    c = cartan_mod.load(args.cartan)
    beta = _root(c, args.root)
    out: dict = {"root": format_root(beta)}
    direct = rec = None
    if args.method in ("direct", "both"):
        direct = shards_direct(c, beta, threads=args.threads)
        out["shards"] = [s.to_json() for s in direct]
    if args.method in ("recursive", "both"):
        rec = shards_recursive(c, positive_expression(c, beta))
        out["recursive" if direct is not None else "shards"] = [s.to_json() for s in rec]
    if direct is not None and rec is not None:
        out["verdict"] = "match" if same_shards(direct, rec) else "mismatch"
    n = len(direct if direct is not None else rec)
    return out, f"{n} shard(s) of {format_root(beta)}^perp" + (f", {out['verdict']}" if "verdict" in out else "")


def cmd_bricks(args) -> tuple[object, str]:
    c = cartan_mod.load(args.cartan)
    beta = _root(c, args.root)
    records = []
    for word, M in bricks_of_dimension(c, beta):
        records.append({"word": str(word), "module": module_json(M), "brick": brick_test(M).to_json()})
    return {"root": format_root(beta), "bricks": records}, f"{len(records)} brick class(es) of dim {format_root(beta)}"


def cmd_stab(args) -> tuple[object, str]:
    c = cartan_mod.load(args.cartan)
    word = SignedWord.parse(args.word, c.n)
    word.expression(c)
    M = apply_word(c, word)
    res = stab_result(c, word, M)
    out = res.to_json()
    out["brick"] = brick_test(M).to_json()
    out["ext1"] = hom_ext_dims(M, M)[1]
    if args.oracle:
        K = stab_oracle(M)
        out["oracle_cone"] = K.to_json()
        out["oracle_agrees"] = K == res.cone
    return out, f"Stab of {word}: dim {res.cone.dim}, rays {list(res.cone.rays)}, shard module={res.is_shard_module}"


def cmd_euler(args) -> tuple[object, str]:
    c = cartan_mod.load(args.cartan)
    out = euler_trials(c, args.trials, args.seed)
    return out, f"Euler identity: {out['passed']}/{out['trials']} pass"


def cmd_cartan_dependence(args) -> tuple[object, str]:
    return CATALOG["cartan-dependence"](args.x, args.y, args.z)


def cmd_demo(args) -> tuple[object, str]:
    return CATALOG[args.name]()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shard-forge", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker threads (env SHARD_FORGE_THREADS overrides)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("shards", help="shards of a root hyperplane")
    s.add_argument("cartan", help="Cartan JSON file or bundled name (a2, a3, b2, d4, rank4, rank6)")
    s.add_argument("--root", required=True, help='root as "2,1"')
    s.add_argument("--method", choices=["direct", "recursive", "both"], default="both")
    s.set_defaults(func=cmd_shards)

    s = sub.add_parser("bricks", help="real bricks of a given dimension")
    s.add_argument("cartan")
    s.add_argument("--root", required=True)
    s.set_defaults(func=cmd_bricks)

    s = sub.add_parser("stab", help="stability domain of a signed word")
    s.add_argument("cartan")
    s.add_argument("--word", required=True, help='e.g. "S6 ; 5+ 4+ 2+ 1-"')
    s.add_argument("--oracle", action="store_true", help="also run the brute-force submodule oracle")
    s.set_defaults(func=cmd_stab)

    s = sub.add_parser("euler", help="Euler form identity on random module pairs")
    s.add_argument("cartan")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_euler)

    s = sub.add_parser("cartan-dependence", help="rank-4 inversion arrangement for parameters x, y, z")
    s.add_argument("--x", type=int, default=3)
    s.add_argument("--y", type=int, default=2)
    s.add_argument("--z", type=int, default=2)
    s.set_defaults(func=cmd_cartan_dependence)

    s = sub.add_parser("demo", help="bundled demos")
    s.add_argument("name", choices=sorted(CATALOG))
    s.set_defaults(func=cmd_demo)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    args.threads = resolve_threads(args.threads)
    try:
        payload, summary = args.func(args)
    except ShardForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    json.dump(payload, sys.stdout, indent=2, sort_keys=True, default=str)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)
    return 0


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
