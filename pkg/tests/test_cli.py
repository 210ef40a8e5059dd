import json
import subprocess
import sys

import pytest

from shard_forge.cli import main, resolve_threads


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


def test_shards_b2(capsys):
    code, out, err = run(capsys, "shards", "b2", "--root", "1,1")
    assert code == 0 and out["verdict"] == "match" and len(out["shards"]) == 2
    assert "2 shard(s)" in err


def test_shards_d4_threads(capsys, monkeypatch):
    monkeypatch.setenv("SHARD_FORGE_THREADS", "3")
    code, out, _ = run(capsys, "shards", "d4", "--root", "2,1,1,1", "--method", "direct")
    assert code == 0 and len(out["shards"]) == 14


def test_threads_env(monkeypatch):
    monkeypatch.setenv("SHARD_FORGE_THREADS", "5")
    assert resolve_threads(1) == 5
    monkeypatch.delenv("SHARD_FORGE_THREADS")
    assert resolve_threads(2) == 2


def test_bricks(capsys):
    code, out, _ = run(capsys, "bricks", "b2", "--root", "2,1")
    assert code == 0 and len(out["bricks"]) == 2
    assert all(b["brick"]["is_brick"] for b in out["bricks"])


def test_stab_rank6(capsys):
    code, out, _ = run(capsys, "stab", "rank6", "--word", "S6 ; 5+ 4+ 2+ 1- 4- 5- 3+ 4+ 2+ 1-")
    assert code == 0
    assert out["cone"]["dim"] == 2 and not out["is_shard_module"]
    assert sorted(out["cone"]["rays"]) == [[0, 0, -1, 0, 1, 0], [0, 0, 1, -1, 1, 0]]
    assert out["brick"]["is_brick"] and out["ext1"] == 0


def test_stab_with_oracle(capsys):
    code, out, _ = run(capsys, "stab", "b2", "--word", "S1 ; 2+", "--oracle")
    assert code == 0 and out["oracle_agrees"]


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", "b2", "--trials", "10", "--seed", "3")
    assert code == 0 and out["failed"] == 0


def test_cartan_dependence(capsys):
    code, out, _ = run(capsys, "cartan-dependence", "--x", "3", "--y", "2", "--z", "2")
    assert code == 0 and out["det_1278"] == 10 and out["cross_ratio"] == "5/27"


@pytest.mark.parametrize("argv,code", [
    (["shards", "b2", "--root", "3,1"], 2),
    (["shards", "b2", "--root", "1,1,1"], 2),
    (["shards", "/nonexistent.json", "--root", "1,1"], 2),
    (["stab", "b2", "--word", "S1 ; 1+"], 2),
    (["stab", "d4", "--word", "S4 ; 1+ 3- 2- 1+"], 3),
    (["stab", "rank6", "--word", "S6 ; 5+", "--oracle"], 4),
    (["cartan-dependence", "--x", "1"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert "error:" in capsys.readouterr().err


def test_demo_catalog(capsys):
    code, out, _ = run(capsys, "demo", "b2-six-shards")
    assert code == 0 and out["total_shards"] == 6


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "shard_forge", "shards", "a2", "--root", "1,1"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and json.loads(r.stdout)["verdict"] == "match"
