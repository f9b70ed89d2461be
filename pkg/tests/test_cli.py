import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from twistedcenter import cli, gamma, verify
from twistedcenter.serialization import parse_pair_key, parse_partition_key


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_partitions(capsys):
    assert run_json(capsys, "partitions", "3") == [[3], [2, 1]]
    assert run_json(capsys, "partitions", "5", "--kind", "odd") == [[5], [3, 1, 1], [1, 1, 1, 1, 1]]


def test_graph(capsys):
    data = run_json(capsys, "graph", "3,1", "--direction", "down")
    assert data == {"source": [3, 1], "targets": [{"partition": [3], "prob": "1/2"},
                                                   {"partition": [2, 1], "prob": "1/2"}]}
    data = run_json(capsys, "graph", "2")
    assert sum(F(t["prob"]) for t in data["targets"]) == 1


def test_gamma_expand_and_eval(capsys):
    data = run_json(capsys, "gamma", "expand", "--basis", "Qstar", "--index", "3,1")
    assert {parse_partition_key(k): F(v) for k, v in data.items()} == dict(gamma.factorial_schur_q((3, 1)).items())
    value = run_json(capsys, "gamma", "eval", "--basis", "Qstar", "--index", "2", "--at", "4,2,1")
    assert F(value) == gamma.factorial_schur_q((2,)).evaluate((4, 2, 1))
    assert run_json(capsys, "gamma", "eval", "--basis", "Qstar", "--index", "2", "--at", "1") == "0"


def test_sergeev_commands(capsys):
    rows = run_json(capsys, "sergeev", "class-sum", "--mu", "1", "-n", "3")
    assert rows == [{"clifford": [], "perm": [1, 2, 3], "coeff": "6"}]
    rows = run_json(capsys, "sergeev", "idempotent", "--lambda", "2")
    assert rows == [{"clifford": [], "perm": [1, 2], "coeff": "1"}]
    assert run_json(capsys, "sergeev", "character", "--lambda", "3,1", "--mu", "3") == str(
        gamma.character((3, 1), (3, 1)))


def test_character_size_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "sergeev", "character", "--lambda", "3,1", "--mu", "3,1,1")
    assert code == 2 and "exceeds" in err


def test_center_commands(capsys):
    assert run_json(capsys, "center", "phi", "--alpha", "1") == {"[1]": "2"}
    assert run_json(capsys, "center", "phi", "--d", "0") == {"[1]": "2"}
    rows = run_json(capsys, "center", "fock", "-n", "4", "--d", "0")
    assert rows == [{"clifford": [], "perm": [1, 2, 3, 4], "coeff": "8"}]
    data = run_json(capsys, "center", "idempotent-closure", "--lambda", "2,1")
    want = gamma.factorial_schur_q((2, 1)) * 2
    assert {parse_partition_key(k): F(v) for k, v in data.items()} == dict(want.items())


def test_w_apply(capsys):
    assert run_json(capsys, "w", "apply", "--gen", "Aminus", "--pfrak", "3,1", "--cutoff", "8") == {"[3,1,1]": "2"}
    assert run_json(capsys, "w", "apply", "--gen", "Aplus", "--pfrak", "1,1") == {"[1,1]": "1", "[1]": "2"}
    data = run_json(capsys, "w", "apply", "--gen", "omega_1_2_plus_1_1", "--pfrak", "1")
    assert data["factor"] == "sqrt2"


def test_w_apply_cutoff_error(capsys):
    code, _, err = run(capsys, "w", "apply", "--gen", "Aminus", "--pfrak", "3,3", "--cutoff", "6")
    assert code == 2 and "cutoff" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "graph", "2,2")[0] == 2
    assert run(capsys, "graph", "x")[0] == 2
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coherence", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["reports"][0]["suite"] == "coherence"
    code, out, _ = run(capsys, "verify", "--suite", "class-sums", "-n", "3")
    assert code == 1 and "FAIL" in out


def test_verify_deterministic_under_seed(capsys):
    a = run_json(capsys, "verify", "--suite", "w-action", "--seed", "3", "--json", "--cutoff", "6")
    b = run_json(capsys, "verify", "--suite", "w-action", "--seed", "3", "--json", "--cutoff", "6")
    for r in a["reports"] + b["reports"]:
        r.pop("wall_time")
    assert a == b


def test_export_examples():
    assert verify.export_table("plancherel", 3) == {"[3]": "2/3", "[2,1]": "1/3"}
    assert verify.export_table("x-matrix", 2) == {"[1,1]|[2]": "1"}
    assert verify.export_table("characters", 0) == {"[]|[]": "1"}
    with pytest.raises(ValueError):
        verify.export_table("bogus", 2)


def test_export_round_trip(tmp_path, capsys):
    for kind in verify.EXPORT_KINDS:
        path = tmp_path / f"{kind}.json"
        assert cli.main(["export", kind, "5", "-o", str(path)]) == 0
        data = json.loads(path.read_text())
        assert data == verify.export_table(kind, 5)
        assert list(data) == list(verify.export_table(kind, 5))
    chars = json.loads((tmp_path / "characters.json").read_text())
    for key, value in chars.items():
        lam, mu = parse_pair_key(key)
        assert F(value) == gamma.character(lam, mu)


def test_cache_dir_round_trip(tmp_path, capsys):
    from twistedcenter import cache

    try:
        cache.configure(tmp_path)
        gamma._pfrak.cache_clear()
        first = gamma.pfrak((3, 1))
        assert list((tmp_path / f"v{cache.CACHE_VERSION}" / "pfrak").glob("*.json"))
        gamma._pfrak.cache_clear()
        assert gamma.pfrak((3, 1)) == first
    finally:
        cache.configure(None)
        gamma._pfrak.cache_clear()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twistedcenter.cli", "partitions", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [[4], [3, 1]]
