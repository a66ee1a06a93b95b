import json
import subprocess
import sys

import pytest

from srgsep import cli
from srgsep.cli import RunRecord, ResultCache, cache_key, main
from srgsep.errors import CorruptCacheEntry
from srgsep.graph import DenseGraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_examples(capsys, tmp_path):
    for argv, nu, m in (
        (["--family", "paley", "--q", "13"], 13, 39),
        (["--family", "triangular", "--n", "5"], 10, 30),
        (["--family", "bvls"], 243, 2673),
    ):
        out = tmp_path / "g.dimacs"
        code, _, _ = run(capsys, "gen", *argv, "--out", str(out))
        assert code == 0
        g = DenseGraph.from_dimacs(out)
        assert (g.nu, g.edge_count) == (nu, m)
        meta = json.loads((tmp_path / "g.dimacs.meta.json").read_text())
        assert meta["vertices"] == nu and meta["checksum"] == g.checksum()
        assert "vertex_order" in meta and "hints" in meta


def test_gen_stdout_and_json_format(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "paley", "--q", "13")
    assert code == 0 and "p edge 13 39" in out
    path = tmp_path / "g.json"
    run(capsys, "gen", "--family", "vls", "--p", "2", "--e", "3", "--t", "3", "--format", "json", "--out", str(path))
    doc = json.loads(path.read_text())
    assert doc["params"] == [64, 21, 8, 6] and len(doc["edge_list"]) == 64 * 21 // 2
    assert len(doc["hints"]["clique"]) == 8


def test_bounds_example(capsys):
    code, out, _ = run(capsys, "bounds", "--nu", "36", "--k", "14", "--lambda", "4", "--mu", "6", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["bounds"]["delsarte"] == "9/2" and rec["bounds"]["hoffman"] == "8"
    code, out, _ = run(capsys, "bounds", "--family", "paley", "--q", "13")
    assert code == 0 and "√13" in out


def test_bounds_invalid_params_exit_1(capsys):
    code, _, err = run(capsys, "bounds", "--nu", "10", "--k", "3", "--lambda", "0", "--mu", "5")
    assert code == 1 and "error" in err


def test_classify_example(capsys):
    code, out, _ = run(capsys, "classify", "--family", "vls", "--p", "2", "--e", "3", "--t", "3", "--json")
    assert code == 0
    rec = json.loads(out)
    v = rec["verdict"]
    assert v["status"] == "NonSeparating"
    assert len(v["witnesses"][0]) * len(v["witnesses"][1]) == 64
    assert rec["schema"] == "srg-separator/1"


def test_classify_unresolved_exit_2(capsys):
    code, out, _ = run(capsys, "classify", "--family", "peisert", "--p", "3", "--t", "2")
    assert code == 2 and "Unresolved" in out


def test_invalid_spec_exit_1(capsys):
    code, _, err = run(capsys, "classify", "--family", "paley", "--q", "7")
    assert code == 1 and "q" in err


def test_table_two(capsys):
    code, out, _ = run(capsys, "table", "--which", "2")
    assert code == 0 and "53 rows, 0 mismatches" in out


def test_solve_file_and_witness(capsys, tmp_path):
    g = tmp_path / "hs.dimacs"
    run(capsys, "gen", "--family", "hoffman-singleton", "--out", str(g))
    w = tmp_path / "w.txt"
    code, out, _ = run(capsys, "solve", "--file", str(g), "--mode", "coclique", "--witness-out", str(w), "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["solver"][0]["value"] == 15 and rec["solver"][0]["status"] == "BoundCertified"
    ids = [int(x) for x in w.read_text().split()]
    assert ids == sorted(ids) and DenseGraph.from_dimacs(g).is_coclique(ids)


def test_solve_budget_exhaustion_exit_2(capsys):
    code, _, _ = run(capsys, "solve", "--family", "paley", "--q", "61", "--max-nodes", "3", "--threads", "1")
    assert code == 2


def test_run_record_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "--family", "triangular", "--n", "6", "--json")
    rec = RunRecord.from_json(out)
    assert RunRecord.from_json(rec.to_json()) == rec
    assert json.loads(rec.to_json()) == json.loads(out)
    with pytest.raises(CorruptCacheEntry):
        RunRecord.from_json("[1, 2]")
    with pytest.raises(CorruptCacheEntry):
        RunRecord.from_dict({"schema": "other/0", "command": "x"})


def _strip_timing(rec: dict) -> dict:
    rec = dict(rec)
    rec.pop("timestamp")
    rec["result"] = {k: v for k, v in rec["result"].items() if k != "elapsed"}
    return rec


def test_cache_hit_same_json(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    _, first, err1 = run(capsys, "classify", "--family", "bvls", "--json")
    _, second, err2 = run(capsys, "classify", "--family", "bvls", "--json")
    assert "cache" not in err1 and "served from cache" in err2
    assert _strip_timing(json.loads(first)) == _strip_timing(json.loads(second))


def test_cache_corrupt_entry_ignored(capsys, tmp_path, caplog):
    args = ("classify", "--family", "triangular", "--n", "6", "--cache-dir", str(tmp_path))
    run(capsys, *args)
    (entry,) = tmp_path.glob("*.json")
    entry.write_text("{not json")
    code, out, err = run(capsys, *args)
    assert code == 0 and "NonSeparating" in out
    assert "served from cache" not in err
    assert any("corrupt" in r.message for r in caplog.records)
    assert RunRecord.from_json(entry.read_text()).verdict["status"] == "NonSeparating"


def test_cache_budget_policy(capsys, tmp_path):
    g = tmp_path / "no63.dimacs"
    run(capsys, "gen", "--family", "no", "--n", "6", "--q", "3", "--epsilon", "-1", "--out", str(g))
    base = ("classify", "--file", str(g), "--cache-dir", str(tmp_path / "c"), "--threads", "1")
    code, _, _ = run(capsys, *base, "--max-nodes", "3")
    assert code == 2
    # same budget: the unproven record is reused
    _, _, err = run(capsys, *base, "--max-nodes", "3")
    assert "served from cache" in err
    # new budget: recomputed, now final
    code, out, err = run(capsys, *base, "--max-nodes", "1000000")
    assert code == 0 and "Separating" in out and "served from cache" not in err
    # final results are reused whatever the budget
    _, _, err = run(capsys, *base, "--max-nodes", "7")
    assert "served from cache" in err


def test_cache_key_depends_on_major_version(monkeypatch):
    ident = {"family": "BvLS", "params": {}}
    a = cache_key("classify", ident)
    monkeypatch.setattr(cli, "__version__", "1.0.0")
    assert cache_key("classify", ident) != a
    monkeypatch.setattr(cli, "__version__", "0.9.9")
    assert cache_key("classify", ident) == a


def test_cache_class_round_trip(tmp_path):
    c = ResultCache(tmp_path)
    rec = RunRecord("classify", spec="x", verdict={"status": "Separating", "reason": "FractionalDelsarte"})
    c.put("k", rec)
    assert c.get("k", None) == rec
    assert c.get("missing", None) is None


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "srgsep.cli", "bounds", "--nu", "50", "--k", "7", "--lambda", "0", "--mu", "1"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert "10/3" in out and "15" in out
