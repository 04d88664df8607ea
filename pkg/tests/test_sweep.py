import json

import pytest

from lrkron import Partition, SweepConfig, read_report, run_sweep, write_report
from lrkron.sweep import check_case, sweep_cases, threads_from_env


def test_config_validation():
    assert SweepConfig(group="su3").groups == ("SU3",)
    assert SweepConfig().groups == ("SU3", "SU4")
    for bad in ({"max_boxes": -1}, {"parallelism": 0}, {"group": "SU5"}):
        with pytest.raises(ValueError):
            SweepConfig(**bad)


def test_zero_boxes_is_one_case():
    for group in ("SU3", "SU4"):
        res = run_sweep(group, 0)
        assert res.cases == 1
        assert res.mismatches == 0


def test_case_grid():
    cases = sweep_cases("SU3", 2)
    assert len(cases) == len(set(cases))
    assert all(len(lam) <= 2 and len(mu) <= 2 for lam, mu in cases)
    assert (Partition(1), Partition(1)) in cases


def test_check_case_clean():
    res = check_case("SU4", Partition(2, 1), Partition(2, 1, 1))
    assert res.records == []
    assert res.comparisons > 0


def test_parallel_matches_serial():
    a = run_sweep("SU4", 5, parallelism=1)
    b = run_sweep("SU4", 5, parallelism=2)
    assert (a.cases, a.comparisons, a.records) == (b.cases, b.comparisons, b.records)


def test_report_round_trip(tmp_path):
    recs = [{"group": "SU3", "kind": "multiplicity", "lambda": [1], "mu": [1], "nu": [2],
             "formula": 2, "oracle": 1, "bounds": {}, "implicated": ["eta_max:mu2"]}]
    path = tmp_path / "r.jsonl"
    write_report(str(path), recs)
    raw = path.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    assert read_report(str(path)) == recs
    assert json.loads(raw.splitlines()[0])["formula"] == 2


def test_threads_env(monkeypatch):
    monkeypatch.delenv("LRKRON_THREADS", raising=False)
    assert threads_from_env(3) == 3
    monkeypatch.setenv("LRKRON_THREADS", "2")
    assert threads_from_env(1) == 2
    monkeypatch.setenv("LRKRON_THREADS", "0")
    with pytest.raises(ValueError):
        threads_from_env(1)


def test_summary_mentions_counts():
    s = run_sweep("SU3", 2).summary()
    assert "cases=" in s and "mismatches=0" in s
