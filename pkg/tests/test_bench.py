import csv
import io

import pytest

from adjgraph import bench
from adjgraph.bench import FIELDS, BenchReport, report_table, run_suite, write_csv


def rows(reports):
    return list(csv.DictReader(io.StringIO(report_table(reports))))


def test_header_is_fixed():
    assert FIELDS[:6] == ("suite", "operation", "graph", "n", "m", "repeats")
    text = report_table([BenchReport("x", "y", "G(1,0)", 1, 0, 1, seconds=0.5)])
    assert text.splitlines()[0] == ",".join(FIELDS)
    assert next(csv.DictReader(io.StringIO(text)))["seconds"] == "0.5"


@pytest.mark.parametrize("suite", bench.SUITES)
def test_every_suite_runs_small(suite):
    out = rows(run_suite(suite, 300, 900, seed=2, repeats=2))
    assert out and all(r["status"] == "ok" for r in out)
    assert all(r["suite"] == suite and r["prng"] == "MT19937" for r in out)


def test_memory_suite_reports_differences():
    out = {r["operation"]: r for r in rows(bench.memory_suite(2000, 8000, seed=1))}
    assert float(out["bytes_per_edge"]["bytes_per_edge"]) > 0
    assert float(out["bytes_per_node"]["bytes_per_node"]) > 0


def test_timed_reports_mean(monkeypatch):
    ticks = iter([0.0, 1.0, 10.0, 13.0])
    monkeypatch.setattr(bench.time, "perf_counter", lambda: next(ticks))
    secs, result = bench._timed(lambda: "done", 2)
    assert secs == 2.0 and result == "done"


def test_oom_is_reported(monkeypatch):
    def boom(*a, **k):
        raise MemoryError
        yield

    monkeypatch.setitem(bench.RUNNERS, "delete", boom)
    out = rows(run_suite("delete", 10, 10))
    assert out[-1]["status"] == "oom"


def test_csv_precision():
    buf = io.StringIO()
    write_csv([BenchReport("s", "o", "g", 1, 1, 1, seconds=1 / 3)], buf, precision=3)
    assert "0.333," in buf.getvalue()
