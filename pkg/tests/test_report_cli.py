"""Report schema, determinism, exit codes and table export through the CLI."""
from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from zetarec import cli
from zetarec.report import RunConfig, collect_tasks, parse_range, render_report, run
from zetarec.suites import Task, expand, suite_names


def _run(args, tmp_path, name="out"):
    out = tmp_path / name
    code = cli.main([*args, "--out", str(out)])
    return code, out.read_text()


def _strip_timing(report: dict) -> dict:
    return {**report, "checks": [{k: v for k, v in c.items() if k != "ms"} for c in report["checks"]]}


def test_parse_range():
    assert parse_range("1..60") == (1, 60)
    assert parse_range("7") == (7, 7)
    with pytest.raises(ValueError):
        parse_range("5..2")


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(precision=19)
    with pytest.raises(ValueError):
        RunConfig(format="xml")
    with pytest.raises(ValueError):
        RunConfig(range=(3, 1))


def test_verify_json_schema(tmp_path):
    code, text = _run(["verify", "--suite", "lettington", "--range", "1..5"], tmp_path)
    assert code == 0
    rep = json.loads(text)
    assert set(rep) == {"version", "config", "checks", "summary"}
    assert rep["summary"] == {"pass": 5, "fail": 0, "indeterminate": 0}
    c = rep["checks"][0]
    assert set(c) == {"id", "params", "status", "residual", "precision_digits", "ms"}
    assert c["id"] == "lettington_1_2" and c["params"] == [1] and c["residual"] == "0 (exact)"
    assert c["status"] == "exact_pass" and c["precision_digits"] is None


def test_printed_variant_fixture_exits_nonzero(tmp_path):
    code, text = _run(["verify", "--suite", "thm2a_printed", "--format", "text"], tmp_path)
    assert code == 1
    assert "fail" in text and text.rstrip().splitlines()[-1].startswith("summary:")


def test_numeric_check_reports_precision(tmp_path):
    code, text = _run(["verify", "--suite", "lemma1", "--range", "1..2", "--precision", "25"], tmp_path)
    assert code == 0
    checks = json.loads(text)["checks"]
    assert all(c["status"] == "pass" and c["precision_digits"] == 25 for c in checks)


def test_reports_are_deterministic(tmp_path):
    args = ["verify", "--suite", "thm9a", "--range", "1..2", "--precision", "25"]
    _, a = _run(args, tmp_path, "a")
    _, b = _run(args + ["--jobs", "2"], tmp_path, "b")
    assert _strip_timing(json.loads(a)) == {**_strip_timing(json.loads(b))}


def test_csv_format(tmp_path):
    code, text = _run(["verify", "--suite", "thm5", "--range", "1..3", "--format", "csv"], tmp_path)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["id", "params", "status", "residual", "precision_digits", "ms"]
    assert [r[1] for r in rows[1:]] == ["1", "2", "3"]


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "--precision", "10"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "--suite", "nonsense"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "--range", "9..1"])
    assert e.value.code == 2
    assert cli.main(["verify", "--suite", "lattice", "--range", "1..2"]) == 2


def test_unwritable_output(tmp_path):
    assert cli.main(["table", "hurwitz", "--out", str(tmp_path / "missing" / "x.csv")]) == 2


def test_table_hurwitz_csv(tmp_path):
    code, text = _run(["table", "hurwitz", "--max", "12", "--format", "csv"], tmp_path)
    assert code == 0
    assert text == "n,H_n\n4,1/10\n8,3/10\n12,567/130\n"


def test_table_zeta_even_and_cj(tmp_path):
    _, text = _run(["table", "zeta_even", "--max", "4", "--format", "text"], tmp_path)
    assert "1/6 * pi^2" in text and "1/90 * pi^4" in text
    _, text = _run(["table", "constants_cj", "--max", "3", "--precision", "25"], tmp_path)
    assert len(text.strip().splitlines()) == 4


def test_table_eisenstein_flags_zero(tmp_path):
    _, text = _run(["table", "eisenstein", "--max", "8", "--precision", "25"], tmp_path)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["order"] for r in rows] == ["4", "6", "8"]
    assert rows[1]["flag"] == "zero" and rows[0]["flag"] == ""


def test_scan_conjecture_never_gates(tmp_path):
    code, text = _run(["scan-conjecture1", "--range", "4..6", "--precision", "25"], tmp_path)
    assert code == 0 and len(text.strip().splitlines()) == 4


def test_task_expansion():
    assert "all" in suite_names() and "printed" in suite_names()
    assert not any(t.id.endswith("_printed") for t in expand("all"))
    tasks = collect_tasks(["thm1a", "thm1a"], (1, 12))
    assert [t.params[0] for t in tasks] == list(range(1, 13))
    with pytest.raises(ValueError):
        expand("all", (1, 2))
    with pytest.raises(KeyError):
        expand("unknown")


def test_render_rejects_format():
    cfg = RunConfig(suites=("thm1a",), range=(1, 1))
    rep, code = run(cfg)
    assert code == 0
    with pytest.raises(ValueError):
        render_report(rep, "yaml")


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "zetarec.cli", "suites"], capture_output=True, text=True)
    assert out.returncode == 0 and "lettington_1_2" in out.stdout.split()
