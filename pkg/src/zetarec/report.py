"""Verification runs, machine-readable reports and exported tables."""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from . import __version__
from .exact import PiPoly
from .suites import Task, expand, run_task
from .verdict import EXACT_PASS, FAIL, INDETERMINATE, PASS, Verdict

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    command: str = "verify"
    suites: tuple[str, ...] = ("all",)
    range: tuple[int, int] | None = None
    precision: int = 50
    format: str = "json"
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.precision < 20:
            raise ValueError("precision must be at least 20 digits")
        if self.range is not None and self.range[0] > self.range[1]:
            raise ValueError("empty range")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("jobs")
        d["suites"] = list(self.suites)
        d["range"] = None if self.range is None else f"{self.range[0]}..{self.range[1]}"
        return d


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    id: str
    params: tuple
    status: str
    residual: str
    precision_digits: int | None
    ms: int

    def as_json(self) -> dict:
        return {"id": self.id, "params": list(self.params), "status": self.status, "residual": self.residual,
                "precision_digits": self.precision_digits, "ms": self.ms}


def parse_range(text: str) -> tuple[int, int]:
    """'a..b' or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        rng = (int(lo), int(hi))
    else:
        rng = (int(text), int(text))
    if rng[0] > rng[1]:
        raise ValueError(f"empty range {text!r}")
    return rng


def format_value(x, digits: int = 50) -> str:
    """Fractions as p/q, PiPoly in its own notation, floats to ``digits`` significant digits."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, Fraction, PiPoly, str)):
        return str(x)
    if isinstance(x, mpmath.mpc):
        if x.imag == 0:
            return mpmath.nstr(x.real, digits)
        return mpmath.nstr(x, digits)
    if isinstance(x, (mpmath.mpf, float)):
        return mpmath.nstr(mpmath.mpf(x), digits)
    return str(x)


def _param(p):
    return p if isinstance(p, int) and not isinstance(p, bool) else format_value(p, 20)


def _residual_str(v: Verdict) -> str:
    if isinstance(v.residual, PiPoly):
        return "0 (exact)" if v.residual.is_zero() else str(v.residual)
    return mpmath.nstr(v.residual, 6)


def _work(item: tuple[Task, int]) -> CheckRecord:
    task, dps = item
    start = time.perf_counter()
    try:
        v = run_task(task, dps)
        status, residual = v.status, _residual_str(v)
        prec = v.precision
        # keep the task's exact parameters unless the check reports different ones (e.g. drawn points)
        params = task.params if len(v.params) == len(task.params) else v.params
    except Exception as exc:  # an undecidable check is reported, not raised
        status, residual, prec, params = INDETERMINATE, f"error: {type(exc).__name__}: {exc}", dps, task.params
    ms = int(round((time.perf_counter() - start) * 1000))
    return CheckRecord(task.suite, task.id, tuple(_param(p) for p in params), status, residual, prec, ms)


def collect_tasks(suites: Iterable[str], rng: tuple[int, int] | None) -> list[Task]:
    seen = set()
    tasks = []
    for s in suites:
        for t in expand(s, rng):
            if t not in seen:
                seen.add(t)
                tasks.append(t)
    if not tasks:
        raise ValueError("no checks selected")
    return sorted(tasks, key=Task.sort_key)


def execute(tasks: Sequence[Task], dps: int, jobs: int = 1) -> list[CheckRecord]:
    """Run tasks, in worker processes when ``jobs > 1``; output order follows ``tasks``."""
    items = [(t, dps) for t in tasks]
    if jobs == 1 or len(items) < 2:
        return [_work(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_work, items, chunksize=1))


def summarize(records: Sequence[CheckRecord]) -> dict:
    out = {"pass": 0, "fail": 0, "indeterminate": 0}
    for r in records:
        if r.status in (EXACT_PASS, PASS):
            out["pass"] += 1
        elif r.status == FAIL:
            out["fail"] += 1
        else:
            out["indeterminate"] += 1
    return out


def build_report(config: RunConfig, records: Sequence[CheckRecord]) -> dict:
    return {
        "version": __version__,
        "config": config.as_dict(),
        "checks": [r.as_json() for r in records],
        "summary": summarize(records),
    }


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "params", "status", "residual", "precision_digits", "ms"])
        for c in report["checks"]:
            w.writerow([c["id"], ";".join(str(p) for p in c["params"]), c["status"], c["residual"],
                        "" if c["precision_digits"] is None else c["precision_digits"], c["ms"]])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for c in report["checks"]:
            params = ", ".join(str(p) for p in c["params"])
            lines.append(f"{c['status']:<13} {c['id']}({params})  residual {c['residual']}")
        s = report["summary"]
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['indeterminate']} indeterminate")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def run(config: RunConfig) -> tuple[dict, int]:
    """Execute a verify run; exit status is 0 exactly when every check passed."""
    tasks = collect_tasks(config.suites, config.range)
    records = execute(tasks, config.precision, config.jobs)
    report = build_report(config, records)
    s = report["summary"]
    return report, 0 if s["fail"] == 0 and s["indeterminate"] == 0 else 1


def write_output(text: str, out: str | None):
    if out is None:
        print(text, end="")
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# --------------------------------------------------------------------------
# tables

TABLE_KINDS = ("zeta_even", "hurwitz", "eisenstein", "double_zeta", "constants_cj",
               "hurwitz_asymptotic", "equianharmonic_asymptotic", "zagier_F")


def export_table(kind: str, params: dict, precision: int = 50) -> tuple[list[str], list[list]]:
    """Header and rows for table ``kind``; cells are already formatted strings."""
    from . import lattice
    from .double_zeta import double_zeta
    from .exact import zeta_even
    from .numerics.recurrences import c_j
    from .numerics.zagier import zagier_F

    P = precision
    top = params.get("max")
    with mpmath.workdps(P + 15):
        if kind == "zeta_even":
            top = top or 10
            return ["s", "zeta(s)"], [[str(2 * m), str(zeta_even(m))] for m in range(1, top // 2 + 1)]
        if kind == "hurwitz":
            top = top or 24
            return ["n", "H_n"], [[str(o), str(lattice.hurwitz_number_exact(o))] for o in range(4, top + 1, 4)]
        if kind == "eisenstein":
            top = top or 12
            tau = params.get("tau") or "i"
            rows = []
            zero = mpmath.mpf(10) ** (-(P - 8))
            for o in range(4, top + 1, 2):
                v = lattice.eisenstein(o, tau, "qseries", P).value
                flag = "zero" if abs(v) < zero else ""
                re = mpmath.chop(v.real, zero)
                im = mpmath.chop(v.imag, zero)
                rows.append([str(o), format_value(re, P), format_value(im, P), flag])
            return ["order", "re", "im", "flag"], rows
        if kind == "double_zeta":
            top = top or 6
            return ["a", "b", "zeta(a,b)"], [[str(a), str(b), format_value(double_zeta(a, b, P), P)]
                                             for a in range(2, top + 1) for b in range(1, top + 1)]
        if kind == "constants_cj":
            top = top or 8
            a = Fraction(params.get("a") or "1/2")
            return ["j", "a", "c_j"], [[str(j), str(a), format_value(c_j(j, a, 1, P), P)] for j in range(1, top + 1)]
        if kind == "hurwitz_asymptotic":
            rows = lattice.hurwitz_asymptotic_table(top or 10, P)
            return ["n", "H/leading", "H/refined"], [[str(n), format_value(a, 20), format_value(b, 20)] for n, a, b in rows]
        if kind == "equianharmonic_asymptotic":
            rows = lattice.equianharmonic_asymptotic_table(top or 6, P)
            return ["n", "S_6n", "err_-1/27", "err_-1/18", "closer"], [
                [str(r["n"]), format_value(r["S"], 25), format_value(r["err_27"], 6), format_value(r["err_18"], 6), r["closer"]]
                for r in rows]
        if kind == "zagier_F":
            # plot data: two columns (x, F(x)) on a uniform grid in (0, max]
            top = top or 4
            steps = int(params.get("points") or 40)
            xs = [mpmath.mpf(top) * k / steps for k in range(1, steps + 1)]
            return ["x", "y"], [[format_value(x, 12), format_value(zagier_F(x, min(P, 30)), 20)] for x in xs]
    raise ValueError(f"unknown table kind {kind!r}")


def render_table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    if fmt == "text":
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
        out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def conjecture_table(rng: tuple[int, int], k_choice: str, precision: int) -> tuple[list[str], list[list]]:
    from .identities import conjecture1_scan

    rows = conjecture1_scan(range(rng[0], rng[1] + 1), k_choice, precision)
    header = ["s", "k", "zeta_k", "z_s", "lower", "upper", "holds", "status"]
    return header, [[str(r.s), str(r.k), format_value(r.zeta_k, 25), format_value(r.z_value, 25),
                     format_value(r.lower, 25), format_value(r.upper, 25),
                     "unknown" if r.holds is None else format_value(r.holds), r.status] for r in rows]
