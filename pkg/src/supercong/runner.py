"""Suite execution across primes and report rendering."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

from . import __version__
from .checks import DEFAULT_SLACK, REGISTRY, CheckResult, expand_params, ramanujan_sanity, run_check
from .special import primes_in_range
from .wz import verify_g_rewrite, verify_pochhammer_identities, verify_telescoping, verify_wz_pair

__all__ = [
    "SuiteConfig",
    "Report",
    "ConfigError",
    "GLOBAL_CHECKS",
    "REPORT_VERSION",
    "CSV_HEADER",
    "run_suite",
    "render_report",
    "exit_code",
]

REPORT_VERSION = 1
CSV_HEADER = ["check_id", "p", "params", "modulus", "lhs", "rhs", "status", "duration_ms"]

# checks that are not indexed by a congruence prime
GLOBAL_CHECKS = ("ramanujan_sanity", "wz_g_rewrite", "wz_pair", "wz_pochhammer", "wz_telescoping")
RAMANUJAN_TERMS = 25
RAMANUJAN_TOL = 1e-12

FORMATS = ("table", "json", "csv")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    prime_lo: int = 5
    prime_hi: int = 50
    check_ids: tuple | str = "all"
    param_overrides: dict = field(default_factory=dict)
    precision_slack: int = DEFAULT_SLACK
    jobs: int = 1
    format: str = "table"
    output_path: str | None = None
    fail_fast: bool = False
    wz_grid: int = 40
    telescoping_max: int = 61
    timing: bool = True

    def __post_init__(self):
        if not 5 <= self.prime_lo <= self.prime_hi:
            raise ConfigError(f"need 5 <= prime_lo <= prime_hi, got {self.prime_lo}..{self.prime_hi}")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        if self.precision_slack < 0:
            raise ConfigError("precision slack must be >= 0")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.wz_grid < 1:
            raise ConfigError("wz grid must be >= 1")
        if self.check_ids != "all":
            ids = tuple(self.check_ids)
            unknown = [c for c in ids if c not in REGISTRY and c not in GLOBAL_CHECKS]
            if unknown:
                raise ConfigError(f"unknown check ids: {', '.join(unknown)}")
            object.__setattr__(self, "check_ids", ids)

    def selected(self) -> list[str]:
        if self.check_ids == "all":
            return sorted(REGISTRY) + list(GLOBAL_CHECKS)
        return list(self.check_ids)

    def echo(self) -> dict:
        """Semantic configuration; execution details (jobs, output, format) are left out."""
        return {
            "tool_version": __version__,
            "prime_lo": self.prime_lo,
            "prime_hi": self.prime_hi,
            "check_ids": self.check_ids if self.check_ids == "all" else list(self.check_ids),
            "param_overrides": dict(sorted(self.param_overrides.items())),
            "precision_slack": self.precision_slack,
            "wz_grid": self.wz_grid,
            "telescoping_max": self.telescoping_max,
        }


@dataclass
class Report:
    results: list = field(default_factory=list)
    config: dict | None = None
    wall_time_s: float | None = None
    version: int = REPORT_VERSION

    def is_conjecture(self, r: CheckResult) -> bool:
        d = REGISTRY.get(r.check_id)
        return bool(d and d.conjecture)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0, "precision_error": 0}
        conj = {"pass": 0, "fail": 0, "skipped": 0, "precision_error": 0}
        any_conj = False
        for r in self.results:
            if self.is_conjecture(r):
                any_conj = True
                conj[r.status] += 1
            else:
                counts[r.status] += 1
        if any_conj:
            counts["conjecture"] = conj
        if self.wall_time_s is not None:
            counts["wall_time_s"] = self.wall_time_s
        return counts

    def to_dict(self, timing: bool = True) -> dict:
        d = {"version": self.version}
        if self.config is not None:
            d["config"] = self.config
        d["results"] = [r.to_dict(timing) for r in self.results]
        d["summary"] = self.summary
        return d


# -- task execution ----------------------------------------------------------


def _global_result(name: str, p: int, params: dict, ok: bool, lhs="", rhs="", modulus="exact"):
    return CheckResult(name, p, params, modulus, lhs, rhs, "pass" if ok else "fail")


def _run_global(name: str, arg: int) -> CheckResult:
    t0 = time.perf_counter()
    if name == "wz_pair":
        cert = verify_wz_pair(arg)
        res = _global_result(name, 0, {"n_max": arg}, cert.ok,
                             *_counterexample(cert))
    elif name == "wz_pochhammer":
        cert = verify_pochhammer_identities(arg, arg)
        res = _global_result(name, 0, {"n_max": arg, "k_max": arg}, cert.ok, *_counterexample(cert))
    elif name == "wz_g_rewrite":
        cert = verify_g_rewrite(arg, arg)
        res = _global_result(name, 0, {"n_max": arg, "k_max": arg}, cert.ok, *_counterexample(cert))
    elif name == "wz_telescoping":
        cert = verify_telescoping(arg)
        res = _global_result(name, arg, {}, cert.ok, *_counterexample(cert))
    elif name == "ramanujan_sanity":
        s, err = ramanujan_sanity(arg)
        res = _global_result(name, 0, {"N": arg}, err < RAMANUJAN_TOL, repr(s), "4/pi",
                             modulus=repr(RAMANUJAN_TOL))
    else:
        raise KeyError(name)
    res.duration_ms = round((time.perf_counter() - t0) * 1000, 3)
    return res


def _counterexample(cert) -> tuple[str, str]:
    if cert.ok or cert.counterexample is None:
        return "", ""
    return str(cert.counterexample), ""


def _run_task(task) -> list[CheckResult]:
    kind = task[0]
    if kind == "prime":
        _, p, items, slack = task
        return [run_check(cid, p, params, slack) for cid, params in items]
    _, name, arg = task
    return [_run_global(name, arg)]


def _build_tasks(config: SuiteConfig) -> list[tuple]:
    primes = primes_in_range(config.prime_lo, config.prime_hi)
    selected = config.selected()
    rows = [(cid, params) for cid in selected if cid in REGISTRY
            for params in expand_params(REGISTRY[cid], config.param_overrides)]
    tasks = []
    if rows:
        tasks += [("prime", p, rows, config.precision_slack) for p in primes]
    half = max(1, config.wz_grid // 2)
    for name in GLOBAL_CHECKS:
        if name not in selected:
            continue
        if name == "wz_pair":
            tasks.append(("global", name, config.wz_grid))
        elif name in ("wz_pochhammer", "wz_g_rewrite"):
            tasks.append(("global", name, half))
        elif name == "wz_telescoping":
            tasks += [("global", name, p) for p in primes if p <= config.telescoping_max]
        elif name == "ramanujan_sanity":
            tasks.append(("global", name, RAMANUJAN_TERMS))
    return tasks


def _is_blocking(r: CheckResult) -> bool:
    d = REGISTRY.get(r.check_id)
    if d and d.conjecture:
        return False
    return r.status in ("fail", "precision_error")


def run_suite(config: SuiteConfig) -> Report:
    """Run every selected (check, prime) pair; result order is independent of ``jobs``."""
    t0 = time.perf_counter()
    tasks = _build_tasks(config)
    results: list[CheckResult] = []
    if config.jobs == 1 or len(tasks) <= 1:
        for task in tasks:
            batch = _run_task(task)
            results += batch
            if config.fail_fast and any(_is_blocking(r) for r in batch):
                break
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            pending = {pool.submit(_run_task, t) for t in tasks}
            stop = False
            while pending and not stop:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    batch = fut.result()
                    results += batch
                    if config.fail_fast and any(_is_blocking(r) for r in batch):
                        stop = True
            for fut in pending:
                fut.cancel()
    results.sort(key=CheckResult.sort_key)
    wall = round(time.perf_counter() - t0, 3) if config.timing else None
    return Report(results, config.echo(), wall)


def exit_code(report: Report) -> int:
    s = report.summary
    return 0 if s["fail"] == 0 and s["precision_error"] == 0 else 1


# -- rendering ---------------------------------------------------------------

GLYPHS = {"pass": "✓", "fail": "✗", "skipped": "·", "precision_error": "!"}


def _params_str(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(params.items()))


def _summary_line(report: Report) -> str:
    s = report.summary
    parts = [f"{k}={s[k]}" for k in ("pass", "fail", "skipped", "precision_error")]
    if "conjecture" in s:
        c = s["conjecture"]
        parts.append("conjecture[" + " ".join(f"{k}={v}" for k, v in c.items()) + "]")
    if "wall_time_s" in s:
        parts.append(f"wall={s['wall_time_s']}s")
    return "summary: " + " ".join(parts)


def render_report(report: Report, fmt: str = "table", timing: bool = True,
                  quiet: bool = False) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(timing), separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(CSV_HEADER)
        for r in report.results:
            w.writerow([r.check_id, r.p, _params_str(r.params), r.modulus, r.lhs, r.rhs,
                        r.status, r.duration_ms if timing else ""])
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    if quiet:
        return _summary_line(report) + "\n"
    rows = []
    for r in report.results:
        tag = " [conjecture]" if report.is_conjecture(r) else ""
        row = [GLYPHS[r.status], r.check_id + tag, str(r.p), _params_str(r.params),
               r.modulus, r.lhs, r.rhs, r.status]
        if timing:
            row.append(f"{r.duration_ms:.1f}ms")
        rows.append(row)
    header = ["", "check", "p", "params", "modulus", "lhs", "rhs", "status"]
    if timing:
        header.append("time")
    widths = [max(len(x) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
    lines = ["  ".join(c.ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    lines.append(_summary_line(report))
    return "\n".join(lines) + "\n"
