"""Command-line interface: ``supercong run | list-checks | wz | oracle``.

Exit status is 0 when nothing failed, 1 on any failure or precision error
(conjecture rows excepted), 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import REGISTRY
from .runner import ConfigError, SuiteConfig, exit_code, render_report, run_suite
from .special import bernoulli_p3_powersum, bernoulli_p3_recurrence, euler_p3, fermat_quotient2, is_prime

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def parse_primes(text: str) -> tuple[int, int]:
    """``LO..HI`` or a single ``P``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        p = int(text)
        return p, p
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def parse_params(text: str) -> dict:
    out = {}
    for item in filter(None, text.split(",")):
        key, sep, val = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected k=v, got {item!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise argparse.ArgumentTypeError(f"parameter {key} must be an integer") from None
    return out


def parse_checks(text: str):
    if text == "all":
        return "all"
    return tuple(c.strip() for c in text.split(",") if c.strip())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supercong", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the check suite over a prime range")
    run.add_argument("--primes", type=parse_primes, default=(5, 50), metavar="LO..HI")
    run.add_argument("--checks", type=parse_checks, default="all", metavar="all|id,id")
    run.add_argument("--params", type=parse_params, default={}, metavar="k=v,...")
    run.add_argument("--precision-slack", type=int, default=2, metavar="N")
    run.add_argument("--jobs", type=int, default=1, metavar="N")
    run.add_argument("--format", choices=("table", "json", "csv"), default="table")
    run.add_argument("--out", metavar="PATH")
    run.add_argument("--fail-fast", action="store_true")
    run.add_argument("--wz-grid", type=int, default=40, metavar="N")
    run.add_argument("--quiet", action="store_true", help="print the summary only")
    run.add_argument("--no-timing", action="store_true", help="omit durations and wall time")

    ls = sub.add_parser("list-checks", help="dump the registry")
    ls.add_argument("--format", choices=("table", "json"), default="table")

    wz = sub.add_parser("wz", help="exact WZ certificates only")
    wz.add_argument("--nmax", type=int, default=40, metavar="N")
    wz.add_argument("--primes", type=parse_primes, default=(5, 19), metavar="LO..HI",
                    help="primes for the telescoping check")
    wz.add_argument("--format", choices=("table", "json", "csv"), default="table")

    orc = sub.add_parser("oracle", help="B_{p-3}, E_{p-3} and q_p(2) for one prime")
    orc.add_argument("--p", type=int, required=True, metavar="P")
    orc.add_argument("--precision", type=int, default=3, metavar="E",
                     help="digits of q_p(2) to print")
    return ap


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_run(args) -> int:
    lo, hi = args.primes
    config = SuiteConfig(
        prime_lo=lo,
        prime_hi=hi,
        check_ids=args.checks,
        param_overrides=args.params,
        precision_slack=args.precision_slack,
        jobs=args.jobs,
        format=args.format,
        output_path=args.out,
        fail_fast=args.fail_fast,
        wz_grid=args.wz_grid,
        timing=not args.no_timing,
    )
    report = run_suite(config)
    _emit(render_report(report, config.format, config.timing, args.quiet), config.output_path)
    if config.output_path and args.quiet:
        sys.stdout.write(render_report(report, "table", config.timing, quiet=True))
    return exit_code(report)


def cmd_list(args) -> int:
    rows = []
    for cid in sorted(REGISTRY):
        d = REGISTRY[cid]
        grid = [dict(g) for g in d.grid] if d.parametric else []
        modulus = "p^" + str(d.modulus) if not callable(d.modulus) else "p^k(params)"
        min_p = d.min_prime if not callable(d.min_prime) else "by params"
        rows.append({"id": cid, "modulus": modulus, "min_prime": min_p, "grid": grid,
                     "conjecture": d.conjecture, "statement": d.statement, "anchor": d.anchor})
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    for r in rows:
        tag = "  [conjecture]" if r["conjecture"] else ""
        print(f"{r['id']:<20} {r['modulus']:<12} p>={r['min_prime']!s:<10} {r['statement']}{tag}")
        if r["grid"]:
            print(f"{'':<20} grid: {r['grid']}")
        print(f"{'':<20} anchor: {r['anchor']}")
    return EXIT_OK


def cmd_wz(args) -> int:
    if args.nmax < 1:
        raise _UsageError("--nmax must be >= 1")
    lo, hi = args.primes
    config = SuiteConfig(
        prime_lo=max(lo, 5),
        prime_hi=hi,
        check_ids=("wz_pair", "wz_pochhammer", "wz_g_rewrite", "wz_telescoping"),
        wz_grid=args.nmax,
        telescoping_max=hi,
        format=args.format,
    )
    report = run_suite(config)
    _emit(render_report(report, args.format), None)
    return exit_code(report)


def cmd_oracle(args) -> int:
    p = args.p
    if p < 5 or not is_prime(p):
        raise _UsageError(f"--p must be a prime >= 5, got {p}")
    rec = bernoulli_p3_recurrence(p) if p <= 5000 else None
    pw = bernoulli_p3_powersum(p)
    q = fermat_quotient2(p, args.precision)
    print(f"p = {p}")
    print(f"B_(p-3) mod p   = {pw}" + ("" if rec is None else f"   (recurrence {rec}, "
                                       + ("agree" if rec == pw else "DISAGREE") + ")"))
    print(f"E_(p-3) mod p   = {euler_p3(p)}")
    print(f"q_p(2) mod p^{args.precision} = {q.residue()}")
    return EXIT_OK if rec is None or rec == pw else EXIT_FAIL


COMMANDS = {"run": cmd_run, "list-checks": cmd_list, "wz": cmd_wz, "oracle": cmd_oracle}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, _UsageError) as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

