"""Command line: ``orbicover build|verify|grid``.

Exit status 0 when every verdict passes, 1 when some verdict fails, 2 on
usage errors.  JSON reports go to ``--out`` (figures alongside) or, with
``--json``, to standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .dynamics import TorusMap, is_anosov
from .report import build_report, grid_report, verify_report

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    m: range
    n: range
    h: int
    anosov: TorusMap
    power_cap: int | None
    out: Path | None
    json: bool
    figures: bool
    timing: bool
    max_degree: int


def parse_range(text: str) -> range:
    """``"3"`` or ``"2..4"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbicover", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("build", "tower of covers and piece-surface cross-check"),
                       ("verify", "build plus dynamics and the mapping-torus lemma"),
                       ("grid", "verify over ranges of (m, n)")):
        p = sub.add_parser(name, help=text)
        ranged = name == "grid"
        p.add_argument("--m", required=True, help="range A..B" if ranged else "integer m >= 2")
        p.add_argument("--n", required=True, help="range A..B" if ranged else "integer n > m")
        p.add_argument("--h", type=int, default=5, help="genus of the tube replacement (default 5)")
        p.add_argument("--anosov", default="2,1,1,1", help="matrix a,b,c,d of determinant 1")
        p.add_argument("--power-cap", type=int, default=None, help="largest power of psi searched")
        p.add_argument("--max-degree", type=int, default=400, help="cap on the degree 4mn")
        p.add_argument("--out", type=Path, default=None, help="JSON report file; figures are written next to it")
        p.add_argument("--json", action="store_true", help="print the JSON report to standard output")
        p.add_argument("--no-figures", action="store_true", help="skip the matplotlib figures")
        p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "grid":
        m, n = parse_range(args.m), parse_range(args.n)
    else:
        try:
            mv, nv = int(args.m), int(args.n)
        except ValueError:
            raise UsageError("--m and --n must be integers") from None
        if not nv > mv >= 2:
            raise UsageError(f"need n > m >= 2, got m={mv}, n={nv}")
        if 4 * mv * nv > args.max_degree:
            raise UsageError(f"degree 4mn = {4 * mv * nv} exceeds --max-degree {args.max_degree}")
        m, n = range(mv, mv + 1), range(nv, nv + 1)
    try:
        t = TorusMap.parse(args.anosov)
    except ValueError as exc:
        raise UsageError(f"--anosov: {exc}") from None
    if args.command != "build" and not is_anosov(t):
        raise UsageError(f"matrix {t} is not Anosov (|trace| = {abs(t.trace)} <= 2)")
    if args.power_cap is not None and args.power_cap < 1:
        raise UsageError("--power-cap must be positive")
    if args.h < 0:
        raise UsageError("--h must be non-negative")
    return RunConfig(args.command, m, n, args.h, t, args.power_cap, args.out, args.json,
                     not args.no_figures, args.timing, args.max_degree)


def run(cfg: RunConfig) -> dict:
    start = time.perf_counter()
    if cfg.command == "build":
        report = build_report(cfg.m[0], cfg.n[0], cfg.h)
    elif cfg.command == "verify":
        report = verify_report(cfg.m[0], cfg.n[0], cfg.anosov, cfg.power_cap, cfg.h)
    else:
        report = grid_report(cfg.m, cfg.n, cfg.anosov, cfg.power_cap, cfg.h, cfg.max_degree)
    if cfg.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    return report


def summarize(report: dict) -> str:
    lines = []
    if report["command"] == "grid":
        lines.append(f"grid over {len(report['rows'])} (m, n) pairs, A = [{report['matrix']}]")
        for r in report["rows"]:
            status = "PASS" if r["passed"] else "FAIL"
            extra = "" if r["passed"] else "  failed: " + ", ".join(r["failed"])
            lines.append(f"  ({r['m']}, {r['n']}) {status}  S_g = {r['genus']}  lemma power {r['lemma_power']}{extra}")
    else:
        sigs = report["tower"]["signatures"]
        lines.append(f"{report['command']} (m, n) = ({report['m']}, {report['n']})")
        lines.append("  " + "  ".join(f"{k}: {v}" for k, v in sigs.items()))
        for v in report["verdicts"]:
            mark = "PASS" if v["pass"] else "FAIL"
            detail = "" if v["pass"] else f"  expected {v['expected']}, observed {v['observed']}"
            lines.append(f"  [{mark}] {v['name']}{detail}")
        if "lemma" in report:
            lem = report["lemma"]
            lines.append(f"  lemma: psi = A^{lem['base_power']}, lifts with fixed cone fibres at psi^{lem['psi_power']}")
            for f in lem["failures"]:
                lines.append(f"  lemma failure: {f}")
    lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        cfg = config_from_args(args)
        report = run(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps(report)
    if cfg.out is not None:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(text)
        if cfg.figures:
            from .plotting import render

            for path in render(report, cfg.out):
                print(f"wrote {path}", file=sys.stderr)
    if cfg.json:
        sys.stdout.write(text)
    else:
        print(summarize(report))
    return EXIT_PASS if report["passed"] else EXIT_FAIL


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
