"""Command-line front end.

Exit codes: 0 ok, 2 config/usage error, 3 capability error (no closed form
or frequency set for the requested Hamiltonian), 4 comparison failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from itertools import combinations

import numpy as np

from . import __version__
from .closed_form import (
    exchange_trajectory,
    ising_trajectory_as_printed,
    josephson_trajectory,
    xy_trajectory_as_printed,
)
from .config import ConfigError, Experiment, load_config
from .periodicity import PeriodKind, classify, exchange_coupling_freqs, josephson_freqs, verify_period
from .propagation import ConcurrenceTrajectory, max_deviation, trajectory_oracle, trajectory_super
from .verify import SUITES, run_suite

EXIT_OK, EXIT_CONFIG, EXIT_CAPABILITY, EXIT_COMPARE = 0, 2, 3, 4
ENGINES = ("super", "oracle", "closed")


class CapabilityError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".entdyn-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        _atomic_write(out_path, text)
    else:
        sys.stdout.write(text)


def run_engine(exp: Experiment, engine: str, as_printed: bool = False,
               keep_x: bool = False) -> ConcurrenceTrajectory:
    h = exp.hamiltonian
    if engine == "super":
        return trajectory_super(h.coeffs, exp.psi0, exp.grid, keep_x=keep_x)
    if engine == "oracle":
        return trajectory_oracle(h.coeffs, exp.psi0, exp.grid, keep_x=keep_x)
    if engine != "closed":
        raise ValueError(f"unknown engine {engine!r}")
    if keep_x:
        raise CapabilityError("the closed engine only provides x1; disable outputs.x_components")
    if h.josephson is not None:
        return josephson_trajectory(h.josephson, exp.psi0, exp.grid, as_printed)
    if h.exchange is not None:
        if as_printed and h.kind == "xy":
            return xy_trajectory_as_printed(exp.psi0, exp.grid)
        if as_printed and h.kind == "ising":
            return ising_trajectory_as_printed(exp.psi0, exp.grid)
        return exchange_trajectory(h.exchange, exp.psi0, exp.grid, as_printed)
    raise CapabilityError("no closed form for this Hamiltonian (need a Josephson or pure exchange pattern)")


def trajectory_csv(exp: Experiment, traj: ConcurrenceTrajectory, engine: str) -> str:
    buf = io.StringIO()
    buf.write(f"# config_sha256={exp.sha256()}\n")
    buf.write(f"# source={traj.source.value} engine={engine}\n")
    writer = csv.writer(buf, lineterminator="\n")
    header = ["t", "concurrence"]
    with_x = traj.x_samples is not None
    if with_x:
        for k in range(1, 11):
            header += [f"re_x{k}", f"im_x{k}"]
    writer.writerow(header)
    for j, t in enumerate(traj.times):
        row = [_fmt(t), _fmt(traj.concurrence[j])]
        if with_x:
            for z in traj.x_samples[j]:
                row += [_fmt(z.real), _fmt(z.imag)]
        writer.writerow(row)
    return buf.getvalue()


# -------------------------------------------------------------- commands

def cmd_simulate(args) -> int:
    exp = load_config(args.config)
    if args.dump_config:
        sys.stdout.write(exp.dumps())
        return EXIT_OK
    traj = run_engine(exp, args.engine, args.as_printed_formula, exp.outputs["x_components"])
    _emit(trajectory_csv(exp, traj, args.engine), args.out)
    return EXIT_OK


def _summary(traj: ConcurrenceTrajectory) -> dict:
    c = traj.concurrence
    return {"source": traj.source.value, "samples": len(c),
            "min": float(c.min()), "max": float(c.max()), "mean": float(c.mean())}


def cmd_compare(args) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    if len(engines) < 2 or len(set(engines)) != len(engines):
        print("usage error: --engines needs at least two distinct engines", file=sys.stderr)
        return EXIT_CONFIG
    bad = [e for e in engines if e not in ENGINES]
    if bad:
        print(f"usage error: unknown engine(s) {', '.join(bad)}", file=sys.stderr)
        return EXIT_CONFIG
    exp = load_config(args.config)
    if args.dump_config:
        sys.stdout.write(exp.dumps())
        return EXIT_OK
    trajs = {e: run_engine(exp, e, args.as_printed_formula) for e in engines}
    pairwise = {f"{a}|{b}": max_deviation(trajs[a], trajs[b]) for a, b in combinations(engines, 2)}
    passed = all(v <= args.tol for v in pairwise.values())
    report = {
        "config_sha256": exp.sha256(),
        "engines": engines,
        "as_printed_formula": bool(args.as_printed_formula),
        "tol": args.tol,
        "per_engine_summary": {e: _summary(t) for e, t in trajs.items()},
        "pairwise_max_deviation": pairwise,
        "passed": passed,
    }
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK if passed else EXIT_COMPARE


def cmd_period(args) -> int:
    exp = load_config(args.config)
    if args.dump_config:
        sys.stdout.write(exp.dumps())
        return EXIT_OK
    h = exp.hamiltonian
    if h.josephson is not None:
        fs = josephson_freqs(h.josephson)
    elif h.exchange is not None:
        fs = exchange_coupling_freqs(h.exchange)
    else:
        raise CapabilityError("no frequency set defined for this Hamiltonian")
    verdict = classify(fs, args.max_denominator, args.tol)
    verified = None
    if verdict.kind is PeriodKind.PERIODIC:
        verified = verify_period(h.coeffs, exp.psi0, verdict.period, samples=200, tol=1e-7)
    out = verdict.as_dict()
    out.update({
        "frequencies": list(fs.freqs),
        "frequency_source": fs.source.value,
        "verified": verified,
        "config_sha256": exp.sha256(),
    })
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    result = run_suite(args.suite, args.seed)
    print(json.dumps(result, indent=2, sort_keys=True))
    return EXIT_OK if result["passed"] else EXIT_COMPARE


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="entdyn", description="Two-qubit entanglement dynamics")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="experiment JSON file")
        p.add_argument("--dump-config", action="store_true",
                       help="print the canonical config and exit")

    p = sub.add_parser("simulate", help="write a concurrence trajectory as CSV")
    common(p)
    p.add_argument("--engine", choices=ENGINES, default="super")
    p.add_argument("--out", help="output CSV (stdout if omitted)")
    p.add_argument("--as-printed-formula", action="store_true",
                   help="closed engine: use the verbatim published formulas")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("compare", help="pairwise deviation between engines")
    common(p)
    p.add_argument("--engines", default="super,oracle", help="comma-separated, e.g. super,oracle,closed")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", help="output JSON (stdout if omitted)")
    p.add_argument("--as-printed-formula", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("period", help="periodicity verdict for Josephson/exchange presets")
    common(p)
    p.add_argument("--max-denominator", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="run a seeded invariant ensemble")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
