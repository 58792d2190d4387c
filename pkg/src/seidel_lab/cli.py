"""Command line front end: ``seidel-lab {spectrum,verify,table1,gen,oddpairs}``."""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import bounds
from .errors import SeidelLabError
from .graph import TreeFamily, format_edge_list, make_family, read_edge_list
from .odd import count_odd_pairs, lambda_graph
from .spectral import DEFAULT_TOL, seidel_spectrum
from .trees import FREE_MAX_N, enumerate_free_trees

COMMANDS = ("spectrum", "verify", "table1", "gen", "oddpairs")
TABLE1_FIELDS = ("n", "mode", "mean", "exact_numerator", "denominator", "samples",
                 "std_error", "seed", "rng", "reference", "abs_error", "passed")
EXACT_REL_TOL = 1e-12
MC_ABS_TOL = 0.005


@dataclass
class RunConfig:
    command: str
    n_range: tuple = (4, 10)
    checks: tuple = bounds.CHECKS
    mode: str = "exact"
    samples: int = 1_000_000
    seed: int = 0
    tol: float = DEFAULT_TOL
    output_format: str = "csv"
    output_path: str | None = None
    input_path: str | None = None
    jobs: int = 1
    family: dict = field(default_factory=dict)


# -- formatting ---------------------------------------------------------------

def fmt_float(x) -> str:
    return format(x, ".17g")


def to_json(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return fmt_float(v) if math.isfinite(v) else ""
    return str(v)


class RowWriter:
    """Streams rows as CSV or as a JSON array, one row at a time."""

    def __init__(self, out, fields, fmt):
        self.out, self.fields, self.fmt = out, fields, fmt
        self.count = 0
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(fields)
        else:
            out.write("[")

    def write(self, row):
        if self.fmt == "csv":
            self._csv.writerow([_csv_cell(row.get(f)) for f in self.fields])
        else:
            sep = "\n" if self.count == 0 else ",\n"
            self.out.write(sep + to_json({f: row.get(f) for f in self.fields}))
        self.count += 1

    def close(self):
        if self.fmt == "json":
            self.out.write("\n]\n" if self.count else "]\n")


# -- commands -----------------------------------------------------------------

def _verify_one(args):
    T, checks = args
    return bounds.verify_tree(T, checks)


def cmd_verify(cfg: RunConfig, out, err) -> int:
    lo, hi = cfg.n_range
    if lo < 2 or hi > FREE_MAX_N or lo > hi:
        raise UsageError(f"verify needs 2 <= A <= B <= {FREE_MAX_N}")
    writer = RowWriter(out, bounds.ROW_FIELDS, cfg.output_format)
    failures = 0
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        for n in range(lo, hi + 1):
            work = [(T, cfg.checks) for T in enumerate_free_trees(n)]
            rows = list(pool.map(_verify_one, work, chunksize=8)) if pool else \
                [_verify_one(w) for w in work]
            for row in sorted(rows, key=lambda r: r["code"]):
                writer.write(row)
                if not row["passed"]:
                    failures += 1
                    print(f"FAILED n={row['n']} tree {row['code']}", file=err)
    finally:
        if pool:
            pool.shutdown()
    writer.close()
    return 1 if failures else 0


def table1_row(res: bounds.AverageDResult) -> dict:
    row = asdict(res)
    ref = bounds.REFERENCE_AVERAGE_D.get(res.n)
    row["reference"] = ref
    if ref is None:
        row["abs_error"] = None
        row["passed"] = True
        return row
    row["abs_error"] = abs(res.mean - ref)
    if res.mode == "exact":
        row["passed"] = row["abs_error"] <= EXACT_REL_TOL * abs(ref)
    else:
        row["passed"] = row["abs_error"] <= max(MC_ABS_TOL, 5 * res.std_error)
    return row


def cmd_table1(cfg: RunConfig, out, err) -> int:
    lo, hi = cfg.n_range
    if lo < 2 or lo > hi:
        raise UsageError("table1 needs 2 <= A <= B")
    if cfg.mode == "exact" and hi > bounds.EXACT_MAX_N:
        raise UsageError(f"exact mode is limited to n <= {bounds.EXACT_MAX_N}; use --mode mc")
    writer = RowWriter(out, TABLE1_FIELDS, cfg.output_format)
    failures = 0
    for n in range(lo, hi + 1):
        if cfg.mode == "exact":
            res = bounds.average_D_exact(n)
        else:
            res = bounds.average_D_monte_carlo(n, cfg.samples, cfg.seed)
        row = table1_row(res)
        writer.write(row)
        if not row["passed"]:
            failures += 1
            print(f"FAILED n={n}: mean {fmt_float(res.mean)} vs {row['reference']}", file=err)
    writer.close()
    return 1 if failures else 0


def cmd_spectrum(cfg: RunConfig, out, err) -> int:
    G = read_edge_list(_need_input(cfg))
    spec = seidel_spectrum(G, cfg.tol)
    out.write(to_json({"n": G.n, "eigenvalues": list(spec.eigenvalues),
                       "energy": spec.energy, "tol": cfg.tol}) + "\n")
    return 0


def cmd_oddpairs(cfg: RunConfig, out, err) -> int:
    G = read_edge_list(_need_input(cfg))
    L = lambda_graph(G)
    out.write(to_json({"n": G.n, "nop": count_odd_pairs(G),
                       "lambda_edges": [list(e) for e in L.sorted_edges()],
                       "lambda_degrees": L.degrees()}) + "\n")
    return 0


def cmd_gen(cfg: RunConfig, out, err) -> int:
    G = make_family(TreeFamily(**cfg.family))
    out.write(format_edge_list(G))
    return 0


HANDLERS = {"spectrum": cmd_spectrum, "verify": cmd_verify, "table1": cmd_table1,
            "gen": cmd_gen, "oddpairs": cmd_oddpairs}


class UsageError(Exception):
    pass


def _need_input(cfg):
    if not cfg.input_path:
        raise UsageError("--input FILE is required")
    return cfg.input_path


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one command; returns 0 iff every emitted check passed."""
    out = out or sys.stdout
    err = err or sys.stderr
    if cfg.command not in HANDLERS:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="", encoding="utf-8") as fh:
            return HANDLERS[cfg.command](cfg, fh, err)
    return HANDLERS[cfg.command](cfg, out, err)


# -- argument parsing ---------------------------------------------------------

def parse_range(text: str) -> tuple:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seidel-lab",
                                description="Seidel energy of trees: spectra, odd pairs, bound sweeps.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_output(sp, default_fmt="csv"):
        sp.add_argument("--format", dest="output_format", choices=("csv", "json"),
                        default=default_fmt)
        sp.add_argument("--output", dest="output_path")

    sp = sub.add_parser("spectrum", help="Seidel spectrum and energy of an edge-list graph")
    sp.add_argument("--input", dest="input_path", required=True)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--output", dest="output_path")

    sp = sub.add_parser("verify", help="check bounds and lemmas over all free trees")
    sp.add_argument("--n", dest="n_range", type=parse_range, default=(4, 10))
    sp.add_argument("--checks", default=",".join(bounds.CHECKS))
    sp.add_argument("--jobs", type=int, default=int(os.environ.get("SEIDEL_LAB_JOBS", "1")))
    add_output(sp)

    sp = sub.add_parser("table1", help="mean of D(T) over uniform labelled trees")
    sp.add_argument("--n", dest="n_range", type=parse_range, default=(6, 9))
    sp.add_argument("--mode", choices=("exact", "mc"), default="exact")
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    add_output(sp)

    sp = sub.add_parser("gen", help="emit a named family as an edge list")
    sp.add_argument("--family", required=True,
                    choices=("path", "star", "cycle", "complete", "type1", "type2"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--output", dest="output_path")

    sp = sub.add_parser("oddpairs", help="N_op, Lambda(G) edges and lambda degrees")
    sp.add_argument("--input", dest="input_path", required=True)
    sp.add_argument("--output", dest="output_path")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for name in ("n_range", "mode", "samples", "seed", "tol", "output_format",
                 "output_path", "input_path", "jobs"):
        if getattr(ns, name, None) is not None:
            setattr(cfg, name, getattr(ns, name))
    if ns.command == "spectrum" or ns.command == "oddpairs":
        cfg.output_format = "json"
    if getattr(ns, "checks", None):
        checks = tuple(c.strip() for c in ns.checks.split(",") if c.strip())
        unknown = set(checks) - set(bounds.CHECKS)
        if unknown:
            raise UsageError(f"unknown checks {sorted(unknown)}; choose from {','.join(bounds.CHECKS)}")
        cfg.checks = checks
    if ns.command == "gen":
        cfg.family = {"tag": ns.family, "n": ns.n, "a": ns.a, "b": ns.b}
    if cfg.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except (UsageError, SeidelLabError, ValueError, OSError) as exc:
        print(f"seidel-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
