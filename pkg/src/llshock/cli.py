"""Command-line front end.

Subcommands: ``dist`` (distribution evaluation and sampling), ``major``
(majorization predicates on JSON vectors/matrices), ``order`` (compare two
system spec files), ``verify`` (randomized sweeps over one statement
family), and ``figure`` (export a benchmark scenario's difference table as
CSV).

Exit codes: 0 on success (relation holds / verification passed), 1 when a
queried relation fails, a verification sweep finds violations, or the Monte
Carlo cross-check disagrees, and 2 on usage or input errors.  Every command
is deterministic given its flags; randomized commands default to the seed
0xC0FFEE (12648430).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .hfunctions import BUILTIN_H_NAMES, builtin_h
from .lindley import LLParams, ll_cdf, ll_pdf, ll_quantile, ll_sample
from .majorization import (
    in_U_n,
    in_V_n,
    is_doubly_stochastic,
    majorizes,
    row_majorizes,
    row_weakly_majorizes,
    weakly_submajorizes,
    weakly_supermajorizes,
)
from .ordering import compare_st, compare_st_mc, make_grid, verdicts_agree
from .shock import SystemSpec, parallel_cdf
from .theorems import (
    DEFAULT_SEED,
    SCENARIO_IDS,
    THEOREM_IDS,
    scenario_diff_table,
    verify_theorem,
)

MIN_GRID = 16

_MAJOR_KINDS = {
    "majorize": (majorizes, 2),
    "weak-super": (weakly_supermajorizes, 2),
    "weak-sub": (weakly_submajorizes, 2),
    "row": (row_majorizes, 2),
    "row-weak": (row_weakly_majorizes, 2),
    "dstoch": (is_doubly_stochastic, 1),
    "un": (in_U_n, 1),
    "vn": (in_V_n, 1),
}


@dataclass(frozen=True)
class RunConfig:
    """Validated run settings shared by the randomized/grid-based commands."""

    command: str
    seed: int = DEFAULT_SEED
    grid_size: int = 4096
    tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        if self.grid_size < MIN_GRID:
            raise ValueError(f"grid size must be at least {MIN_GRID}")
        if not self.tol > 0.0:
            raise ValueError("tolerance must be positive")


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        seed=getattr(args, "seed", DEFAULT_SEED),
        grid_size=getattr(args, "grid", 4096),
        tol=getattr(args, "tol", 1e-9),
    )


def _emit(obj) -> None:
    print(json.dumps(obj))


def _write_table(path: str, xs, diffs) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,diff\n")
        for x, d in zip(xs, diffs):
            fh.write(f"{float(x)!r},{float(d)!r}\n")


def _cmd_dist(args: argparse.Namespace) -> int:
    params = LLParams(args.sigma, args.lam)
    if args.query == "sample":
        if args.values:
            raise ValueError("sample takes --n, not positional values")
        if args.n is None:
            raise ValueError("sample needs --n")
        cfg = _config(args)
        draws = ll_sample(params, np.random.default_rng(cfg.seed), args.n)
        for idx, val in enumerate(draws):
            _emit({"op": "sample", "index": idx, "value": float(val)})
        return 0
    if not args.values:
        raise ValueError(f"{args.query} needs at least one argument")
    fn = {"pdf": ll_pdf, "cdf": ll_cdf, "quantile": ll_quantile}[args.query]
    key = "q" if args.query == "quantile" else "x"
    for val in args.values:
        _emit({"op": args.query, key: val, "value": float(fn(params, val))})
    return 0


def _parse_json_array(text: str) -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON input: {exc}") from exc
    arr = np.asarray(data, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("inputs must be finite numbers")
    return arr


def _cmd_major(args: argparse.Namespace) -> int:
    fn, arity = _MAJOR_KINDS[args.kind]
    first = _parse_json_array(args.a)
    if arity == 2:
        if args.b is None:
            raise ValueError(f"{args.kind} needs two inputs")
        verdict = fn(first, _parse_json_array(args.b))
        holds, witness = verdict.holds, verdict.witness
    else:
        if args.b is not None:
            raise ValueError(f"{args.kind} takes a single input")
        holds, witness = bool(fn(first)), None
    _emit({"holds": holds, "witness": list(witness) if isinstance(witness, tuple) else witness})
    return 0 if holds else 1


def _load_system(path: str) -> SystemSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return SystemSpec.from_json(json.load(fh))


def _cmd_order(args: argparse.Namespace) -> int:
    cfg = _config(args)
    sys_x = _load_system(args.spec_x)
    sys_y = _load_system(args.spec_y)
    grid = make_grid(cfg.grid_size)
    verdict = compare_st(sys_x, sys_y, grid, cfg.tol)
    out = verdict.to_json()
    agrees = True
    if args.mc is not None:
        mc_verdict = compare_st_mc(sys_x, sys_y, args.mc, cfg.seed, grid)
        agrees = verdicts_agree(verdict, mc_verdict)
        out["mc"] = mc_verdict.to_json()
        out["mc_agrees"] = agrees
    if args.csv:
        diff = parallel_cdf(sys_x, grid.points) - parallel_cdf(sys_y, grid.points)
        _write_table(args.csv, grid.points, diff)
    _emit(out)
    return 0 if agrees else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    dims = tuple(int(d) for d in args.dims.split(","))
    report = verify_theorem(
        args.theorem,
        builtin_h(args.h),
        n_range=dims,
        instances=args.instances,
        grid=make_grid(cfg.grid_size),
        tol=cfg.tol,
        seed=cfg.seed,
        branch=args.branch,
    )
    _emit(report.to_json())
    return 0 if report.passed else 1


def _cmd_figure(args: argparse.Namespace) -> int:
    cfg = _config(args)
    xs, diffs = scenario_diff_table(args.id, make_grid(cfg.grid_size))
    _write_table(args.out, xs, diffs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="llshock",
        description="Log-Lindley shocked parallel systems: distributions, "
        "majorization checks, stochastic-order comparison, randomized "
        "verification sweeps, and benchmark figure data.",
        epilog=f"Randomized commands default to --seed {DEFAULT_SEED} (0xC0FFEE) "
        "so published runs are reproducible.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dist = sub.add_parser("dist", help="evaluate or sample one distribution")
    dist.add_argument("--sigma", type=float, required=True, help="shape parameter (> 0)")
    dist.add_argument("--lambda", dest="lam", type=float, required=True, help="scale parameter (>= 0)")
    dist.add_argument("query", choices=("pdf", "cdf", "quantile", "sample"))
    dist.add_argument("values", type=float, nargs="*", help="evaluation points (not for sample)")
    dist.add_argument("--n", type=int, default=None, help="sample size")
    dist.add_argument("--seed", type=int, default=DEFAULT_SEED)
    dist.set_defaults(handler=_cmd_dist)

    major = sub.add_parser("major", help="run one majorization predicate on JSON inputs")
    major.add_argument("kind", choices=sorted(_MAJOR_KINDS))
    major.add_argument("a", help="first vector/matrix as a JSON array")
    major.add_argument("b", nargs="?", default=None, help="second vector/matrix (two-input kinds)")
    major.set_defaults(handler=_cmd_major)

    order = sub.add_parser("order", help="compare two parallel systems stochastically")
    order.add_argument("spec_x", help="first system spec JSON file")
    order.add_argument("spec_y", help="second system spec JSON file")
    order.add_argument("--grid", type=int, default=4096, help="interior grid points (>= 16)")
    order.add_argument("--tol", type=float, default=1e-9)
    order.add_argument("--csv", default=None, help="also write the (x, diff) table here")
    order.add_argument("--mc", type=int, default=None, help="cross-check with this many Monte Carlo draws")
    order.add_argument("--seed", type=int, default=DEFAULT_SEED)
    order.set_defaults(handler=_cmd_order)

    verify = sub.add_parser("verify", help="randomized sweep over one statement family")
    verify.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    verify.add_argument("--h", choices=BUILTIN_H_NAMES, required=True, help="shock transform")
    verify.add_argument("--instances", "--n", dest="instances", type=int, default=1000)
    verify.add_argument("--dims", default="2,3,4,5,6", help="comma-separated component counts")
    verify.add_argument("--grid", type=int, default=4096)
    verify.add_argument("--tol", type=float, default=1e-9)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--branch", type=int, choices=(1, 2), default=None, help="T3_2 sub-branch")
    verify.set_defaults(handler=_cmd_verify)

    figure = sub.add_parser("figure", help="export a benchmark scenario difference table")
    figure.add_argument("--id", choices=SCENARIO_IDS, required=True)
    figure.add_argument("--out", required=True, help="output CSV path (header: x,diff)")
    figure.add_argument("--grid", type=int, default=4096)
    figure.set_defaults(handler=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
