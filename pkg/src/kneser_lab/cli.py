"""Command-line front end.

Subcommands map one-to-one onto the library surface: quantities, sample,
alpha, ystat, sweep, extremal, verify.  All outputs are JSON (sweep can
additionally write CSV); seeds are always explicit arguments and the
KNESER_LAB_THREADS environment variable overrides --threads.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import experiments, extremal, model, solver
from .core import Params, derive, expected_trivial_plus_one


def _emit(payload, out: Optional[str]) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params_from(args) -> Params:
    return Params(n=args.n, k=args.k, r=args.r)


def _resolve_threads(cli_threads: int) -> int:
    env = os.environ.get("KNESER_LAB_THREADS")
    if env:
        return int(env)
    return cli_threads


def _cmd_quantities(args) -> int:
    params = _params_from(args)
    payload = derive(params).to_json_dict()
    if args.p is not None:
        if not 0.0 <= args.p <= 1.0:
            raise ValueError(f"--p must be in [0,1], got {args.p}")
        payload["p"] = args.p
        payload["expected_Y"] = expected_trivial_plus_one(params, args.p)
        pc = payload["p_critical"]
        payload["p_over_pc"] = None if pc is None else args.p / pc
    _emit(payload, args.out)
    return 0


def _cmd_sample(args) -> int:
    params = _params_from(args)
    kind = args.sampler.replace("-", "_")
    sample = model.make_sample(params, args.p, args.seed, kind)
    text = sample.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _read_sample(path: str) -> model.SampledHypergraph:
    with open(path) as fh:
        return model.SampledHypergraph.from_json(fh.read())


def _cmd_alpha(args) -> int:
    sample = _read_sample(args.infile)
    res = solver.max_independent_set(sample, budget=args.budget)
    _emit(res.to_json_dict(), args.out)
    return 0


def _cmd_ystat(args) -> int:
    sample = _read_sample(args.infile)
    count, witness = experiments._y_count_and_witness(sample)
    params = sample.params
    from .core import binomial, star_union_size

    payload = {
        "y": count,
        "pairs_total": binomial(params.n, params.r - 1)
        * binomial(params.n - params.r + 1, params.k),
        "trivial_size": star_union_size(params),
    }
    if witness is not None:
        centers, extra = witness
        payload["first_witness"] = {"centers": list(centers), "extra_rank": extra}
    else:
        payload["first_witness"] = None
    _emit(payload, args.out)
    return 0


def _cmd_sweep(args) -> int:
    with open(args.config) as fh:
        config = experiments.SweepConfig.from_json_dict(json.load(fh))
    threads = _resolve_threads(args.threads)
    result = experiments.threshold_sweep(config, threads=threads)
    _emit(result.to_json_dict(), args.out)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(result.to_csv())
    return 0


def _cmd_extremal(args) -> int:
    report = extremal.verify_lex_minimality(
        args.n, args.k, args.r, args.s,
        exhaustive_budget=args.budget,
        sampled_families=args.samples,
        seed=args.seed,
    )
    _emit(report.to_json_dict(), args.out)
    return 0


def _cmd_verify(args) -> int:
    report = experiments.verify_suite(fast=args.fast, seed=args.seed)
    _emit(report, args.out)
    return 0 if report["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="kneser-lab",
        description="Random Kneser hypergraph laboratory: exact quantities, "
                    "sampling, independence solving, threshold sweeps.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_nkr(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--r", type=int, required=True)

    def add_out(p):
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("quantities", help="closed-form quantities for (n,k,r)")
    add_nkr(p)
    p.add_argument("--p", type=float, default=None,
                   help="also report expected Y at this retention probability")
    add_out(p)
    p.set_defaults(fn=_cmd_quantities)

    p = sub.add_parser("sample", help="sample a random subhypergraph")
    add_nkr(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--sampler", choices=["explicit", "by-count", "by_count"],
                   default="explicit")
    add_out(p)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("alpha", help="exact independence number of a stored sample")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=solver.DEFAULT_NODE_BUDGET)
    add_out(p)
    p.set_defaults(fn=_cmd_alpha)

    p = sub.add_parser("ystat", help="count independent star-union-plus-one pairs")
    p.add_argument("--in", dest="infile", required=True)
    add_out(p)
    p.set_defaults(fn=_cmd_ystat)

    p = sub.add_parser("sweep", help="threshold sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--threads", type=int, default=1)
    add_out(p)
    p.add_argument("--csv", default=None, help="also write rows as CSV here")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("extremal", help="lex-minimality report for (n,k,r,s)")
    add_nkr(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--budget", type=int, default=extremal.EXHAUSTIVE_FAMILY_BUDGET)
    p.add_argument("--samples", type=int, default=extremal.DEFAULT_SAMPLED_FAMILIES)
    p.add_argument("--seed", type=int, default=0)
    add_out(p)
    p.set_defaults(fn=_cmd_extremal)

    p = sub.add_parser("verify", help="run the oracle cross-check battery")
    p.add_argument("--fast", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    add_out(p)
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
