"""Command-line runner: one experiment per invocation, one JSON report on stdout.

Exit codes: 0 pass, 1 threshold or oracle failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from itertools import zip_longest

import numpy as np

from rmtlab.errors import ValidationError
from rmtlab.experiments import REGISTRY, list_experiments, run

SEED_ENV = "RMTLAB_SEED"
PARAM_FLAGS = ("n", "m", "k", "q", "steps", "samples")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmtlab",
        description="Run a named random-matrix / last-passage experiment and print a JSON report.",
    )
    parser.add_argument("experiment", help="experiment name, or 'list' to print the catalog")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--q", type=float)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--seed", type=int, help=f"master seed (default: ${SEED_ENV} or 0)")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--threshold", type=float, help="override the experiment's pass threshold")
    parser.add_argument("--emit-samples", metavar="PATH", help="write raw samples as CSV")
    parser.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    return parser


def _seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValidationError(f"${SEED_ENV} is not an integer: {env!r}") from None


def write_samples(path: str, samples: dict[str, np.ndarray]) -> None:
    names = list(samples)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(names)
        for row in zip_longest(*(np.asarray(samples[k]).ravel() for k in names), fillvalue=""):
            writer.writerow([repr(float(v)) if v != "" else "" for v in row])


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.experiment == "list":
        print(json.dumps(list_experiments(), indent=2))
        return 0
    params = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k) is not None}
    try:
        if args.experiment not in REGISTRY:
            raise ValidationError(f"unknown experiment {args.experiment!r}; try 'rmtlab list'")
        report, samples = run(args.experiment, params, seed=_seed(args.seed), workers=args.workers,
                              threshold=args.threshold)
    except ValidationError as exc:
        print(f"rmtlab: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.emit_samples:
        write_samples(args.emit_samples, samples)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
