"""``bench`` command line: run grids, rank results, list problems, export traces.

Exit codes: 0 on success, 2 on invalid input, 3 when at least one cell failed.
"""

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

import yaml

from ..exceptions import ConfigurationError
from ..problems import list_problems
from .harness import (
    ExperimentConfig,
    format_rank_table,
    load_records,
    rank_table,
    run_experiment,
    write_rank_csv,
)

EXIT_OK, EXIT_INVALID, EXIT_FAILED_CELL = 0, 2, 3


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        data = yaml.safe_load(fh)
    if not isinstance(data, dict):
        raise ConfigurationError("the configuration must be a mapping")
    return ExperimentConfig.from_dict(data)


def _resolve_seed(config, cli_seed):
    env = os.environ.get("GPSAF_SEED")
    if env is not None:
        try:
            config.base_seed = int(env)
        except ValueError:
            raise ConfigurationError(f"GPSAF_SEED must be an integer, got {env!r}") from None
    if cli_seed is not None:
        config.base_seed = cli_seed


def cmd_run(args):
    config = load_config(args.config)
    _resolve_seed(config, args.seed)
    config.validate()
    records = run_experiment(config, args.out, jobs=args.jobs)
    failed = [r for r in records if r["error"]]
    print(format_rank_table(rank_table(records)), end="")
    for r in failed:
        print(f"failed: {r['problem']} {r['algorithm']} seed={r['seed']}: {r['error']}",
              file=sys.stderr)
    return EXIT_FAILED_CELL if failed else EXIT_OK


def cmd_rank(args):
    path = Path(args.input)
    if path.is_dir():
        path = path / "runs.jsonl"
    if not path.exists():
        raise ConfigurationError(f"no run records at {path}")
    rows = rank_table(load_records(path))
    write_rank_csv(rows, args.out)
    print(format_rank_table(rows), end="")
    return EXIT_OK


def cmd_list_problems(args):
    for name in list_problems():
        print(name)
    return EXIT_OK


def cmd_trace(args):
    path = Path(args.run)
    if not path.exists():
        raise ConfigurationError(f"no run records at {path}")
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["problem", "algorithm", "seed", "evaluation", "best"])
        for r in load_records(path):
            for i, v in enumerate(r["trace"], start=1):
                w.writerow([r["problem"], r["algorithm"], r["seed"], i, "%.12g" % v])
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="bench", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run an experiment grid")
    p.add_argument("--config", required=True, help="YAML experiment description")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="base seed (overrides GPSAF_SEED)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("rank", help="rank table from stored run records")
    p.add_argument("--in", dest="input", required=True, help="run directory or runs.jsonl")
    p.add_argument("--out", required=True, help="CSV file to write")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("list-problems", help="print the registered problem names")
    p.set_defaults(func=cmd_list_problems)

    p = sub.add_parser("trace", help="best-so-far value per evaluation as CSV")
    p.add_argument("--run", required=True, help="runs.jsonl file")
    p.add_argument("--out", default=None, help="CSV file (default: stdout)")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (ConfigurationError, OSError, yaml.YAMLError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
