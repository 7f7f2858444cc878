"""Command line entry point.

    boolgrain <kind> --config cfg.json --out dir [--threads N] [--seed S]

Exit codes: 0 all checks passed, 1 a statistical check failed, 2 bad
configuration.
"""
from __future__ import annotations

import argparse
import sys

from .field import SimulationConfigError
from .grains import GrainConfigError
from .harness import KINDS, ConfigError, load_config, run_experiment


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="boolgrain",
                                 description="Boolean-model limit-theorem experiments")
    ap.add_argument("kind", choices=KINDS, help="experiment kind")
    ap.add_argument("--config", required=True, help="JSON experiment description")
    ap.add_argument("--out", required=True, help="output directory")
    ap.add_argument("--threads", type=int, default=1, help="worker processes")
    ap.add_argument("--seed", type=int, default=None, help="override the master seed")
    ap.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, kind=args.kind, seed_override=args.seed)
        table = run_experiment(cfg, args.out, threads=args.threads,
                               figures=not args.no_figures)
    except (ConfigError, GrainConfigError, SimulationConfigError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    for note in table.notes:
        print(note, file=sys.stderr)
    print(f"{cfg.kind}: {'PASS' if table.passed else 'FAIL'} "
          f"({len(table.rows)} replication rows, {len(table.summary)} summary rows)")
    return 0 if table.passed else 1


if __name__ == "__main__":
    sys.exit(main())
