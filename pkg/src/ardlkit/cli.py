"""Command-line interface.

One verb per pipeline stage plus `report` for the full flow. Every verb
accepts --config (or the ARDLKIT_CONFIG environment variable) and an
optional --data override. Exit codes: 0 success, 1 configuration error,
2 data error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from .exceptions import ConfigError, DataError, NumericalError
from .pipeline import FORMATS, STAGES, default_config, load_config, render_report, run_pipeline

CONFIG_ENV_VAR = "ARDLKIT_CONFIG"

_VERB_STAGES = {
    "summary": ("summary",),
    "unitroot": ("unit_root",),
    "bounds": ("bounds",),
    "fit": ("bounds", "ardl"),
    "robust": ("robustness",),
    "diagnose": ("diagnostics",),
    "granger": ("granger",),
    "report": STAGES,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ardlkit",
        description="ARDL bounds-testing pipeline: descriptives, unit roots, "
        "cointegration, error correction, robustness, diagnostics, causality.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, stages in _VERB_STAGES.items():
        p = sub.add_parser(verb, help=f"run the {' + '.join(stages)} stage(s)")
        p.add_argument(
            "--config",
            default=None,
            help=f"YAML config path (default: ${CONFIG_ENV_VAR} if set)",
        )
        p.add_argument("--data", default=None, help="CSV data path (overrides config)")
        p.add_argument("--format", default=None, choices=FORMATS, help="output format")
        p.add_argument("--seed", type=int, default=None, help="seed recorded in metadata")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
    return parser


def _resolve_config(args: argparse.Namespace):
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if config_path:
        config = load_config(config_path)
    elif args.data:
        config = default_config(args.data)
    else:
        raise ConfigError(
            "no configuration: pass --config, set "
            f"${CONFIG_ENV_VAR}, or pass --data to use the default model"
        )
    if args.data:
        config = replace(config, data_path=args.data)
    stages = _VERB_STAGES[args.verb]
    if args.verb != "report":
        config = replace(config, stages=stages)
    if args.format:
        config = replace(config, output_format=args.format)
    config.validate()
    return config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _resolve_config(args)
        report = run_pipeline(config, seed=args.seed)
        text = render_report(report, config.output_format)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
