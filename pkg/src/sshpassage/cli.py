"""Command-line front end.

    sshpassage list
    sshpassage <experiment> [--config FILE] [--set section.key=value ...]
                            [--out DIR]

Outputs one CSV (plus JSON metadata sidecar, and optionally JSON/SVG)
per result table. Exit codes: 0 success, 2 configuration error,
1 runtime failure (partial outputs are left in place).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .experiments import (ConfigError, EXPERIMENT_NOTES, EXPERIMENTS,
                          load_config, run_experiment)
from .output import (write_csv, write_heatmap_svg, write_json,
                     write_line_svg, write_metadata)

OUTDIR_ENV = "SSHPASSAGE_OUTDIR"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sshpassage",
        description="giant-atom / double-SSH-chain adiabatic transfer "
                    "experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="enumerate experiments")
    for name in EXPERIMENTS:
        p = sub.add_parser(name, help=EXPERIMENT_NOTES[name])
        p.add_argument("--config", type=Path, default=None,
                       help="INI config file (sections: system, scenario, "
                            "schedule, grids, disorder, output, experiment)")
        p.add_argument("--set", dest="overrides", action="append",
                       default=[], metavar="SECTION.KEY=VALUE",
                       help="override one config value (repeatable)")
        p.add_argument("--out", type=Path, default=None,
                       help=f"output directory (default: ${OUTDIR_ENV} "
                            f"or config [output] directory or '.')")
    return parser


def _emit(table, plot_hint, out_dir: Path, formats: list[str]) -> list[Path]:
    written = []
    base = out_dir / table.name
    if "csv" in formats:
        write_csv(table, base.with_suffix(".csv"))
        write_metadata(table, Path(str(base) + ".meta.json"))
        written += [base.with_suffix(".csv"), Path(str(base) + ".meta.json")]
    if "json" in formats:
        write_json(table, base.with_suffix(".json"))
        written.append(base.with_suffix(".json"))
    if "svg" in formats:
        kind, x, ys, group = plot_hint
        svg = base.with_suffix(".svg")
        if kind == "heatmap":
            write_heatmap_svg(table, x, ys, svg, title=table.name)
        else:
            write_line_svg(table, x, ys, svg, title=table.name,
                           group_by=group)
        written.append(svg)
    return written


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "list":
        for name in EXPERIMENTS:
            print(f"{name:24s} {EXPERIMENT_NOTES[name]}")
        return 0

    try:
        cfg = load_config(args.config, args.overrides)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    out_dir = (args.out
               or (Path(os.environ[OUTDIR_ENV])
                   if os.environ.get(OUTDIR_ENV) else None)
               or Path(cfg["output"]["directory"] or "."))
    formats = [f.strip() for f in cfg["output"]["formats"].split(",")
               if f.strip()]
    unknown = set(formats) - {"csv", "json", "svg"}
    if unknown:
        print(f"config error: unknown output formats {sorted(unknown)}",
              file=sys.stderr)
        return 2

    try:
        results = run_experiment(args.command, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # partial outputs (if any) are preserved
        print(f"experiment failed: {exc}", file=sys.stderr)
        return 1

    out_dir.mkdir(parents=True, exist_ok=True)
    for table, plot_hint in results:
        for path in _emit(table, plot_hint, out_dir, formats):
            print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
