"""Batch command-line front end.

Reads a Cartan matrix (file or preset), runs the engine up to the
requested height, and writes the root table as CSV or JSON lines.  Output
for a fixed configuration is byte-identical across runs; status chatter
goes to stderr so stdout stays parseable.

Exit codes: 0 ok, 2 unusable input or refused oracle check, 3 invalid or
non-symmetrizable Cartan matrix, 4 oracle disagreement, 5 internal
integrality failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .cartan import NotGCM, NotSymmetrizable, build
from .chamber import CapExceeded, hilbert_basis
from .metrics import KillingCounter, counter_snapshot
from .oracle import compare_tables, naive_compute
from .peterson import NonIntegerMultiplicity, compute_all
from .presets import PRESET_NAMES, preset_matrix

ORACLE_MAX_RANK = 3
ORACLE_MAX_HEIGHT = 15

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BAD_MATRIX = 3
EXIT_ORACLE_MISMATCH = 4
EXIT_INTEGRALITY = 5


@dataclass
class RunConfig:
    matrix: list[list[int]]
    cap: int
    fmt: str = "csv"
    out: str | None = None
    emit_hilbert_basis: bool = False
    emit_metrics: bool = False
    oracle_check: bool = False
    force_oracle: bool = False
    workers: int = 1
    quiet: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootmult",
        description="Exact root multiplicities of symmetrizable Kac-Moody "
        "algebras up to a height cap.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix", metavar="FILE",
                        help="JSON file holding a square integer array")
    source.add_argument("--preset", metavar="NAME",
                        help=f"one of: {', '.join(PRESET_NAMES)}")
    parser.add_argument("--height", type=int, required=True, metavar="N",
                        help="height cap (>= 1)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="table format (default csv)")
    parser.add_argument("--out", metavar="FILE",
                        help="write the table here instead of stdout")
    parser.add_argument("--hilbert-basis", action="store_true",
                        help="also emit the chamber Hilbert basis as JSON")
    parser.add_argument("--metrics", action="store_true",
                        help="append the Killing-form counter report as JSON")
    parser.add_argument("--oracle-check", action="store_true",
                        help="cross-check against the naive oracle "
                        f"(d <= {ORACLE_MAX_RANK}, height <= {ORACLE_MAX_HEIGHT})")
    parser.add_argument("--force-oracle", action="store_true",
                        help="run the oracle check beyond its intended bounds")
    parser.add_argument("--workers", type=int, default=1, metavar="N",
                        help="worker threads for the Peterson sums")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress status messages on stderr")
    parser.add_argument("--version", action="version", version=__version__)
    return parser


def load_config(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.height < 1:
        raise ValueError("--height must be >= 1")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    if args.preset is not None:
        try:
            grid = preset_matrix(args.preset)
        except KeyError as e:
            raise ValueError(str(e)) from None
    else:
        try:
            with open(args.matrix, "r", encoding="utf-8") as fh:
                grid = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ValueError(f"cannot read matrix file: {e}") from None
        if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
            raise ValueError("matrix file must hold a nested array")
    return RunConfig(
        matrix=grid,
        cap=args.height,
        fmt=args.format,
        out=args.out,
        emit_hilbert_basis=args.hilbert_basis,
        emit_metrics=args.metrics,
        oracle_check=args.oracle_check,
        force_oracle=args.force_oracle,
        workers=args.workers,
        quiet=args.quiet,
    )


def write_table(rows, fmt: str, stream) -> None:
    if fmt == "csv":
        stream.write("coords,height,norm,c,mult,kind\n")
        for row in rows:
            coords = ";".join(str(x) for x in row["coords"])
            stream.write(
                f"{coords},{row['height']},{row['norm']},{row['c']},"
                f"{row['mult']},{row['kind']}\n"
            )
    else:
        for row in rows:
            out = dict(row, coords=list(row["coords"]))
            stream.write(json.dumps(out, sort_keys=True) + "\n")


def run(config: RunConfig) -> int:
    def status(msg):
        if not config.quiet:
            print(msg, file=sys.stderr)

    try:
        cm = build(config.matrix)
    except (NotGCM, NotSymmetrizable) as e:
        status(f"invalid Cartan matrix: {e}")
        return EXIT_BAD_MATRIX
    except (ValueError, TypeError) as e:
        status(f"unusable matrix data: {e}")
        return EXIT_INPUT

    if config.oracle_check and not config.force_oracle:
        if cm.d > ORACLE_MAX_RANK or config.cap > ORACLE_MAX_HEIGHT:
            status(
                "oracle check refused: naive cost is prohibitive at "
                f"d={cm.d}, height={config.cap} (use --force-oracle)"
            )
            return EXIT_INPUT

    try:
        table = compute_all(cm, config.cap, KillingCounter(), workers=config.workers)
    except NonIntegerMultiplicity as e:
        status(f"internal integrality failure: {e}")
        return EXIT_INTEGRALITY
    except CapExceeded as e:
        status(f"hilbert basis out of bounds: {e}")
        return 1

    stream = open(config.out, "w", encoding="utf-8") if config.out else sys.stdout
    try:
        if config.emit_hilbert_basis:
            hb = hilbert_basis(cm)
            stream.write(
                json.dumps([list(g) for g in hb.generators]) + "\n"
            )
        write_table(table.export_rows(), config.fmt, stream)

        exit_code = EXIT_OK
        if config.oracle_check:
            try:
                oracle = naive_compute(cm, config.cap)
            except NonIntegerMultiplicity as e:
                status(f"internal integrality failure in oracle: {e}")
                return EXIT_INTEGRALITY
            mismatches = compare_tables(table, oracle)
            if mismatches:
                status(f"oracle disagreement on {len(mismatches)} point(s):")
                for mm in mismatches[:10]:
                    status(f"  {mm}")
                exit_code = EXIT_ORACLE_MISMATCH
            else:
                status("oracle check: all values agree")

        if config.emit_metrics:
            stream.write(json.dumps(counter_snapshot(table), sort_keys=True) + "\n")
    finally:
        if config.out:
            stream.close()
    return exit_code


def main(argv=None) -> int:
    try:
        config = load_config(argv)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
