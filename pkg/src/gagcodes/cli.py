"""Command-line front door: analyze / build / verify a construction config.

Exit codes are a stable contract:
  0  success (verify: all bounds sound)
  1  config or input error
  2  order-domain condition failure (witnesses in the report)
  3  bound violation against the oracle
  4  resource cap exceeded
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .codes import matrix_file_text
from .config import load_config
from .distoracle import DEFAULT_CAP
from .errors import ConfigError, ResourceCapError
from .pipeline import OrderDomainFailure, analyze, build, report_text, verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ORDER_DOMAIN = 2
EXIT_BOUND_VIOLATION = 3
EXIT_RESOURCE = 4


def _emit(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(report_text(report), end="")


def _write_atomic(path, text):
    """Write via a temp file in the target directory; never leave partials."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gagcodes.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a pre-subcommand --json from being clobbered by the
    # subparser's default when it copies its namespace over the root's
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit the machine-readable report",
    )
    parser = argparse.ArgumentParser(
        prog="gagcodes",
        description="construct evaluation codes over small finite fields and "
        "verify their distance bounds",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_analyze = sub.add_parser(
        "analyze", parents=[common],
        help="footprints, order-domain diagnosis, semigroup, sigma table",
    )
    p_analyze.add_argument("config")
    p_build = sub.add_parser(
        "build", parents=[common], help="construct the code and write its matrix"
    )
    p_build.add_argument("config")
    p_build.add_argument(
        "-o", "--output", help="matrix file path (falls back to output.matrix)"
    )
    p_verify = sub.add_parser(
        "verify", parents=[common], help="build, run the distance oracle, check bounds"
    )
    p_verify.add_argument("config")
    p_verify.add_argument(
        "--max-enum", type=int, default=DEFAULT_CAP,
        help=f"message-enumeration cap (default {DEFAULT_CAP})",
    )
    p_verify.add_argument(
        "--workers", type=int, default=1, help="oracle scan partitions"
    )
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        cfg = load_config(args.config)
        if args.command == "analyze":
            result = analyze(cfg)
            _emit(result.report, as_json)
            return EXIT_OK
        if args.command == "build":
            result = build(cfg)
            out_path = args.output or cfg.output.matrix
            if out_path is None:
                raise ConfigError(
                    "no matrix output path: pass -o or set output.matrix"
                )
            _write_atomic(out_path, matrix_file_text(result.code))
            _emit(result.report, as_json)
            return EXIT_OK
        result = verify(cfg, max_enum=args.max_enum, workers=args.workers)
        _emit(result.report, as_json)
        if not result.report["bound_checks"]["all_ok"]:
            return EXIT_BOUND_VIOLATION
        return EXIT_OK
    except OrderDomainFailure as exc:
        _emit(exc.report, as_json)
        return EXIT_ORDER_DOMAIN
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
