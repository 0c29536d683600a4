"""
Command-line view.

Subcommands:
  all                  run every check, write certificates and MANIFEST
  check <id>           run one check and write its certificate
  list                 print check ids with descriptions
  export-shell <order> print the canonical unit-shell listing of an order

Exit codes: 0 all pass, 1 oracle mismatch, 2 internal inconsistency,
3 usage error.
"""

import argparse
import os
import sys
from typing import Optional, Sequence

from src import __version__
from src.constants.oracle_constants import TOOL_NAME
from src.controllers.certify.checks import CHECKS, CheckOptions
from src.controllers.certify.runner import CertificateRunner, write_certificate
from src.models.certificate import PASS
from src.models.orders.catalog import catalog, catalog_names
from src.models.shells.enumeration import enumerate_unit_shell
from src.models.shells.shell import export_listing
from src.utils.config import WITNESS_LEVELS, Config
from src.utils.errors import GoldenOrdersError, InconsistencyError, UsageError
from src.utils.logger import Logger

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_INCONSISTENCY = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems by exiting; raise instead"""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=TOOL_NAME, description="Exact certificates for golden orders")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    parser.add_argument("--config", default="config.json", help="configuration file")
    parser.add_argument("--out", help="output directory (export-shell: output file)")
    parser.add_argument("--workers", type=int, help="worker threads for enumerations")
    parser.add_argument("--witnesses", choices=WITNESS_LEVELS, help="witness detail in certificates")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    sub.add_parser("all", help="run every check")
    check = sub.add_parser("check", help="run one check")
    check.add_argument("check_id", choices=tuple(CHECKS))
    sub.add_parser("list", help="list check ids")
    export = sub.add_parser("export-shell", help="print an order's unit shell")
    export.add_argument("order", choices=catalog_names())
    return parser


def _apply_overrides(config: Config, args) -> CheckOptions:
    if args.workers is not None:
        config.set("verification", "workers", args.workers, persist=False)
    if args.witnesses is not None:
        config.set("verification", "witnesses", args.witnesses, persist=False)
    if args.out is not None and args.command != "export-shell":
        config.set("paths", "output_directory", args.out, persist=False)
    return CertificateRunner.options_from_config()


def _export_shell(order: str, options: CheckOptions, out: Optional[str]) -> int:
    shell = enumerate_unit_shell(catalog(order), options.workers)
    listing = export_listing(shell)
    if out:
        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w", encoding="ascii", newline="\n") as f:
            f.write(listing)
    else:
        sys.stdout.write(listing)
    return EXIT_PASS


def run(argv: Sequence[str]) -> int:
    """
    Parse arguments and execute a subcommand

    Raises:
        UsageError: bad arguments or configuration
        GoldenOrdersError: failures raised by the library
    """
    logger = Logger.instance()
    args = build_parser().parse_args(list(argv))
    config = Config.instance(args.config)
    logger.set_level("DEBUG" if args.verbose else config.get("logging", "level") or "INFO")
    options = _apply_overrides(config, args)

    if args.command == "list":
        for check_id, (description, _) in CHECKS.items():
            sys.stdout.write(f"{check_id}\t{description}\n")
        return EXIT_PASS
    if args.command == "export-shell":
        return _export_shell(args.order, options, args.out)

    runner = CertificateRunner(options)
    out_dir = config.get("paths", "output_directory")
    if args.command == "check":
        os.makedirs(out_dir, exist_ok=True)
        cert = runner.run_check(args.check_id)
        write_certificate(cert, out_dir)
        return EXIT_PASS if cert.status == PASS else EXIT_MISMATCH
    manifest = runner.run_all(out_dir)
    return EXIT_PASS if manifest.status == PASS else EXIT_MISMATCH


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; maps exceptions onto exit codes"""
    logger = Logger.instance()
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        logger.error(f"usage: {e}")
        return EXIT_USAGE
    except InconsistencyError as e:
        logger.critical(f"internal inconsistency: {e}")
        return EXIT_INCONSISTENCY
    except GoldenOrdersError as e:
        logger.critical(f"{type(e).__name__}: {e}")
        return EXIT_INCONSISTENCY
