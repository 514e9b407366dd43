import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from lrbspectra import __version__
from lrbspectra.commands import COMMANDS, RECORDED
from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_INPUT, InputError, LRBError
from lrbspectra.core.log import configure_logging
from lrbspectra.services.ledger_service import record_report
from lrbspectra.utils.table_io import write_output

logger = logging.getLogger("lrbspectra")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--cap", type=int, default=None, help="element cap for closures and families")
    common.add_argument("--ledger", default=None, help="SQLAlchemy URL of the report ledger")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="lrbspectra",
        description="Exact spectra of weighted elements of left regular band algebras",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS.values():
        module.add_parser(subparsers, [common])
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = RunConfig.from_args(args)
        configure_logging(config.log_level)
        text, code = COMMANDS[config.command].run(config, args)
    except (InputError, ValidationError, json.JSONDecodeError, OSError, ValueError) as e:
        logger.error("input error: %s", e)
        return EXIT_INPUT
    except LRBError as e:
        logger.error("%s", e)
        return EXIT_DOMAIN

    write_output(text, config.out)

    if config.ledger_url and config.command in RECORDED:
        try:
            record_report(config.ledger_url, config.command, config.inputs, text, code)
        except Exception as e:
            logger.error("ledger write failed: %s", e)
    return code


if __name__ == "__main__":
    sys.exit(main())
