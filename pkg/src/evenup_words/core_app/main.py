"""
Main entry point for the evenup-words command line.

This module contains the application class, which owns configuration,
logging and the engine manager, and the argument parser for the count,
table, crosscheck and oeis commands.
"""

import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import List, Optional, TextIO

from pydantic import ValidationError

from .. import __version__
from ..shared_libs.oeis import MalformedIdError, OeisError
from ..shared_libs.table_render import OutputFormat
from ..shared_libs.words import BudgetExceededError
from .commands import (
    EXIT_BUDGET,
    EXIT_FETCH,
    EXIT_MISMATCH,
    EXIT_USAGE,
    CommandContext,
    catalan_names,
    cmd_count,
    cmd_crosscheck,
    cmd_oeis,
    cmd_table,
    word_class_names,
)
from .config import ConfigManager
from .engine_manager import CANONICAL_ORDER, EngineManager

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _add_target_arguments(parser: argparse.ArgumentParser, allow_all: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--class",
        dest="word_class",
        choices=word_class_names(),
        help="Restricted word class (requires --k).",
    )
    group.add_argument(
        "--catalan",
        choices=catalan_names() + (["all"] if allow_all else []),
        help="Restricted Catalan word variant.",
    )
    parser.add_argument("--k", type=int, help="Alphabet size for word classes.")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all commands."""
    parser = argparse.ArgumentParser(
        prog="evenup-words",
        description="Exact counts of even-up, odd-up and restricted Catalan words.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="JSON settings file (default: $EVENUP_WORDS_CONFIG).")
    parser.add_argument("--budget", type=int, help="Override the enumeration budget (words).")
    parser.add_argument("--series-order", type=int, help="Override the series truncation order.")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Override logging/level.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser("count", help="Count one target at one length.")
    _add_target_arguments(count)
    count.add_argument("--n", type=int, required=True, help="Word length.")
    count.add_argument("--method", choices=CANONICAL_ORDER, default="gf")
    count.set_defaults(handler=cmd_count)

    table = subparsers.add_parser("table", help="Reproduce a count table.")
    _add_target_arguments(table, allow_all=True)
    table.add_argument("--k-max", type=int, default=6, help="Last alphabet size row.")
    table.add_argument("--n-max", type=int, required=True, help="Last length column.")
    table.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default="markdown"
    )
    table.add_argument("--method", choices=CANONICAL_ORDER, default="gf")
    table.set_defaults(handler=cmd_table)

    crosscheck = subparsers.add_parser("crosscheck", help="Compare all applicable engines.")
    _add_target_arguments(crosscheck)
    crosscheck.add_argument("--n-max", type=int, required=True)
    crosscheck.set_defaults(handler=cmd_crosscheck)

    oeis = subparsers.add_parser("oeis", help="Compare a gf expansion with an OEIS b-file.")
    _add_target_arguments(oeis)
    oeis.add_argument("--id", required=True, help="OEIS A-number, e.g. A001333.")
    oeis.add_argument("--n-max", type=int, default=10)
    oeis.add_argument("--live", action="store_true", help="Allow network downloads.")
    oeis.add_argument("--max-offset", type=int, help="Override oeis/max_offset.")
    oeis.add_argument("--max-skip", type=int, help="Override oeis/max_skip.")
    oeis.set_defaults(handler=cmd_oeis)

    return parser


class EvenUpWordsApp:
    """
    Main application class for evenup-words.

    This class manages the application lifecycle: configuration, logging,
    engine loading, command dispatch and cleanup.
    """

    def __init__(self, out: Optional[TextIO] = None, err: Optional[TextIO] = None):
        """
        Initialize the application.

        Args:
            out: Stream for command output (default: standard output)
            err: Stream for log and error messages (default: standard error)
        """
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.config_manager: Optional[ConfigManager] = None
        self.engine_manager: Optional[EngineManager] = None
        self.logger = logging.getLogger(__name__)
        self._handlers: List[logging.Handler] = []

    def _setup_logging(self, level: str) -> None:
        """Set up application logging on the root logger."""
        root = logging.getLogger()
        for handler in self._handlers:
            root.removeHandler(handler)
        self._handlers = []

        formatter = logging.Formatter(LOG_FORMAT)
        stream_handler = logging.StreamHandler(self.err)
        stream_handler.setFormatter(formatter)
        self._handlers.append(stream_handler)

        config = self.config_manager
        if config is not None and config.get_setting("logging/file_enabled"):
            try:
                file_handler = RotatingFileHandler(
                    config.get_setting("logging/file_path"),
                    maxBytes=config.get_setting("logging/max_file_size"),
                    backupCount=config.get_setting("logging/backup_count"),
                )
                file_handler.setFormatter(formatter)
                self._handlers.append(file_handler)
            except OSError as e:
                self.err.write(f"warning: cannot open log file: {e}\n")

        for handler in self._handlers:
            root.addHandler(handler)
        root.setLevel(getattr(logging, level.upper(), logging.WARNING))
        self.logger.debug("Logging system initialized")

    def initialize(self, args: argparse.Namespace) -> None:
        """
        Initialize configuration, logging and engines from parsed arguments.

        Raises:
            ValueError: If a command-line override is out of range
        """
        self.config_manager = ConfigManager(args.config)
        if args.budget is not None:
            self.config_manager.set_setting("enumeration/budget", args.budget)
        if args.series_order is not None:
            self.config_manager.set_setting("series/order", args.series_order)
        if args.log_level is not None:
            self.config_manager.set_setting("logging/level", args.log_level)

        try:
            settings = self.config_manager.toolkit_settings()
        except ValidationError as e:
            raise ValueError(f"Invalid settings: {e}") from e

        self._setup_logging(settings.log_level)
        self.engine_manager = EngineManager(self.config_manager)
        self.engine_manager.load_engines()
        self.logger.info("Application initialized")

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Parse arguments, dispatch the command and map failures to exit codes.

        Returns:
            Process exit code
        """
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        try:
            self.initialize(args)
            assert self.config_manager is not None and self.engine_manager is not None
            context = CommandContext(self.config_manager, self.engine_manager, self.out)
            return args.handler(args, context)
        except BudgetExceededError as e:
            return self._fail(EXIT_BUDGET, str(e))
        except MalformedIdError as e:
            return self._fail(EXIT_USAGE, str(e))
        except OeisError as e:
            return self._fail(EXIT_FETCH, str(e))
        except ValueError as e:
            return self._fail(EXIT_USAGE, str(e))
        except ArithmeticError as e:
            return self._fail(EXIT_MISMATCH, f"integrity check failed: {e}")
        finally:
            self.shutdown()

    def _fail(self, code: int, message: str) -> int:
        self.err.write(f"evenup-words: error: {message}\n")
        return code

    def shutdown(self) -> None:
        """Clean shutdown of the application."""
        if self.engine_manager:
            self.engine_manager.shutdown_all_engines()
        root = logging.getLogger()
        for handler in self._handlers:
            root.removeHandler(handler)
            handler.close()
        self._handlers = []


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the command line.

    Returns:
        Process exit code
    """
    app = EvenUpWordsApp()
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
