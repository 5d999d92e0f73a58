"""
Command handlers for the evenup-words command line.

Each handler takes the parsed arguments and a CommandContext, writes its
result to the context's output stream and returns the process exit code.
Exceptions are left to the caller, which maps them onto exit codes.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, TextIO

from ..engines.catalan.logic.catalan_words import (
    CatalanVariant,
    table_variants,
    unrestricted_variants,
)
from ..shared_libs.oeis import OeisClient, compare
from ..shared_libs.table_render import CountRow, OutputFormat, ResultsTable
from ..shared_libs.words import WordClass, all_word_classes
from .config import ConfigManager
from .engine_base import CountTarget, WordTarget, target_label
from .engine_manager import EngineManager

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_FETCH = 4

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    """What a command handler needs from the application."""

    config_manager: ConfigManager
    engine_manager: EngineManager
    out: TextIO = field(default_factory=lambda: sys.stdout)

    def emit(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")


def resolve_target(args: argparse.Namespace) -> CountTarget:
    """
    Build the count target from --class/--k or --catalan.

    Raises:
        ValueError: For unknown names or a missing or superfluous --k
    """
    if args.word_class is not None:
        if args.k is None:
            raise ValueError(f"--k is required for word class '{args.word_class}'")
        return WordTarget(WordClass.from_name(args.word_class), args.k)
    if args.k is not None:
        raise ValueError("--k only applies to word classes, not Catalan variants")
    return CatalanVariant.from_name(args.catalan)


def cmd_count(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Print the exact count of one target at one length."""
    if args.n < 0:
        raise ValueError(f"--n must be non-negative, got {args.n}")
    target = resolve_target(args)
    engine = ctx.engine_manager.get_engine(args.method)
    if not engine.supports(target):
        raise ValueError(f"Method '{args.method}' cannot count {target_label(target)}")

    ctx.emit(str(engine.count(target, args.n)))
    return EXIT_OK


def _table_targets(args: argparse.Namespace) -> List[CountTarget]:
    if args.word_class is not None:
        word_class = WordClass.from_name(args.word_class)
        if args.k is not None:
            return [WordTarget(word_class, args.k)]
        if args.k_max < 1:
            raise ValueError(f"--k-max must be at least 1, got {args.k_max}")
        return [WordTarget(word_class, k) for k in range(1, args.k_max + 1)]
    if args.k is not None:
        raise ValueError("--k only applies to word classes, not Catalan variants")
    if args.catalan == "all":
        return list(table_variants())
    return [CatalanVariant.from_name(args.catalan)]


def cmd_table(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Render rows k = 1..k_max (or the Catalan variants) for n = 0..n_max."""
    if args.n_max < 0:
        raise ValueError(f"--n-max must be non-negative, got {args.n_max}")
    fmt = OutputFormat(args.format)
    targets = _table_targets(args)
    if fmt is OutputFormat.BFILE and len(targets) != 1:
        raise ValueError("--format bfile needs a single row; pass --k or one variant")

    engine = ctx.engine_manager.get_engine(args.method)
    table = ResultsTable()
    for target in targets:
        if not engine.supports(target):
            raise ValueError(
                f"Method '{args.method}' cannot count {target_label(target)}"
            )
        counts = engine.count_sequence(target, args.n_max)
        if isinstance(target, WordTarget):
            table.add_row(CountRow(counts, class_name=target.word_class.name, k=target.k))
        else:
            table.add_row(CountRow(counts, variant=target.name))

    ctx.out.write(table.render(fmt))
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Run every applicable engine and report per-n agreement."""
    target = resolve_target(args)
    report = ctx.engine_manager.crosscheck(target, args.n_max)
    ctx.emit(report.render())
    for note in report.skipped:
        logger.warning(note)
    return EXIT_OK if report.all_agree else EXIT_MISMATCH


def cmd_oeis(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Compare the gf expansion of a target with an OEIS b-file."""
    if args.n_max < 0:
        raise ValueError(f"--n-max must be non-negative, got {args.n_max}")
    target = resolve_target(args)
    settings = ctx.config_manager.toolkit_settings()

    client = OeisClient(
        cache_dir=settings.cache_dir,
        live=args.live,
        base_url=settings.base_url,
        timeout=settings.timeout,
    )
    sequence = client.fetch(args.id)

    computed = ctx.engine_manager.get_engine("gf").count_sequence(target, args.n_max)
    max_offset = settings.max_offset if args.max_offset is None else args.max_offset
    max_skip = settings.max_skip if args.max_skip is None else args.max_skip
    report = compare(computed, sequence, max_offset=max_offset, max_skip=max_skip)

    ctx.emit(f"{target_label(target)} n=0..{args.n_max}")
    ctx.emit(report.summary())
    return EXIT_OK if report.is_full_match else EXIT_MISMATCH


def word_class_names() -> List[str]:
    return [c.name for c in all_word_classes()]


def catalan_names() -> List[str]:
    return [v.name for v in table_variants() + unrestricted_variants()]
