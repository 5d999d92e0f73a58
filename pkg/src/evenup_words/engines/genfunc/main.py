"""
Main module for the generating-function engine.

Word classes are expanded from their rational closed forms; Catalan variants
from their algebraic closed forms, which need a series truncation order at
least as large as the longest length requested.
"""

import logging
from typing import List

from ...core_app.engine_base import CountTarget, EngineBase, EngineInfo, WordTarget
from ..catalan.logic.catalan_words import expand_catalan_gf
from .logic.rational_gf import build_gf, expand_gf


class GeneratingFunctionEngine(EngineBase):
    """Closed-form expansion engine."""

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def get_engine_info(self) -> EngineInfo:
        return EngineInfo(
            name="Generating Functions",
            method="gf",
            description="Exact coefficient extraction from closed forms",
            targets=["words", "catalan"],
        )

    def supports(self, target: CountTarget) -> bool:
        if isinstance(target, WordTarget):
            return True
        return target.parity is not None

    @property
    def series_order(self) -> int:
        return int(self.get_setting("series/order", 64))

    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        """
        Expand the closed form of the target up to x^n_max.

        Raises:
            ValueError: If a Catalan length is beyond the series order
            IntegrityError: If the expansion is not a non-negative integer sequence
        """
        self._check_target(target)
        if isinstance(target, WordTarget):
            gf = build_gf(target.word_class, target.k)
            self.logger.debug(f"{target.label}: {gf}")
            return expand_gf(gf, n_max)

        if n_max > self.series_order:
            raise ValueError(
                f"n={n_max} exceeds the series order {self.series_order}; "
                f"raise series/order to expand further"
            )
        return expand_catalan_gf(target, n_max)
