"""
Main module for the brute-force engine.

Restricted words are counted by a pruned depth-first search split by first
letter; restricted Catalan words are enumerated and filtered.
"""

import logging
from typing import List, Optional

from ...core_app.engine_base import (
    CountTarget,
    EngineBase,
    EngineInfo,
    WordTarget,
    target_label,
)
from ...shared_libs.words import BudgetExceededError, count_brute_force
from ..catalan.logic.catalan_words import count_catalan_filtered


class BruteForceEngine(EngineBase):
    """Enumeration engine for both word classes and Catalan variants."""

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def get_engine_info(self) -> EngineInfo:
        return EngineInfo(
            name="Brute Force",
            method="brute",
            description="Exhaustive enumeration with prefix pruning",
            targets=["words", "catalan"],
        )

    def supports(self, target: CountTarget) -> bool:
        return True

    @property
    def workers(self) -> int:
        return int(self.get_setting("crosscheck/workers") or 1)

    def count(self, target: CountTarget, n: int) -> int:
        self._check_target(target)
        if isinstance(target, WordTarget):
            return count_brute_force(
                target.word_class, target.k, n, self.budget, workers=self.workers
            )
        return count_catalan_filtered(target, n, method="enum", budget=self.budget)

    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        """
        Enumerate lengths 0..n_max.

        Raises:
            BudgetExceededError: As soon as a length exceeds the budget
        """
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        counts = [self.count(target, n) for n in range(n_max + 1)]
        self.logger.debug(f"Enumerated {target_label(target)} up to n={n_max}")
        return counts

    def count_within_budget(
        self, target: CountTarget, n_max: int
    ) -> List[Optional[int]]:
        cells: List[Optional[int]] = []
        for n in range(n_max + 1):
            try:
                cells.append(self.count(target, n))
            except BudgetExceededError as e:
                self.logger.warning(f"{target_label(target)}: {e}; skipping n >= {n}")
                cells.extend([None] * (n_max + 1 - n))
                break
        return cells
