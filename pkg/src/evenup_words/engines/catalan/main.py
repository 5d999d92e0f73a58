"""Main module for the Catalan engines."""

import logging
from typing import List

from ...core_app.engine_base import CountTarget, EngineBase, EngineInfo, WordTarget
from .logic.catalan_words import convolution_sequence, dp_counts


class CatalanDpEngine(EngineBase):
    """Last-letter dynamic programme; also counts the unrestricted variants."""

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def get_engine_info(self) -> EngineInfo:
        return EngineInfo(
            name="Catalan DP",
            method="dp",
            description="Dynamic programme over the value of the last letter",
            targets=["catalan"],
        )

    def supports(self, target: CountTarget) -> bool:
        return not isinstance(target, WordTarget)

    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        self._check_target(target)
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        return dp_counts(target, n_max)


class CatalanConvolutionEngine(EngineBase):
    """Joint convolution recurrences of the (A, B, A', B') families."""

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def get_engine_info(self) -> EngineInfo:
        return EngineInfo(
            name="Catalan Convolution",
            method="conv",
            description="Convolution system seeded from the closed forms",
            targets=["catalan"],
        )

    def supports(self, target: CountTarget) -> bool:
        return not isinstance(target, WordTarget) and target.parity is not None

    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        self._check_target(target)
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        return convolution_sequence(target, n_max)
