"""Main module for the transfer-matrix engine."""

import logging
from typing import List

from ...core_app.engine_base import CountTarget, EngineBase, EngineInfo, WordTarget
from .logic.transfer_matrix import class_counts


class TransferMatrixEngine(EngineBase):
    """
    Counts restricted words from powers of the letter transition matrix.

    Linear words sum all entries of M^(n-1); cyclic words take the trace of
    M^n. Catalan variants are not supported because their alphabet grows
    with the length.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def get_engine_info(self) -> EngineInfo:
        return EngineInfo(
            name="Transfer Matrix",
            method="transfer",
            description="Walk counting on the allowed-transition digraph",
            targets=["words"],
            dependencies=["numpy"],
        )

    def supports(self, target: CountTarget) -> bool:
        return isinstance(target, WordTarget)

    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        self._check_target(target)
        assert isinstance(target, WordTarget)
        return class_counts(target.word_class, target.k, n_max)
