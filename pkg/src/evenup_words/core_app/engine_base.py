"""
Engine base classes and interfaces for evenup-words.

Every counting method (brute force, transfer matrix, generating functions,
Catalan DP and convolution) is packaged as an engine plugin implementing
EngineBase, so the command layer and the crosscheck harness can treat them
uniformly.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, List, Optional, Tuple, Union

from ..shared_libs.words import DEFAULT_BUDGET, BudgetExceededError, WordClass

if TYPE_CHECKING:
    from ..engines.catalan.logic.catalan_words import CatalanVariant


class EngineStatus(Enum):
    """Engine status enumeration."""

    UNLOADED = "unloaded"
    LOADING = "loading"
    LOADED = "loaded"
    ERROR = "error"
    DISABLED = "disabled"


@dataclass
class EngineInfo:
    """Engine information container."""

    name: str
    method: str
    description: str
    version: str = "0.1.0"
    targets: List[str] = field(default_factory=list)
    dependencies: List[str] = field(default_factory=list)
    status: EngineStatus = EngineStatus.UNLOADED
    error_message: Optional[str] = None


@dataclass(frozen=True)
class WordTarget:
    """A word class together with its alphabet size."""

    word_class: WordClass
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"Alphabet size must be at least 1, got {self.k}")

    @property
    def label(self) -> str:
        return f"{self.word_class.name} k={self.k}"


CountTarget = Union[WordTarget, "CatalanVariant"]


def target_kind(target: CountTarget) -> str:
    """'words' or 'catalan'."""
    return "words" if isinstance(target, WordTarget) else "catalan"


def target_label(target: CountTarget) -> str:
    return target.label if isinstance(target, WordTarget) else target.name


class EngineHost:
    """
    Host services provided to engines.

    Gives engines access to configuration without depending on the
    application object. Engines log through their own module loggers.
    """

    def __init__(self, config_manager: Any):
        """
        Initialize the host.

        Args:
            config_manager: Configuration manager instance
        """
        self.config_manager = config_manager

    def get_setting(self, key: str, default: Any = None) -> Any:
        """Get a configuration setting."""
        return self.config_manager.get_setting(key, default)


class EngineBase(ABC):
    """
    Abstract base class for all counting engines.

    Engines are created without arguments, then initialized with an
    EngineHost by the engine manager. Counting methods return exact Python
    integers.
    """

    def __init__(self) -> None:
        """Initialize the engine."""
        self.host: Optional[EngineHost] = None
        self.engine_info: Optional[EngineInfo] = None
        self._is_initialized = False
        self.logger = logging.getLogger(self.__class__.__module__)

    @abstractmethod
    def get_engine_info(self) -> EngineInfo:
        """
        Get engine information.

        Returns:
            EngineInfo object containing engine metadata
        """
        pass

    @abstractmethod
    def supports(self, target: CountTarget) -> bool:
        """Whether this engine can count the given target."""
        pass

    @abstractmethod
    def count_sequence(self, target: CountTarget, n_max: int) -> List[int]:
        """
        Count the target for every length n = 0..n_max.

        Args:
            target: WordTarget or CatalanVariant
            n_max: Last length to count (>= 0)

        Returns:
            List of n_max + 1 exact counts
        """
        pass

    def count(self, target: CountTarget, n: int) -> int:
        """Count the target at a single length."""
        return self.count_sequence(target, n)[n]

    def count_within_budget(
        self, target: CountTarget, n_max: int
    ) -> List[Optional[int]]:
        """
        Like count_sequence, but lengths beyond the budget come back as None.

        Counts are monotone in cost, so once one length exceeds the budget
        every longer one does too.
        """
        try:
            return list(self.count_sequence(target, n_max))
        except BudgetExceededError:
            pass
        cells: List[Optional[int]] = []
        for n in range(n_max + 1):
            try:
                cells.append(self.count(target, n))
            except BudgetExceededError:
                cells.extend([None] * (n_max + 1 - n))
                break
        return cells

    def initialize(self, host: EngineHost) -> bool:
        """
        Initialize the engine with host access.

        Args:
            host: Host services

        Returns:
            True if initialization successful, False otherwise
        """
        self.host = host
        self._is_initialized = True
        return True

    def shutdown(self) -> None:
        """Release engine resources; the default has nothing to release."""
        self._is_initialized = False

    def get_setting(self, key: str, default: Any = None) -> Any:
        """Setting lookup through the host, or ``default`` when standalone."""
        if self.host is None:
            return default
        return self.host.get_setting(key, default)

    @property
    def budget(self) -> int:
        return int(self.get_setting("enumeration/budget", DEFAULT_BUDGET))

    @property
    def method_name(self) -> str:
        return self.get_engine_info().method

    def validate_dependencies(self) -> Tuple[bool, List[str]]:
        """
        Validate engine dependencies.

        Returns:
            Tuple of (success, missing_dependencies)
        """
        info = self.engine_info or self.get_engine_info()
        missing = []

        for dep in info.dependencies:
            try:
                __import__(dep)
            except ImportError:
                missing.append(dep)

        return len(missing) == 0, missing

    def _check_target(self, target: CountTarget) -> None:
        if not self.supports(target):
            raise ValueError(
                f"Engine '{self.method_name}' cannot count {target_label(target)}"
            )

    @property
    def is_initialized(self) -> bool:
        """Check if engine is initialized."""
        return self._is_initialized
