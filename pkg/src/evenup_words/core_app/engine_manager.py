"""
Engine manager for evenup-words.

This module handles engine discovery, loading and lifecycle management, and
runs the crosscheck harness that compares every applicable engine on the
same target.
"""

import importlib
import importlib.metadata
import logging
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Type

from .config import ConfigManager
from .engine_base import (
    CountTarget,
    EngineBase,
    EngineHost,
    EngineInfo,
    EngineStatus,
    target_label,
)

ENTRY_POINT_GROUP = "evenup_words.engines"

# Used when the distribution metadata (and so the entry points) is not installed
BUILTIN_ENGINES: Dict[str, str] = {
    "brute": "evenup_words.engines.brute_force:BruteForceEngine",
    "transfer": "evenup_words.engines.transfer:TransferMatrixEngine",
    "dp": "evenup_words.engines.catalan:CatalanDpEngine",
    "conv": "evenup_words.engines.catalan:CatalanConvolutionEngine",
    "gf": "evenup_words.engines.genfunc:GeneratingFunctionEngine",
}

CANONICAL_ORDER: Tuple[str, ...] = tuple(BUILTIN_ENGINES)


class EngineLoadError(Exception):
    """Exception raised when engine loading fails."""

    pass


@dataclass
class CrosscheckReport:
    """
    Per-length agreement matrix of several engines on one target.

    ``columns`` maps method name to counts for n = 0..n_max; a None cell was
    not computed (over budget).
    """

    label: str
    n_max: int
    columns: Dict[str, List[Optional[int]]] = field(default_factory=dict)
    skipped: List[str] = field(default_factory=list)

    @property
    def methods(self) -> List[str]:
        return list(self.columns)

    def values_at(self, n: int) -> Dict[str, int]:
        return {
            method: cells[n]
            for method, cells in self.columns.items()
            if cells[n] is not None
        }

    @property
    def first_disagreement(self) -> Optional[Tuple[int, Dict[str, int]]]:
        """First n where the computed cells differ, with the differing values."""
        for n in range(self.n_max + 1):
            values = self.values_at(n)
            if len(set(values.values())) > 1:
                return n, values
        return None

    @property
    def all_agree(self) -> bool:
        return self.first_disagreement is None

    def render(self) -> str:
        width = max(
            [len(m) for m in self.methods]
            + [len(str(c)) for cells in self.columns.values() for c in cells]
            + [1]
        )
        header = "n".rjust(4) + "  " + "  ".join(m.rjust(width) for m in self.methods)
        lines = [f"crosscheck {self.label}", header + "  agree"]
        for n in range(self.n_max + 1):
            cells = [self.columns[m][n] for m in self.methods]
            agree = len(set(self.values_at(n).values())) <= 1
            lines.append(
                f"{n:>4}  "
                + "  ".join(("-" if c is None else str(c)).rjust(width) for c in cells)
                + ("  yes" if agree else "  NO")
            )
        for note in self.skipped:
            lines.append(f"note: {note}")
        disagreement = self.first_disagreement
        if disagreement is None:
            lines.append("all engines agree")
        else:
            n, values = disagreement
            detail = ", ".join(f"{m}={v}" for m, v in values.items())
            lines.append(f"first disagreement at n={n}: {detail}")
        return "\n".join(lines)


class EngineManager:
    """
    Manages engine discovery, loading and lifecycle.

    Engines are found through the ``evenup_words.engines`` entry point group;
    when no entry points are installed the built-in table is used instead.
    Engines named in the ``engines/disabled`` setting are recorded as
    DISABLED and never instantiated.
    """

    def __init__(self, config_manager: ConfigManager):
        """
        Initialize the engine manager.

        Args:
            config_manager: Configuration manager instance
        """
        self.config_manager = config_manager
        self.logger = logging.getLogger(__name__)

        self.engines: Dict[str, EngineBase] = {}
        self.engine_info: Dict[str, EngineInfo] = {}
        self.host = EngineHost(config_manager)
        self.entry_point_group = ENTRY_POINT_GROUP

        self.logger.debug("Engine manager initialized")

    def _entry_points(self) -> Dict[str, importlib.metadata.EntryPoint]:
        try:
            selected = importlib.metadata.entry_points().select(
                group=self.entry_point_group
            )
        except Exception as e:
            self.logger.error(f"Error reading entry points: {e}")
            return {}
        return {ep.name: ep for ep in selected}

    def discover_engines(self) -> List[str]:
        """
        Discover available engines.

        Returns:
            Engine names, in canonical order first, then any third-party ones
        """
        found = set(self._entry_points())
        if not found:
            self.logger.info("No engine entry points installed; using built-in table")
            found = set(BUILTIN_ENGINES)

        ordered = [name for name in CANONICAL_ORDER if name in found]
        ordered += sorted(found - set(CANONICAL_ORDER))
        for name in ordered:
            self.logger.info(f"Discovered engine: {name}")
        return ordered

    def _resolve(self, engine_name: str) -> Type[EngineBase]:
        entry_point = self._entry_points().get(engine_name)
        if entry_point is not None:
            engine_class = entry_point.load()
        elif engine_name in BUILTIN_ENGINES:
            module_name, _, attr = BUILTIN_ENGINES[engine_name].partition(":")
            engine_class = getattr(importlib.import_module(module_name), attr)
        else:
            raise EngineLoadError(f"Engine {engine_name} not found")

        if not (isinstance(engine_class, type) and issubclass(engine_class, EngineBase)):
            raise EngineLoadError(f"Engine {engine_name} does not inherit from EngineBase")
        return engine_class

    def _disabled(self) -> List[str]:
        return list(self.config_manager.get_setting("engines/disabled") or [])

    def load_engine(self, engine_name: str) -> bool:
        """
        Load a specific engine.

        Args:
            engine_name: Name of the engine to load

        Returns:
            True if engine loaded successfully, False otherwise
        """
        if engine_name in self.engines:
            self.logger.warning(f"Engine {engine_name} is already loaded")
            return True

        if engine_name in self._disabled():
            self.engine_info[engine_name] = EngineInfo(
                name=engine_name,
                method=engine_name,
                description="Disabled by configuration",
                status=EngineStatus.DISABLED,
            )
            self.logger.info(f"Engine {engine_name} is disabled")
            return False

        try:
            self.logger.info(f"Loading engine: {engine_name}")
            engine = self._resolve(engine_name)()

            info = engine.get_engine_info()
            info.status = EngineStatus.LOADING

            deps_valid, missing_deps = engine.validate_dependencies()
            if not deps_valid:
                raise EngineLoadError(f"Missing dependencies: {', '.join(missing_deps)}")

            if not engine.initialize(self.host):
                raise EngineLoadError(f"Engine {engine_name} initialization failed")

            engine.engine_info = info
            self.engines[engine_name] = engine
            info.status = EngineStatus.LOADED
            self.engine_info[engine_name] = info

            self.logger.info(f"Engine {engine_name} loaded successfully")
            return True

        except Exception as e:
            self.logger.error(f"Failed to load engine {engine_name}: {e}")
            self.logger.debug(traceback.format_exc())

            if engine_name not in self.engine_info:
                self.engine_info[engine_name] = EngineInfo(
                    name=engine_name,
                    method=engine_name,
                    description="Failed to load",
                )
            self.engine_info[engine_name].status = EngineStatus.ERROR
            self.engine_info[engine_name].error_message = str(e)
            return False

    def load_engines(self) -> int:
        """
        Discover and load all engines.

        Returns:
            Number of engines loaded
        """
        discovered = self.discover_engines()
        if not discovered:
            self.logger.warning("No engines discovered")
            return 0

        loaded = sum(1 for name in discovered if self.load_engine(name))
        self.logger.info(f"Loaded {loaded}/{len(discovered)} engines")
        return loaded

    def get_engine(self, engine_name: str) -> EngineBase:
        """
        Get a loaded engine, loading it on first use.

        Raises:
            ValueError: If the engine is unknown, disabled or failed to load
        """
        if engine_name not in self.engines and not self.load_engine(engine_name):
            info = self.engine_info.get(engine_name)
            reason = (info.error_message or info.status.value) if info else "unknown"
            raise ValueError(f"Engine '{engine_name}' is not available ({reason})")
        return self.engines[engine_name]

    def engines_for(self, target: CountTarget) -> List[EngineBase]:
        """Loaded engines able to count the target, in canonical order."""
        names = [n for n in CANONICAL_ORDER if n in self.engines]
        names += sorted(set(self.engines) - set(CANONICAL_ORDER))
        return [self.engines[n] for n in names if self.engines[n].supports(target)]

    def unload_engine(self, engine_name: str) -> bool:
        """
        Unload an engine.

        Args:
            engine_name: Name of the engine to unload

        Returns:
            True if engine unloaded successfully, False otherwise
        """
        if engine_name not in self.engines:
            return True

        try:
            self.engines[engine_name].shutdown()
            del self.engines[engine_name]
            self.engine_info[engine_name].status = EngineStatus.UNLOADED
            self.logger.info(f"Engine {engine_name} unloaded")
            return True

        except Exception as e:
            self.logger.error(f"Failed to unload engine {engine_name}: {e}")
            return False

    def reload_engine(self, engine_name: str) -> bool:
        """Unload (if loaded) and load an engine again."""
        self.unload_engine(engine_name)
        return self.load_engine(engine_name)

    def shutdown_all_engines(self) -> None:
        """Shutdown all loaded engines."""
        for engine_name in list(self.engines):
            self.unload_engine(engine_name)
        self.logger.debug("All engines shut down")

    def get_engine_info(self, engine_name: str) -> Optional[EngineInfo]:
        return self.engine_info.get(engine_name)

    def get_loaded_engines(self) -> List[str]:
        return list(self.engines)

    def is_engine_loaded(self, engine_name: str) -> bool:
        return engine_name in self.engines

    def get_engine_statistics(self) -> Dict[str, int]:
        """
        Get engine statistics.

        Returns:
            Dictionary with engine counts by status
        """
        stats = {"total": len(self.engine_info), "loaded": 0, "error": 0, "disabled": 0}
        for info in self.engine_info.values():
            if info.status == EngineStatus.LOADED:
                stats["loaded"] += 1
            elif info.status == EngineStatus.ERROR:
                stats["error"] += 1
            elif info.status == EngineStatus.DISABLED:
                stats["disabled"] += 1
        return stats

    def _run(
        self, engine: EngineBase, target: CountTarget, n_max: int
    ) -> List[Optional[int]]:
        start = time.perf_counter()
        cells = engine.count_within_budget(target, n_max)
        elapsed = time.perf_counter() - start
        self.logger.debug(
            f"{engine.method_name} counted {target_label(target)} in {elapsed:.3f}s"
        )
        return cells

    def crosscheck(self, target: CountTarget, n_max: int) -> CrosscheckReport:
        """
        Count the target with every applicable engine and compare per length.

        Engines run in a thread pool; columns are assembled in canonical
        order regardless of which engine finishes first.

        Raises:
            ValueError: If no loaded engine supports the target or n_max < 0
        """
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        engines = self.engines_for(target)
        if not engines:
            raise ValueError(f"No loaded engine can count {target_label(target)}")

        workers = int(self.config_manager.get_setting("crosscheck/workers"))
        with ThreadPoolExecutor(max_workers=max(1, min(workers, len(engines)))) as pool:
            futures = [
                (engine.method_name, pool.submit(self._run, engine, target, n_max))
                for engine in engines
            ]
            columns = {method: future.result() for method, future in futures}

        report = CrosscheckReport(label=target_label(target), n_max=n_max, columns=columns)
        for method, cells in columns.items():
            missing = [n for n, c in enumerate(cells) if c is None]
            if missing:
                report.skipped.append(
                    f"{method} skipped n >= {missing[0]} (enumeration budget exceeded)"
                )
        return report
