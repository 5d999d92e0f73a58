"""
Configuration management for evenup-words.

Settings live in a flat "section/key" namespace backed by a JSON document.
Values not present in the document fall back to the in-code defaults, and a
pydantic model provides a validated, typed snapshot for the engines and the
command handlers.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from ..shared_libs.oeis import DEFAULT_BASE_URL, default_cache_dir
from ..shared_libs.words import DEFAULT_BUDGET

CONFIG_ENV_VAR = "EVENUP_WORDS_CONFIG"
CACHE_ENV_VAR = "OEIS_CACHE_DIR"


class ToolkitSettings(BaseModel):
    """Validated view of the settings the toolkit acts on."""

    budget: int = Field(DEFAULT_BUDGET, gt=0)
    series_order: int = Field(64, ge=1)
    cache_dir: Path
    base_url: str = DEFAULT_BASE_URL
    timeout: float = Field(30.0, gt=0)
    max_offset: int = Field(5, ge=0)
    max_skip: int = Field(2, ge=0)
    workers: int = Field(4, ge=1)
    disabled_engines: List[str] = Field(default_factory=list)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"


class ConfigManager:
    """
    Manages toolkit and engine configuration settings.

    Explicitly set values are kept in memory and written to the JSON file by
    save_settings(); lookups fall back to the defaults table.
    """

    def __init__(self, settings_path: Optional[Union[str, Path]] = None):
        """
        Initialize the configuration manager.

        Args:
            settings_path: JSON settings file; defaults to $EVENUP_WORDS_CONFIG.
                A missing file means defaults only.
        """
        self.logger = logging.getLogger(__name__)

        if settings_path is None and os.environ.get(CONFIG_ENV_VAR):
            settings_path = os.environ[CONFIG_ENV_VAR]
        self.settings_path: Optional[Path] = Path(settings_path) if settings_path else None
        self.settings: Dict[str, Any] = {}

        self.defaults: Dict[str, Any] = {
            # Enumeration settings
            "enumeration/budget": DEFAULT_BUDGET,
            # Series settings
            "series/order": 64,
            # OEIS settings
            "oeis/cache_dir": "",
            "oeis/base_url": DEFAULT_BASE_URL,
            "oeis/timeout": 30.0,
            "oeis/max_offset": 5,
            "oeis/max_skip": 2,
            # Crosscheck settings
            "crosscheck/workers": 4,
            # Engine settings
            "engines/disabled": [],
            # Logging settings
            "logging/level": "WARNING",
            "logging/file_enabled": False,
            "logging/file_path": "evenup_words.log",
            "logging/max_file_size": 10485760,  # 10MB
            "logging/backup_count": 5,
        }

        if self.settings_path is not None and self.settings_path.is_file():
            self._load(self.settings_path)

        cache_override = os.environ.get(CACHE_ENV_VAR)
        if cache_override:
            self.settings["oeis/cache_dir"] = cache_override

        self.logger.debug("Configuration manager initialized")

    def _load(self, path: Path) -> None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("settings document must be a JSON object")
            self.settings.update(data)
            self.logger.info(f"Loaded settings from {path}")
        except (OSError, ValueError) as e:
            self.logger.warning(f"Ignoring unreadable settings file {path}: {e}")

    def get_setting(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration setting.

        Args:
            key: Setting key (can use '/' for nested keys)
            default: Default value if setting not found

        Returns:
            Setting value or default
        """
        if default is None and key in self.defaults:
            default = self.defaults[key]

        value = self.settings.get(key, default)

        # Environment overrides and hand-edited files may carry strings
        if isinstance(value, str) and default is not None and not isinstance(default, str):
            try:
                if isinstance(default, bool):
                    value = value.lower() in ("true", "1", "yes", "on")
                elif isinstance(default, int):
                    value = int(value)
                elif isinstance(default, float):
                    value = float(value)
                elif isinstance(default, (dict, list)):
                    value = json.loads(value)
            except (ValueError, TypeError) as e:
                self.logger.warning(f"Error converting setting '{key}': {e}")
                value = default

        return value

    def set_setting(self, key: str, value: Any) -> None:
        """
        Set a configuration setting.

        Args:
            key: Setting key (can use '/' for nested keys)
            value: Setting value (must be JSON serialisable)
        """
        self.settings[key] = value
        self.logger.debug(f"Set setting '{key}' = {value}")

    def remove_setting(self, key: str) -> None:
        """Remove an explicitly set value; the default applies again."""
        self.settings.pop(key, None)
        self.logger.debug(f"Removed setting '{key}'")

    def has_setting(self, key: str) -> bool:
        """Check if a setting has been explicitly set."""
        return key in self.settings

    def get_all_settings(self, prefix: str = "") -> Dict[str, Any]:
        """
        Get all effective settings with optional prefix filter.

        Args:
            prefix: Optional prefix to filter settings

        Returns:
            Dictionary of defaults overlaid with explicit values
        """
        merged = {**self.defaults, **self.settings}
        if not prefix:
            return merged
        return {
            key: value
            for key, value in merged.items()
            if key == prefix or key.startswith(f"{prefix}/")
        }

    def reset_to_defaults(self, prefix: str = "") -> None:
        """
        Reset settings to defaults.

        Args:
            prefix: Optional prefix to reset only specific settings
        """
        if prefix:
            for key in list(self.settings):
                if key.startswith(prefix):
                    del self.settings[key]
        else:
            self.settings.clear()
        self.logger.info(f"Reset settings to defaults (prefix: '{prefix}')")

    def save_settings(self) -> bool:
        """
        Write explicit settings to the settings file.

        Returns:
            True if written (or there is no settings file), False on error
        """
        if self.settings_path is None:
            return True
        return self._write(self.settings_path, self.settings)

    def _write(self, file_path: Union[str, Path], data: Dict[str, Any]) -> bool:
        try:
            path = Path(file_path)
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
            self.logger.debug(f"Settings written to {path}")
            return True
        except (OSError, TypeError) as e:
            self.logger.error(f"Error writing settings to {file_path}: {e}")
            return False

    def get_engine_setting(self, engine_name: str, key: str, default: Any = None) -> Any:
        """Get an engine-specific setting stored under engines/<name>/<key>."""
        return self.get_setting(f"engines/{engine_name}/{key}", default)

    def set_engine_setting(self, engine_name: str, key: str, value: Any) -> None:
        """Set an engine-specific setting stored under engines/<name>/<key>."""
        self.set_setting(f"engines/{engine_name}/{key}", value)

    def export_settings(self, file_path: Union[str, Path]) -> bool:
        """
        Export all effective settings to a JSON file.

        Args:
            file_path: Path to export file

        Returns:
            True if export successful, False otherwise
        """
        if self._write(file_path, self.get_all_settings()):
            self.logger.info(f"Settings exported to {file_path}")
            return True
        return False

    def import_settings(self, file_path: Union[str, Path]) -> bool:
        """
        Import settings from a JSON file.

        Args:
            file_path: Path to import file

        Returns:
            True if import successful, False otherwise
        """
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                settings_dict = json.load(f)
            if not isinstance(settings_dict, dict):
                raise ValueError("settings document must be a JSON object")
        except (OSError, ValueError) as e:
            self.logger.error(f"Error importing settings: {e}")
            return False

        for key, value in settings_dict.items():
            self.set_setting(key, value)
        self.logger.info(f"Settings imported from {file_path}")
        return True

    def toolkit_settings(self) -> ToolkitSettings:
        """
        Validated snapshot of the effective settings.

        Raises:
            pydantic.ValidationError: If a value is out of range
        """
        cache_dir = self.get_setting("oeis/cache_dir")
        return ToolkitSettings(
            budget=self.get_setting("enumeration/budget"),
            series_order=self.get_setting("series/order"),
            cache_dir=Path(cache_dir) if cache_dir else default_cache_dir(),
            base_url=self.get_setting("oeis/base_url"),
            timeout=self.get_setting("oeis/timeout"),
            max_offset=self.get_setting("oeis/max_offset"),
            max_skip=self.get_setting("oeis/max_skip"),
            workers=self.get_setting("crosscheck/workers"),
            disabled_engines=self.get_setting("engines/disabled"),
            log_level=str(self.get_setting("logging/level")).upper(),
        )
