"""Generating-function engine for evenup-words."""

from .main import GeneratingFunctionEngine

__version__ = "0.1.0"

__all__ = ["GeneratingFunctionEngine"]
