"""Transfer-matrix engine for evenup-words."""

from .main import TransferMatrixEngine

__version__ = "0.1.0"

__all__ = ["TransferMatrixEngine"]
