"""
Restricted Catalan word engines for evenup-words.

Two independent methods: a dynamic programme over the last letter and the
convolution systems linking the four sequences of a family.
"""

from .main import CatalanConvolutionEngine, CatalanDpEngine

__version__ = "0.1.0"

__all__ = ["CatalanDpEngine", "CatalanConvolutionEngine"]
