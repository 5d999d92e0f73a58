"""
Brute-force engine for evenup-words.

Counts by explicit enumeration. It is the reference every other method is
checked against, and the only one whose cost grows with the count itself.
"""

from .main import BruteForceEngine

__version__ = "0.1.0"

__all__ = ["BruteForceEngine"]
