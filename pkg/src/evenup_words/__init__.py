"""Exact enumeration of even-up / odd-up restricted words and Catalan words."""

__version__ = "0.1.0"
