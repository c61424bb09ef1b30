"""Exact verification of the combinatorics of the minuscule representation of E6."""

__version__ = "0.1.0"
