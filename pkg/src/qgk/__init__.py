"""Exact and numerical verification tools for quantum groups."""

__version__ = "0.1.0"
