"""Exact-arithmetic invariants of semi-infinite flag varieties."""

__version__ = "0.1.0"
