"""Exact fixed point ratios for finite permutation groups and their applications."""

__version__ = "0.1.0"
