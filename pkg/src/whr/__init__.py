"""Weighted Hurwitz numbers, hypergeometric tau functions and topological recursion, in exact arithmetic."""

__version__ = "0.1.0"
