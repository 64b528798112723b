"""Exact toolkit for cocharacter limits, Jordan-Kac-Vinberg decompositions,
and rational orbit-equivalence certificates in two group models."""

__version__ = "0.1.0"
