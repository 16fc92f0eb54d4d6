"""Symbolic verification laboratory for rank (2+1) Lie conformal superalgebras."""

__version__ = "0.1.0"
