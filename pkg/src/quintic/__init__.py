"""Exact-arithmetic checks for derived-category numerics on quintic del
Pezzo surfaces and on Gr(2,5)."""

__version__ = "0.1.0"
