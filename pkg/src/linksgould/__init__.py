"""Exact computation of the Links-Gould invariant LG^{2,1} and its genus bounds."""

__version__ = "0.1.0"
