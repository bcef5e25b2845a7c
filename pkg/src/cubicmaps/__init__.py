"""Exact enumeration, parameter distributions and asymptotic verification
for rooted cubic planar maps."""

__version__ = "0.1.0"
