"""Exact-arithmetic workbench for Frobenius-lift connections, curvature
and gauge cocycles over truncated ramified p-adic rings."""

__version__ = "0.1.0"
