"""Exact classification machinery for the polynomial families z^d + c.

The package provides exact integer and interval arithmetic, algebraic
numbers with certified locators, dynamical invariants of z^d + c,
elimination-based solvers for cycles with multiplier +-1, logarithmic
capacity bounds for real intervals, and report-producing certificate
drivers, plus a small CLI (the ``multibrot`` entry point).
"""

__version__ = "0.1.0"
