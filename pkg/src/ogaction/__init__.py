"""Exact computational workbench for finite ordered groupoids, finite
inverse semigroups, and partial ordered actions on algebras over a prime
field: validation, restriction, globalization, skew rings, and the
Morita-context checks between an action and its globalization."""

__version__ = "0.1.0"
