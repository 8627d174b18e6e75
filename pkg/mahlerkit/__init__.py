"""Exact computations with Mahler equations, regular sequences and
multiplicative decompositions."""

__version__ = "0.1.0"
