"""Combinatorial lower bounds and exact values for the binomial arithmetical
rank of lattice ideals."""

__version__ = "0.1.0"
