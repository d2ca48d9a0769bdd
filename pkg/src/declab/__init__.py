"""Finite simplicial sets, décalage and the ordinal-sum adjunctions."""

__version__ = "0.1.0"
