"""Exact arithmetic in K[t; sigma] over finite fields and the algebras S_f."""

__version__ = "0.1.0"
