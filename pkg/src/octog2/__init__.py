"""Exact construction of g2 as derivations of the octonions over F_8."""

__version__ = "0.1.0"
