"""Verification toolkit for the quasi-Engel characterisation of finite solvable groups."""

__version__ = "0.1.0"
