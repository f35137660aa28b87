"""Exact combinatorics of RS shapes and inversion counts."""
__version__ = "0.1.0"
