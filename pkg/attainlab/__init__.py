"""Spectral toolkit for attainable sets and approximate null-controllability."""

__version__ = "0.1.0"
