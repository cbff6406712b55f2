"""Hermite and Laguerre spectral filtering toolkit."""

__version__ = "1.0.0"
