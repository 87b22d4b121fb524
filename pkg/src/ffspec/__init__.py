"""Differential spectra of power functions over GF(2^n)."""

__version__ = "0.1.0"
