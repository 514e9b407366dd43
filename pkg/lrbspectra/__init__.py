"""Exact spectra of weighted elements in left regular band algebras."""

__version__ = "0.1.0"
