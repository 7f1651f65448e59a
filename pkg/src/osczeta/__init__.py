"""Spectral zeta functions, spectral determinants and exact WKB-style sum
rules for the homogeneous 1D Schroedinger operators -d^2/dq^2 + |q|^N."""

__version__ = "0.1.0"
