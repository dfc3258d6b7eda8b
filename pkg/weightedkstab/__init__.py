"""Weighted K-polystability of rank two spherical Fano varieties."""

__version__ = "0.1.0"
