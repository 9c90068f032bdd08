"""Planar physics-based kinodynamic motion planning with a knowledge layer."""

__version__ = "0.1.0"
