"""Oriented Steiner triple systems and the Steiner product."""

__version__ = "0.1.0"
