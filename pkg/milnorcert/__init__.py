"""Vanishing certificates and exact dimensions for Milnor fiber eigenspaces of arrangements."""

__version__ = "0.1.0"
