"""Topological measures from solid-set functions on finite Khalimsky models."""

__version__ = "0.1.0"
