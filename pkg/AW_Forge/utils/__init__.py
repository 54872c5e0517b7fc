"""Logging setup and parameter sweeps."""

__all__ = []
