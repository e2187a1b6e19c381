"""Shared helpers: logging, serialization and error metrics."""
