"""CLI display layer for mini-mode."""
