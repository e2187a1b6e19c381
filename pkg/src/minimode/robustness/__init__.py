"""Sensitivity curves and breakdown trials."""
