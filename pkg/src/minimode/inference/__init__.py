"""Resampling inference for mode estimates."""
