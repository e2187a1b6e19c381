"""Shared order-statistics kernel."""
