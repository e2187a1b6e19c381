"""Input parsing and bundled datasets."""
