"""Reference distributions, contamination studies and vertex-finding simulation."""
