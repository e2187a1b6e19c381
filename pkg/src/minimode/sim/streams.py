"""Deterministic random substreams keyed by study coordinates."""

from __future__ import annotations

import zlib

import numpy as np


def stable_tag(text: str) -> int:
    """Process-independent integer tag for a string (Python's hash() is salted)."""
    return zlib.crc32(text.encode("utf-8"))


def cell_key(distribution: str, n: int, epsilon: float) -> tuple[int, int, int]:
    return stable_tag(distribution), int(n), int(round(epsilon * 1_000_000))


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for (seed, key...); same inputs give the same stream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


__all__ = ["cell_key", "stable_tag", "substream"]
