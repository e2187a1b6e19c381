"""Weighted frequency-histogram mode (HISTMW)."""

from __future__ import annotations

import numpy as np

from minimode.core.order_stats import WeightedSortedSample
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import NonPositiveBinWidth

# bin coordinates are rounded first so values on an edge land in the bin they open
_EDGE_DECIMALS = 9


def histmw(s: WeightedSortedSample, bin: float, origin: float = 0.0) -> ModeEstimate:
    """Center of the heaviest bin [origin + k*bin, origin + (k+1)*bin); leftmost on ties."""
    if not bin > 0:
        raise NonPositiveBinWidth(f"bin width must be positive, got {bin}")
    index = np.floor(np.round((s.values - origin) / bin, _EDGE_DECIMALS)).astype(np.int64)
    bins, inverse = np.unique(index, return_inverse=True)
    content = np.bincount(inverse, weights=s.weights)
    best = int(np.argmax(content))
    k = int(bins[best])
    return ModeEstimate(
        float(origin + (k + 0.5) * bin),
        "histmw",
        {"bin_index": k, "content": float(content[best]), "bin": bin, "origin": origin},
    )


__all__ = ["histmw"]
