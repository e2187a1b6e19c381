"""Grenander's direct mode estimator M*_{p,k}: spacing-weighted average of k-spacing midpoints."""

from __future__ import annotations

import numpy as np

from minimode.core.order_stats import SortedSample
from minimode.estimators.types import ModeEstimate
from minimode.exceptions import ParameterOrder, ZeroSpacing


def grenander(s: SortedSample, p: float = 2.0, k: int = 3) -> ModeEstimate:
    if not 1 < p < k:
        raise ParameterOrder(f"need 1 < p < k, got p={p}, k={k}")
    if s.n <= k:
        raise ParameterOrder(f"need n > k, got n={s.n}, k={k}")
    v = s.values
    spacing = v[k:] - v[:-k]
    if np.any(spacing == 0):
        i = int(np.flatnonzero(spacing == 0)[0])
        raise ZeroSpacing(f"x[{i + k}] == x[{i}] = {v[i]}")
    # weights spacing^-p rescaled by the largest one; the ratio is unchanged
    log_w = -p * np.log(spacing)
    w = np.exp(log_w - log_w.max())
    mid = (v[k:] + v[:-k]) / 2
    return ModeEstimate(float(np.dot(w, mid) / np.sum(w)), "grenander", {"p": p, "k": k})


__all__ = ["grenander"]
