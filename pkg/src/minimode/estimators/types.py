"""Result types shared by the estimators."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class ModeEstimate:
    """A location estimate plus whatever the estimator reports about how it got there."""

    value: float
    estimator_id: str
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "estimator": self.estimator_id, "diagnostics": self.diagnostics}


@dataclass(frozen=True)
class ScaleEstimate:
    value: float
    method: str

    def __post_init__(self) -> None:
        if not self.value >= 0:
            raise ValueError(f"scale must be nonnegative, got {self.value}")

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "method": self.method}


@dataclass(frozen=True)
class KernelDensitySpec:
    """Gaussian kernel bandwidth h = 0.9 * sigma * n^(-1/5)."""

    h: float
    sigma: float
    n: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class PmTransformFit:
    """Power-transform fit: transformed data ~ N(m, s^2) under exponent beta."""

    beta: float
    m: float
    s: float
    r_value: float
    robust: bool = True

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


__all__ = ["KernelDensitySpec", "ModeEstimate", "PmTransformFit", "ScaleEstimate"]
