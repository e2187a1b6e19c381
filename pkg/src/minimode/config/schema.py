"""Pydantic models for the merged run configuration."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from minimode.exceptions import InvalidConfig


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RunConfig(_Section):
    seed: int = Field(ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)
    strict: bool = False
    format: Literal["csv", "json"] = "csv"
    output_path: str | None = None


class StudyConfig(_Section):
    estimators: list[str]
    distributions: list[str]
    sizes: list[int]
    epsilons: list[float]
    replicates: int = Field(ge=100)

    @field_validator("sizes")
    @classmethod
    def _positive_sizes(cls, value: list[int]) -> list[int]:
        if not value or any(n < 1 for n in value):
            raise ValueError("sizes must be a non-empty list of positive integers")
        return value

    @field_validator("epsilons")
    @classmethod
    def _fractions(cls, value: list[float]) -> list[float]:
        if any(not 0.0 <= e < 1.0 for e in value):
            raise ValueError("epsilons must lie in [0, 1)")
        return value


class MStudyConfig(_Section):
    scenarios: list[Literal["a", "b", "c", "d", "e", "f"]]
    distributions: list[str] = ["normal"]
    sizes: list[int]
    epsilons: list[float]
    replicates: int = Field(ge=100)
    c: float = Field(default=1.5, gt=0)


class SscConfig(_Section):
    n: int = Field(default=100, ge=2)
    points: int = Field(default=2001, ge=2)
    tail_prob: float = Field(default=1e-5, gt=0, lt=0.5)
    extension: int = Field(default=10, ge=0)
    extent: float = Field(default=1.0, gt=0)


class BootstrapConfig(_Section):
    b: int = Field(default=2000, ge=100)
    estimator: str = "hsm"


class VertexConfig(_Section):
    """Synthetic event generator settings (lengths in cm, momenta in GeV)."""

    events: int = Field(default=981, ge=1)
    region: tuple[float, float] = (-15.0, 15.0)
    signal_tracks: int = Field(default=30, ge=1)
    signal_pt_mean: float = Field(default=2.0, gt=0)
    background_tracks: int = Field(default=10, ge=0)
    background_pt_mean: float = Field(default=0.5, gt=0)
    max_background: int = Field(default=20, ge=0)
    z_smear: float = Field(default=0.05, ge=0)
    pt_threshold: float = Field(default=0.2, ge=0)
    tolerance: float = Field(default=0.2, gt=0)
    grids: dict[str, list[float]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check(self) -> VertexConfig:
        lo, hi = self.region
        if not lo < hi:
            raise ValueError(f"region must be increasing, got {self.region}")
        if self.signal_pt_mean <= self.background_pt_mean:
            raise ValueError("signal_pt_mean must exceed background_pt_mean")
        unknown = set(self.grids) - {"fsmw", "histmw", "epdfmw"}
        if unknown:
            raise ValueError(f"no tuning parameter for {sorted(unknown)}")
        return self


class BenchConfig(_Section):
    estimators: list[str]
    distributions: list[str]
    sizes: list[int]
    calls: int = Field(default=20, ge=1)


class ModeConfig(BaseModel):
    """The whole merged configuration."""

    model_config = ConfigDict(extra="ignore")

    run: RunConfig
    study: StudyConfig
    mstudy: MStudyConfig
    ssc: SscConfig = SscConfig()
    bootstrap: BootstrapConfig = BootstrapConfig()
    vertex: VertexConfig = VertexConfig()
    bench: BenchConfig
    estimators: dict[str, dict[str, Any]] = Field(default_factory=dict)

    def estimator_params(self, name: str) -> dict[str, Any]:
        """Configured defaults for a registry name (m_a..m_f share the huber section)."""
        key = "huber" if name.startswith("m_") else name
        params = dict(self.estimators.get(key, {}))
        if key == "huber":
            params["scenario"] = name[2:]
        return params


def validate_config(raw: dict[str, Any]) -> ModeConfig:
    try:
        return ModeConfig.model_validate(raw)
    except ValidationError as exc:
        raise InvalidConfig(str(exc)) from exc


__all__ = [
    "BenchConfig",
    "BootstrapConfig",
    "MStudyConfig",
    "ModeConfig",
    "RunConfig",
    "SscConfig",
    "StudyConfig",
    "VertexConfig",
    "validate_config",
]
