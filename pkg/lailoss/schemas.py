"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    pydantic models for configuration documents and run reports.
    Config models reject unknown keys.

Change Log:
    Version 1.0 (10/16/2026): Created config + report schemas
"""
# schemas.py - pydantic models for configs and reports
import json
from enum import Enum
from pathlib import Path
from typing import List, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, ValidationError, field_validator

from .errors import ConfigError

M = TypeVar("M", bound=BaseModel)


class BaseLoss(str, Enum):
    MAE = "mae"
    MSE = "mse"


class Norm(str, Enum):
    L1 = "l1"
    L2 = "l2"
    ELASTIC = "elastic"


class OptimizerKind(str, Enum):
    SGD = "sgd"
    ADAM = "adam"


class AlphaUnit(str, Enum):
    BATCHES = "batches"
    POINTS = "points"


class Activation(str, Enum):
    TANH = "tanh"
    IDENTITY = "identity"


class LaiSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    base: BaseLoss = BaseLoss.MSE
    lambdas: List[float] = Field(default_factory=lambda: [1.0], min_length=1)
    norm: Norm = Norm.L2
    rho: float = Field(0.5, ge=0.0, le=1.0)
    alpha: float = Field(0.01, ge=0.0, le=1.0)
    mean_normalize: bool = False

    @field_validator("lambdas")
    @classmethod
    def _positive(cls, v: List[float]) -> List[float]:
        for lam in v:
            if not lam > 0.0:
                raise ValueError(f"every lambda must be > 0, got {lam}")
        return v

    def lambdas_for(self, n_features: int) -> List[float]:
        """Per-direction lambdas; a single value is shared by every direction."""
        if len(self.lambdas) == 1:
            return self.lambdas * n_features
        if len(self.lambdas) != n_features:
            raise ConfigError(f"{len(self.lambdas)} lambdas given for {n_features} features")
        return list(self.lambdas)


class OptimizerConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: OptimizerKind = OptimizerKind.ADAM
    lr: float = Field(1e-3, gt=0.0)
    beta1: float = Field(0.9, ge=0.0, lt=1.0)
    beta2: float = Field(0.999, ge=0.0, lt=1.0)
    eps: float = Field(1e-8, gt=0.0)


class ModelConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    hidden: List[PositiveInt] = Field(default_factory=lambda: [16])
    activation: Activation = Activation.TANH


class TrainConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    pretrain_epochs: int = Field(100, ge=0)
    lai_epochs: int = Field(100, ge=0)
    batch_size: int = Field(32, ge=1)
    seed: int = 42
    val_fraction: float = Field(0.2, gt=0.0, lt=1.0)
    baseline_mode: bool = False
    alpha_unit: AlphaUnit = AlphaUnit.BATCHES
    record_wall_time: bool = False
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
    model: ModelConfig = Field(default_factory=ModelConfig)
    spec: LaiSpec = Field(default_factory=LaiSpec)

    @property
    def alpha(self) -> float:
        return self.spec.alpha


class EpochRecord(BaseModel):
    epoch: int
    phase: str
    train_loss: float
    val_rmse: float = Field(ge=0.0)
    seconds: float = 0.0
    lai_batches: List[int] = Field(default_factory=list)
    lai_points: int = 0


class TrainReport(BaseModel):
    seed: int
    records: List[EpochRecord] = Field(default_factory=list)
    checkpoint: Optional[str] = None


class ExperimentSummary(BaseModel):
    seed: int
    baseline_mode: bool
    epochs: int
    final_val_rmse: float
    output_variance: float
    variance_set: str
    lambdas: List[float]
    alpha: float


class SensitivityReport(BaseModel):
    feature_names: List[str]
    values: List[float]
    sigma: float
    seed: int
    n_samples: int
    repeats: int = 1
    rmse: Optional[float] = None


def parse_model(cls: Type[M], data: dict, source: str = "config") -> M:
    try:
        return cls.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"invalid {source}: {exc}") from exc


def load_train_config(path: Path) -> TrainConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    return parse_model(TrainConfig, data, source=str(path))
