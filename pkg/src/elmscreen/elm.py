"""Single-hidden-layer network with a random hidden layer and a closed-form
least-squares output solve (extreme learning machine).

Each hidden neuron i computes phi(alpha * (a_i . x + b_i) +
(1 - alpha) * gamma * ||x - c_i||) where a_i, b_i are random weights/bias,
c_i is a center sampled from the training inputs, and phi is one of six
transfer functions. With alpha = 1.0 (the default) the distance term
vanishes and neurons are plain random projections.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, replace

import numpy as np

from .data import NormalizerStats
from .linalg import as_matrix, lstsq_solve

__all__ = [
    "ActivationKind",
    "ElmConfig",
    "ElmModel",
    "apply_activation",
    "init_random",
    "hidden_matrix",
    "fit",
    "predict_scores",
    "predict_class",
]

DECISION_THRESHOLD = 0.5


class ActivationKind(enum.Enum):
    """The six hidden-layer transfer functions."""

    HARDLIM = "hardlim"
    TANH = "tanh"
    SINE = "sine"
    TRIBAS = "tribas"
    GAUSSIAN = "gaussian"
    MULTIQUADRIC = "multiquadric"

    @classmethod
    def from_name(cls, name: str) -> "ActivationKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown activation '{name}' (choose from {choices})") from None


# Vectorized transfer functions. hardlim maps r = 0 to 1 (standard
# convention); gaussian is exp(-r^2); multiquadric is sqrt(1 + r^2).
_TRANSFER = {
    ActivationKind.HARDLIM: lambda r: np.where(r >= 0.0, 1.0, 0.0),
    ActivationKind.TANH: np.tanh,
    ActivationKind.SINE: np.sin,
    ActivationKind.TRIBAS: lambda r: np.maximum(0.0, 1.0 - np.abs(r)),
    ActivationKind.GAUSSIAN: lambda r: np.exp(-np.square(r)),
    ActivationKind.MULTIQUADRIC: lambda r: np.sqrt(1.0 + np.square(r)),
}


def apply_activation(kind: ActivationKind, r: float) -> float:
    """Evaluate one transfer function at a scalar preactivation."""
    if not math.isfinite(r):
        raise ValueError("non-finite input")
    return float(_TRANSFER[kind](np.float64(r)))


@dataclass(frozen=True)
class ElmConfig:
    """Hyperparameters of the model.

    ``alpha`` blends the dot-product preactivation against the RBF distance
    term; ``rbf_width`` scales the distance. ``ridge = 0`` keeps the pure
    minimum-norm least-squares solve.
    """

    hidden_count: int = 50
    activation: ActivationKind = ActivationKind.MULTIQUADRIC
    alpha: float = 1.0
    rbf_width: float = 1.0
    ridge: float = 0.0
    rcond: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.hidden_count < 1:
            raise ValueError("hidden_count must be >= 1")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if self.rbf_width <= 0:
            raise ValueError("rbf_width must be positive")
        if self.ridge < 0:
            raise ValueError("ridge must be nonnegative")
        if self.rcond < 0:
            raise ValueError("rcond must be nonnegative")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True, eq=False)
class ElmModel:
    """Random hidden layer plus (once fitted) the solved output weights.

    A fitted model is immutable and safe to share across threads.
    """

    config: ElmConfig
    input_weights: np.ndarray  # (L, d)
    biases: np.ndarray  # (L,)
    centers: np.ndarray  # (L, d)
    output_weights: np.ndarray | None = None  # (L, 1) once fitted
    normalizer: NormalizerStats | None = None
    train_time_s: float | None = None

    @property
    def fitted(self) -> bool:
        return self.output_weights is not None

    @property
    def feature_dim(self) -> int:
        return self.input_weights.shape[1]


def init_random(config: ElmConfig, feature_dim: int, training_inputs) -> ElmModel:
    """Draw the random hidden layer.

    Weights and biases are i.i.d. uniform on [-1, 1]; centers are rows of
    ``training_inputs`` sampled with replacement. Deterministic for a given
    (config, feature_dim, training_inputs).
    """
    if feature_dim < 1:
        raise ValueError("empty feature space")
    x = as_matrix(training_inputs, "training_inputs")
    if x.shape[1] != feature_dim:
        raise ValueError(
            f"training inputs have {x.shape[1]} features, expected {feature_dim}"
        )
    rng = np.random.default_rng(config.seed)
    weights = rng.uniform(-1.0, 1.0, size=(config.hidden_count, feature_dim))
    biases = rng.uniform(-1.0, 1.0, size=config.hidden_count)
    rows = rng.integers(0, x.shape[0], size=config.hidden_count)
    return ElmModel(
        config=config,
        input_weights=weights,
        biases=biases,
        centers=x[rows].copy(),
    )


def hidden_matrix(model: ElmModel, inputs) -> np.ndarray:
    """Hidden-layer output matrix H: one row per sample, one column per neuron."""
    x = as_matrix(inputs, "inputs")
    if x.shape[1] != model.feature_dim:
        raise ValueError(
            f"inputs have {x.shape[1]} features, model expects {model.feature_dim}"
        )
    cfg = model.config
    pre = cfg.alpha * (x @ model.input_weights.T + model.biases)
    if cfg.alpha != 1.0:
        c = model.centers
        sq = (
            (x * x).sum(axis=1)[:, None]
            + (c * c).sum(axis=1)[None, :]
            - 2.0 * (x @ c.T)
        )
        dists = np.sqrt(np.maximum(sq, 0.0))
        pre = pre + (1.0 - cfg.alpha) * cfg.rbf_width * dists
    return _TRANSFER[cfg.activation](pre)


def fit(model: ElmModel, inputs, labels) -> ElmModel:
    """Solve the output weights by least squares against {0,1} labels.

    Returns a new fitted model with the training wall-time recorded.
    """
    x = as_matrix(inputs, "inputs")
    t = np.asarray(labels, dtype=np.float64).reshape(-1)
    if t.shape[0] != x.shape[0]:
        raise ValueError("incompatible shapes")
    if not np.all((t == 0.0) | (t == 1.0)):
        raise ValueError("labels must be 0 or 1")
    start = time.perf_counter()
    h = hidden_matrix(model, x)
    beta = lstsq_solve(h, t[:, None], ridge=model.config.ridge, rcond=model.config.rcond)
    elapsed = time.perf_counter() - start
    return replace(model, output_weights=beta, train_time_s=elapsed)


def predict_scores(model: ElmModel, inputs) -> np.ndarray:
    """Raw output scores, one per input row: H @ beta."""
    if not model.fitted:
        raise ValueError("model not fitted")
    return (hidden_matrix(model, inputs) @ model.output_weights)[:, 0]


def predict_class(model: ElmModel, inputs) -> np.ndarray:
    """Class per input row: 1 (diabetes) when the raw score reaches 0.5."""
    return (predict_scores(model, inputs) >= DECISION_THRESHOLD).astype(np.int64)
