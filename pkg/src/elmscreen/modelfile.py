"""Model persistence: a versioned, human-inspectable JSON document.

Weights are serialized as JSON numbers using Python's shortest round-trip
float rendering, so ``load_model(save_model(m))`` reproduces every weight
bit-exactly.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .data import FEATURE_KEYS, NormalizerStats
from .elm import ActivationKind, ElmConfig, ElmModel

__all__ = ["FORMAT_VERSION", "save_model", "load_model"]

FORMAT_VERSION = 1

_ARRAY_FIELDS = ("input_weights", "biases", "centers", "output_weights")


def _pack_array(arr: np.ndarray) -> dict:
    return {"shape": list(arr.shape), "data": [float(v) for v in arr.ravel()]}


def _unpack_array(obj, name: str) -> np.ndarray:
    try:
        shape = tuple(int(s) for s in obj["shape"])
        data = np.array(obj["data"], dtype=np.float64)
    except (KeyError, TypeError, ValueError):
        raise ValueError(f"corrupt model file: bad array '{name}'") from None
    if data.size != int(np.prod(shape)):
        raise ValueError(f"corrupt model file: array '{name}' shape/data mismatch")
    if not np.isfinite(data).all():
        raise ValueError(f"corrupt model file: array '{name}' has non-finite entries")
    return data.reshape(shape)


def save_model(model: ElmModel, path) -> None:
    """Write a fitted model (with normalizer statistics) to ``path``."""
    if not model.fitted:
        raise ValueError("model not fitted")
    if model.normalizer is None:
        raise ValueError("model has no normalizer statistics")
    cfg = model.config
    doc = {
        "format_version": FORMAT_VERSION,
        "created_at": datetime.now(timezone.utc).isoformat(),
        "config": {
            "hidden_count": cfg.hidden_count,
            "activation": cfg.activation.value,
            "alpha": cfg.alpha,
            "rbf_width": cfg.rbf_width,
            "ridge": cfg.ridge,
            "rcond": cfg.rcond,
            "seed": cfg.seed,
        },
        "normalizer": {
            "age_min": model.normalizer.age_min,
            "age_max": model.normalizer.age_max,
        },
        "feature_names": list(FEATURE_KEYS),
        "arrays": {
            name: _pack_array(getattr(model, name)) for name in _ARRAY_FIELDS
        },
        "train_time_s": model.train_time_s,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_model(path) -> ElmModel:
    """Read a model document written by :func:`save_model`."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"corrupt model file: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("corrupt model file: not a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {version!r}")
    try:
        raw_cfg = doc["config"]
        config = ElmConfig(
            hidden_count=int(raw_cfg["hidden_count"]),
            activation=ActivationKind.from_name(raw_cfg["activation"]),
            alpha=float(raw_cfg["alpha"]),
            rbf_width=float(raw_cfg["rbf_width"]),
            ridge=float(raw_cfg["ridge"]),
            rcond=float(raw_cfg["rcond"]),
            seed=int(raw_cfg["seed"]),
        )
        normalizer = NormalizerStats(
            age_min=float(doc["normalizer"]["age_min"]),
            age_max=float(doc["normalizer"]["age_max"]),
        )
        arrays = {name: _unpack_array(doc["arrays"][name], name) for name in _ARRAY_FIELDS}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"corrupt model file: missing field {exc}") from None

    weights = arrays["input_weights"]
    centers = arrays["centers"]
    biases = arrays["biases"]
    beta = arrays["output_weights"]
    L = config.hidden_count
    if weights.ndim != 2 or weights.shape[0] != L:
        raise ValueError("corrupt model file: input_weights shape mismatch")
    if centers.shape != weights.shape:
        raise ValueError("corrupt model file: centers shape mismatch")
    if biases.shape != (L,):
        raise ValueError("corrupt model file: biases shape mismatch")
    if beta.shape != (L, 1):
        raise ValueError("corrupt model file: output_weights shape mismatch")

    train_time = doc.get("train_time_s")
    return ElmModel(
        config=config,
        input_weights=weights,
        biases=biases,
        centers=centers,
        output_weights=beta,
        normalizer=normalizer,
        train_time_s=None if train_time is None else float(train_time),
    )
