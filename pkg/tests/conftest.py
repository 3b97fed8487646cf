import numpy as np
import pytest

from elmscreen import (
    ElmConfig,
    fit,
    fit_normalizer,
    init_random,
    parse_csv_file,
    split_dataset,
    encode_records,
    label_vector,
)
from elmscreen.datasets import bundled_dataset_path


@pytest.fixture(scope="session")
def dataset_records():
    return parse_csv_file(bundled_dataset_path())


@pytest.fixture(scope="session")
def trained_model(dataset_records):
    """A model trained with the default configuration on split seed 0."""
    from dataclasses import replace

    split = split_dataset(dataset_records, seed=0)
    stats = fit_normalizer(split.train)
    x_train = encode_records(split.train, stats)
    model = fit(
        init_random(ElmConfig(seed=0), x_train.shape[1], x_train),
        x_train,
        label_vector(split.train),
    )
    return replace(model, normalizer=stats)


def random_matrix(rng: np.random.Generator, max_side: int = 20) -> np.ndarray:
    """Random matrix; roughly a third are made rank-deficient on purpose."""
    rows = int(rng.integers(1, max_side + 1))
    cols = int(rng.integers(1, max_side + 1))
    if rng.uniform() < 0.35 and min(rows, cols) > 1:
        rank = int(rng.integers(1, min(rows, cols)))
        return rng.normal(size=(rows, rank)) @ rng.normal(size=(rank, cols))
    return rng.uniform(-5.0, 5.0, size=(rows, cols))


def penrose_defects(m: np.ndarray, p: np.ndarray) -> list[float]:
    """Relative Frobenius-norm violations of the four Penrose conditions."""

    def rel(err: np.ndarray, ref: float) -> float:
        return float(np.linalg.norm(err) / max(ref, 1e-30))

    mp = m @ p
    pm = p @ m
    return [
        rel(mp @ m - m, np.linalg.norm(m)),
        rel(pm @ p - p, max(np.linalg.norm(p), 1.0)),
        rel(mp.T - mp, max(np.linalg.norm(mp), 1.0)),
        rel(pm.T - pm, max(np.linalg.norm(pm), 1.0)),
    ]
