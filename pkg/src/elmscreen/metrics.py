"""Classification metrics and the transfer-function benchmark."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .data import (
    QuestionnaireRecord,
    encode_records,
    fit_normalizer,
    label_vector,
    split_dataset,
)
from .elm import ActivationKind, ElmConfig, fit, init_random, predict_class

__all__ = [
    "ConfusionMatrix",
    "MetricsReport",
    "BenchmarkRun",
    "BenchmarkTable",
    "confusion",
    "report",
    "benchmark_transfer_functions",
    "format_benchmark_table",
    "benchmark_csv",
]


@dataclass(frozen=True)
class ConfusionMatrix:
    """Binary confusion counts; label 1 is the positive (diabetes) class."""

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("counts must be nonnegative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricsReport:
    """Precision, recall, F1 and accuracy plus the training wall-time.

    ``flags`` names any metric whose 0/0 case was defined as 0.
    """

    precision: float
    recall: float
    f1: float
    accuracy: float
    train_time_s: float
    flags: tuple[str, ...] = ()


def confusion(predicted, actual) -> ConfusionMatrix:
    """Count tp/fp/fn/tn between two equal-length {0,1} vectors."""
    p = np.asarray(predicted, dtype=np.int64).reshape(-1)
    a = np.asarray(actual, dtype=np.int64).reshape(-1)
    if p.shape != a.shape:
        raise ValueError("length mismatch")
    if p.size == 0:
        raise ValueError("empty vectors")
    for name, v in (("predicted", p), ("actual", a)):
        if not np.all((v == 0) | (v == 1)):
            raise ValueError(f"{name} values must be 0 or 1")
    return ConfusionMatrix(
        tp=int(np.sum((p == 1) & (a == 1))),
        fp=int(np.sum((p == 1) & (a == 0))),
        fn=int(np.sum((p == 0) & (a == 1))),
        tn=int(np.sum((p == 0) & (a == 0))),
    )


def report(cm: ConfusionMatrix, train_time_s: float = 0.0) -> MetricsReport:
    """Derive precision, recall, F1 and accuracy from confusion counts.

    Degenerate 0/0 ratios are defined as 0 and recorded in ``flags``.
    """
    if cm.total == 0:
        raise ValueError("empty confusion matrix")
    flags = []
    if cm.tp + cm.fp > 0:
        precision = cm.tp / (cm.tp + cm.fp)
    else:
        precision = 0.0
        flags.append("precision")
    if cm.tp + cm.fn > 0:
        recall = cm.tp / (cm.tp + cm.fn)
    else:
        recall = 0.0
        flags.append("recall")
    if precision + recall > 0:
        f1 = 2.0 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
        flags.append("f1")
    accuracy = (cm.tp + cm.tn) / cm.total
    return MetricsReport(
        precision=precision,
        recall=recall,
        f1=f1,
        accuracy=accuracy,
        train_time_s=float(train_time_s),
        flags=tuple(flags),
    )


@dataclass(frozen=True)
class BenchmarkRun:
    """Result of one (activation, seed) train/evaluate round."""

    activation: ActivationKind
    seed: int
    report: MetricsReport
    confusion: ConfusionMatrix


@dataclass(frozen=True)
class BenchmarkTable:
    """Mean test metrics per transfer function plus the per-seed raw runs.

    ``rows`` holds one (activation, mean report, summed confusion) triple
    per activation; the summed confusion aggregates all seeds.
    """

    rows: tuple[tuple[ActivationKind, MetricsReport, ConfusionMatrix], ...]
    runs: tuple[BenchmarkRun, ...]
    seeds: tuple[int, ...]
    split_sizes: tuple[int, int, int]


def benchmark_transfer_functions(
    records: Sequence[QuestionnaireRecord],
    config: ElmConfig,
    seeds: Sequence[int],
    stratified: bool = True,
) -> BenchmarkTable:
    """Train and evaluate every transfer function over the given seeds.

    Each seed drives both the dataset split and the random hidden layer, so
    all activations see identical splits. Metrics are averaged over seeds;
    training time is the wall-clock around each fit.
    """
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise ValueError("at least one seed required")

    prepared = []
    for seed in seeds:
        split = split_dataset(records, seed, stratified=stratified)
        stats = fit_normalizer(split.train)
        prepared.append(
            (
                seed,
                encode_records(split.train, stats),
                label_vector(split.train),
                encode_records(split.test, stats),
                label_vector(split.test),
            )
        )

    runs = []
    for kind in ActivationKind:
        for seed, x_train, t_train, x_test, t_test in prepared:
            cfg = replace(config, activation=kind, seed=seed)
            model = fit(init_random(cfg, x_train.shape[1], x_train), x_train, t_train)
            cm = confusion(predict_class(model, x_test), t_test)
            runs.append(BenchmarkRun(kind, seed, report(cm, model.train_time_s), cm))

    rows = []
    for kind in ActivationKind:
        kind_runs = [r for r in runs if r.activation is kind]
        mean = MetricsReport(
            precision=float(np.mean([r.report.precision for r in kind_runs])),
            recall=float(np.mean([r.report.recall for r in kind_runs])),
            f1=float(np.mean([r.report.f1 for r in kind_runs])),
            accuracy=float(np.mean([r.report.accuracy for r in kind_runs])),
            train_time_s=float(np.mean([r.report.train_time_s for r in kind_runs])),
            flags=tuple(sorted({f for r in kind_runs for f in r.report.flags})),
        )
        total = ConfusionMatrix(
            tp=sum(r.confusion.tp for r in kind_runs),
            fp=sum(r.confusion.fp for r in kind_runs),
            fn=sum(r.confusion.fn for r in kind_runs),
            tn=sum(r.confusion.tn for r in kind_runs),
        )
        rows.append((kind, mean, total))

    n = len(records)
    n_train, n_val = 7 * n // 10, n // 10
    return BenchmarkTable(
        rows=tuple(rows),
        runs=tuple(runs),
        seeds=seeds,
        split_sizes=(n_train, n_val, n - n_train - n_val),
    )


def format_benchmark_table(table: BenchmarkTable) -> str:
    """Human-readable aligned table of mean metrics per activation."""
    lines = [
        f"{'activation':<14}{'precision':>10}{'recall':>10}{'f1':>10}"
        f"{'accuracy':>10}{'time_s':>10}"
    ]
    for kind, mean, _ in table.rows:
        lines.append(
            f"{kind.value:<14}{mean.precision:>10.4f}{mean.recall:>10.4f}"
            f"{mean.f1:>10.4f}{mean.accuracy:>10.4f}{mean.train_time_s:>10.4f}"
        )
    return "\n".join(lines)


def benchmark_csv(table: BenchmarkTable) -> str:
    """Machine-readable per-seed rows: activation,seed,precision,recall,f1,accuracy,train_time_s."""
    lines = ["activation,seed,precision,recall,f1,accuracy,train_time_s"]
    for run in table.runs:
        r = run.report
        lines.append(
            f"{run.activation.value},{run.seed},{r.precision!r},{r.recall!r},"
            f"{r.f1!r},{r.accuracy!r},{r.train_time_s!r}"
        )
    return "\n".join(lines) + "\n"
