import numpy as np
import pytest
from hypothesis import given, strategies as st

from elmscreen import ActivationKind, ElmConfig
from elmscreen.data import QuestionnaireRecord, SYMPTOM_KEYS
from elmscreen.metrics import (
    BenchmarkTable,
    ConfusionMatrix,
    benchmark_csv,
    benchmark_transfer_functions,
    confusion,
    format_benchmark_table,
    report,
)


def brute_force_counts(predicted, actual):
    """Independent recount: plain loop over pairs."""
    tp = fp = fn = tn = 0
    for p, a in zip(predicted, actual):
        if p == 1 and a == 1:
            tp += 1
        elif p == 1 and a == 0:
            fp += 1
        elif p == 0 and a == 1:
            fn += 1
        else:
            tn += 1
    return tp, fp, fn, tn


def test_confusion_all_correct():
    cm = confusion([1, 1, 0], [1, 1, 0])
    assert (cm.tp, cm.fp, cm.fn, cm.tn) == (2, 0, 0, 1)
    assert cm.total == 3


def test_confusion_crossed_pair():
    cm = confusion([1, 0], [0, 1])
    assert (cm.fp, cm.fn) == (1, 1)
    assert (cm.tp, cm.tn) == (0, 0)


def test_confusion_rejects_bad_input():
    with pytest.raises(ValueError, match="length mismatch"):
        confusion([1, 0], [1])
    with pytest.raises(ValueError, match="empty"):
        confusion([], [])
    with pytest.raises(ValueError, match="must be 0 or 1"):
        confusion([2, 0], [1, 0])


def test_report_direct_formulas():
    rep = report(ConfusionMatrix(tp=2, fp=1, fn=1, tn=6), train_time_s=0.5)
    assert rep.precision == pytest.approx(2 / 3)
    assert rep.recall == pytest.approx(2 / 3)
    assert rep.f1 == pytest.approx(2 / 3)
    assert rep.accuracy == pytest.approx(0.8)
    assert rep.train_time_s == 0.5
    assert rep.flags == ()


def test_report_f1_from_high_precision_full_recall():
    # precision 0.96, recall 1.00 -> harmonic mean 2*0.96/1.96 ~ 0.98
    rep = report(ConfusionMatrix(tp=48, fp=2, fn=0, tn=54))
    assert rep.precision == pytest.approx(0.96)
    assert rep.recall == pytest.approx(1.0)
    assert rep.f1 == pytest.approx(2 * 0.96 / 1.96)
    assert round(rep.f1, 2) == 0.98


def test_report_degenerate_cases_are_flagged_zero():
    rep = report(ConfusionMatrix(tp=0, fp=0, fn=3, tn=5))
    assert rep.precision == 0.0
    assert "precision" in rep.flags and "f1" in rep.flags
    assert not np.isnan(rep.f1)
    rep = report(ConfusionMatrix(tp=0, fp=2, fn=0, tn=5))
    assert rep.recall == 0.0
    assert "recall" in rep.flags
    with pytest.raises(ValueError, match="empty"):
        report(ConfusionMatrix(0, 0, 0, 0))


def test_confusion_matrix_rejects_negative_counts():
    with pytest.raises(ValueError, match="nonnegative"):
        ConfusionMatrix(tp=-1, fp=0, fn=0, tn=0)


def test_metrics_match_brute_force_recount():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        n = int(rng.integers(1, 51))
        predicted = rng.integers(0, 2, size=n)
        actual = rng.integers(0, 2, size=n)
        cm = confusion(predicted, actual)
        tp, fp, fn, tn = brute_force_counts(predicted, actual)
        assert (cm.tp, cm.fp, cm.fn, cm.tn) == (tp, fp, fn, tn)
        rep = report(cm)
        assert rep.accuracy == (tp + tn) / n
        if tp + fp:
            assert rep.precision == tp / (tp + fp)
        if tp + fn:
            assert rep.recall == tp / (tp + fn)


@given(st.integers(1, 50), st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
def test_f1_lies_between_precision_and_recall(tp, fp, fn, tn):
    rep = report(ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn))
    if rep.precision > 0 and rep.recall > 0:
        assert min(rep.precision, rep.recall) - 1e-12 <= rep.f1 <= max(rep.precision, rep.recall) + 1e-12
    assert rep.accuracy == (tp + tn) / (tp + fp + fn + tn)


def _records(n, labeler, seed=0):
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n):
        symptoms = {key: bool(rng.integers(0, 2)) for key in SYMPTOM_KEYS}
        records.append(
            QuestionnaireRecord(
                age=int(rng.integers(20, 66)),
                gender="Male" if rng.uniform() < 0.5 else "Female",
                label=labeler(i, symptoms),
                **symptoms,
            )
        )
    return records


def test_benchmark_covers_all_activations_and_is_deterministic():
    records = _records(40, lambda i, s: int(s["polyuria"]))
    config = ElmConfig(hidden_count=10)
    a = benchmark_transfer_functions(records, config, seeds=[0, 1])
    b = benchmark_transfer_functions(records, config, seeds=[0, 1])
    assert isinstance(a, BenchmarkTable)
    assert [row[0] for row in a.rows] == list(ActivationKind)
    assert len(a.runs) == 12
    assert a.split_sizes == (28, 4, 8)
    for run_a, run_b in zip(a.runs, b.runs):
        assert run_a.confusion == run_b.confusion
        assert run_a.report.accuracy == run_b.report.accuracy
        assert run_a.report.precision == run_b.report.precision


def test_benchmark_repeated_seed_equals_single_seed():
    records = _records(30, lambda i, s: int(s["polydipsia"]))
    config = ElmConfig(hidden_count=8)
    single = benchmark_transfer_functions(records, config, seeds=[7])
    double = benchmark_transfer_functions(records, config, seeds=[7, 7])
    for (k1, m1, _), (k2, m2, _) in zip(single.rows, double.rows):
        assert k1 is k2
        assert m1.accuracy == m2.accuracy
        assert m1.precision == m2.precision
        assert m1.recall == m2.recall
        assert m1.f1 == m2.f1


def test_benchmark_all_positive_labels_matches_constant_predictor():
    records = _records(30, lambda i, s: 1)
    table = benchmark_transfer_functions(records, ElmConfig(hidden_count=10), seeds=[0, 1])
    for run in table.runs:
        # no actual negatives in the test split
        assert run.confusion.fp == 0 and run.confusion.tn == 0
        # accuracy equals agreement with the constant-positive predictor
        assert run.report.accuracy == run.confusion.tp / run.confusion.total
        assert run.report.accuracy == run.report.recall


def test_benchmark_all_negative_labels_scores_perfectly():
    # zero targets force beta = 0, all raw scores 0, every prediction normal
    records = _records(30, lambda i, s: 0)
    table = benchmark_transfer_functions(records, ElmConfig(hidden_count=10), seeds=[0])
    for run in table.runs:
        assert run.report.accuracy == 1.0
        assert run.confusion.fp == 0


def test_benchmark_requires_seeds():
    with pytest.raises(ValueError, match="seed"):
        benchmark_transfer_functions(_records(30, lambda i, s: 0), ElmConfig(), seeds=[])


def test_format_table_has_six_rows_and_header():
    records = _records(30, lambda i, s: int(s["itching"]))
    table = benchmark_transfer_functions(records, ElmConfig(hidden_count=5), seeds=[0])
    text = format_benchmark_table(table)
    lines = text.splitlines()
    assert len(lines) == 7
    assert "activation" in lines[0] and "accuracy" in lines[0]
    assert lines[1].startswith("hardlim")
    assert lines[6].startswith("multiquadric")


def test_benchmark_csv_schema_and_content():
    records = _records(30, lambda i, s: int(s["itching"]))
    table = benchmark_transfer_functions(records, ElmConfig(hidden_count=5), seeds=[0, 1])
    lines = benchmark_csv(table).strip().splitlines()
    assert lines[0] == "activation,seed,precision,recall,f1,accuracy,train_time_s"
    assert len(lines) == 1 + 12
    first = lines[1].split(",")
    assert first[0] == "hardlim" and first[1] == "0"
    # all metric cells parse back to floats
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 7
        [float(c) for c in cells[2:]]
