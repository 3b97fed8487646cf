"""Questionnaire dataset handling: CSV parsing, feature encoding, splitting.

A record is one respondent's answers to the 16-question screening form
(age, gender, 14 yes/no symptom questions) plus an optional class label
(1 = diabetes, 0 = normal).
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "ATTRIBUTE_NAMES",
    "CLASS_NAME",
    "FEATURE_KEYS",
    "SYMPTOM_KEYS",
    "QuestionnaireRecord",
    "NormalizerStats",
    "DatasetSplit",
    "parse_csv",
    "parse_csv_file",
    "fit_normalizer",
    "encode_features",
    "encode_records",
    "label_vector",
    "split_dataset",
]

# Questionnaire attributes, in form order. ATTRIBUTE_NAMES are the
# human-readable column headings; FEATURE_KEYS are the matching snake_case
# identifiers used for record fields and API payloads.
ATTRIBUTE_NAMES = (
    "Age",
    "Gender",
    "Polyuria",
    "Polydipsia",
    "Sudden weight loss",
    "Weakness",
    "Polyphagia",
    "Genital thrush",
    "Visual blurring",
    "Itching",
    "Irritability",
    "Delayed healing",
    "Partial paresis",
    "Muscle stiffness",
    "Alopecia",
    "Obesity",
)
CLASS_NAME = "Class"

FEATURE_KEYS = (
    "age",
    "gender",
    "polyuria",
    "polydipsia",
    "sudden_weight_loss",
    "weakness",
    "polyphagia",
    "genital_thrush",
    "visual_blurring",
    "itching",
    "irritability",
    "delayed_healing",
    "partial_paresis",
    "muscle_stiffness",
    "alopecia",
    "obesity",
)
SYMPTOM_KEYS = FEATURE_KEYS[2:]

_ATTRIBUTE_FOR_KEY = dict(zip(FEATURE_KEYS, ATTRIBUTE_NAMES))

# Accepted class-label spellings (the public benchmark file says
# Positive/Negative, the questionnaire form says Diabetes/Normal, and the
# misspelling "Diabeties" appears in the wild).
_POSITIVE_LABELS = {"diabetes", "diabeties", "positive"}
_NEGATIVE_LABELS = {"normal", "negative"}

LABEL_DIABETES = 1
LABEL_NORMAL = 0


def _normalize_header(name: str) -> str:
    return re.sub(r"[\s_\-]+", "", name).lower()


_HEADER_KEYS = {_normalize_header(n): k for n, k in zip(ATTRIBUTE_NAMES, FEATURE_KEYS)}
_HEADER_KEYS[_normalize_header(CLASS_NAME)] = "label"


@dataclass(frozen=True)
class QuestionnaireRecord:
    """One respondent's 16 answers plus an optional class label."""

    age: int
    gender: str  # "Male" or "Female"
    polyuria: bool
    polydipsia: bool
    sudden_weight_loss: bool
    weakness: bool
    polyphagia: bool
    genital_thrush: bool
    visual_blurring: bool
    itching: bool
    irritability: bool
    delayed_healing: bool
    partial_paresis: bool
    muscle_stiffness: bool
    alopecia: bool
    obesity: bool
    label: int | None = None  # 1 = diabetes, 0 = normal

    def __post_init__(self):
        if self.gender not in ("Male", "Female"):
            raise ValueError(f"gender must be 'Male' or 'Female', got {self.gender!r}")
        if self.label not in (None, LABEL_NORMAL, LABEL_DIABETES):
            raise ValueError(f"label must be 0, 1 or None, got {self.label!r}")


@dataclass(frozen=True)
class NormalizerStats:
    """Age range of the training split, used for min-max scaling."""

    age_min: float
    age_max: float

    def __post_init__(self):
        if self.age_min > self.age_max:
            raise ValueError("age_min must not exceed age_max")


@dataclass(frozen=True)
class DatasetSplit:
    """Disjoint 70/10/20 partition of a record list."""

    train: tuple[QuestionnaireRecord, ...]
    validation: tuple[QuestionnaireRecord, ...]
    test: tuple[QuestionnaireRecord, ...]
    seed: int
    ratios: tuple[float, float, float] = (0.70, 0.10, 0.20)


def parse_csv(text: str | bytes) -> list[QuestionnaireRecord]:
    """Parse questionnaire records from CSV text.

    The first line must be a header. Header names are matched ignoring case,
    whitespace, hyphens and underscores, in any column order. Symptom cells
    accept yes/no in any case. The class column is optional; without it the
    records carry no label. Errors cite 1-based file line numbers.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ValueError("missing header")

    columns: dict[str, int] = {}
    for i, cell in enumerate(rows[0]):
        key = _HEADER_KEYS.get(_normalize_header(cell))
        if key is None:
            raise ValueError(f"unknown column '{cell.strip()}'")
        if key in columns:
            raise ValueError(f"duplicate column '{cell.strip()}'")
        columns[key] = i
    for key in FEATURE_KEYS:
        if key not in columns:
            raise ValueError(f"missing column '{_ATTRIBUTE_FOR_KEY[key]}'")

    records = []
    for line, row in enumerate(rows[1:], start=2):
        if all(not cell.strip() for cell in row):
            continue  # ignore blank lines
        if len(row) != len(rows[0]):
            raise ValueError(f"row {line}: expected {len(rows[0])} cells, got {len(row)}")
        records.append(_parse_row(row, columns, line))
    return records


def parse_csv_file(path) -> list[QuestionnaireRecord]:
    with open(path, "rb") as fh:
        return parse_csv(fh.read())


def _parse_row(row: list[str], columns: dict[str, int], line: int) -> QuestionnaireRecord:
    def cell(key: str) -> str:
        return row[columns[key]].strip()

    age_text = cell("age")
    try:
        age = int(age_text)
    except ValueError:
        raise ValueError(f"row {line}: non-integer age '{age_text}'") from None

    gender_text = cell("gender")
    gender = {"male": "Male", "female": "Female"}.get(gender_text.lower())
    if gender is None:
        raise ValueError(f"row {line}, column 'Gender': unrecognized value '{gender_text}'")

    symptoms = {}
    for key in SYMPTOM_KEYS:
        value = cell(key)
        lowered = value.lower()
        if lowered == "yes":
            symptoms[key] = True
        elif lowered == "no":
            symptoms[key] = False
        else:
            raise ValueError(
                f"row {line}, column '{_ATTRIBUTE_FOR_KEY[key]}': unrecognized value '{value}'"
            )

    label = None
    if "label" in columns:
        value = cell("label")
        lowered = value.lower()
        if lowered in _POSITIVE_LABELS:
            label = LABEL_DIABETES
        elif lowered in _NEGATIVE_LABELS:
            label = LABEL_NORMAL
        else:
            raise ValueError(f"row {line}, column 'Class': unrecognized value '{value}'")

    return QuestionnaireRecord(age=age, gender=gender, label=label, **symptoms)


def fit_normalizer(train: Sequence[QuestionnaireRecord]) -> NormalizerStats:
    """Age min/max over the training records only (no leakage from test data)."""
    if not train:
        raise ValueError("empty training set")
    ages = [r.age for r in train]
    return NormalizerStats(age_min=float(min(ages)), age_max=float(max(ages)))


def encode_features(record: QuestionnaireRecord, stats: NormalizerStats) -> np.ndarray:
    """16-entry feature vector: scaled age, gender flag, 14 symptom flags.

    Age is min-max scaled to [0, 1] and clamped for out-of-range values;
    a degenerate training range maps every age to 0.5. Male encodes as 1.
    """
    span = stats.age_max - stats.age_min
    if span == 0:
        age = 0.5
    else:
        age = min(max((record.age - stats.age_min) / span, 0.0), 1.0)
    values = [age, 1.0 if record.gender == "Male" else 0.0]
    values.extend(1.0 if getattr(record, key) else 0.0 for key in SYMPTOM_KEYS)
    return np.array(values, dtype=np.float64)


def encode_records(records: Sequence[QuestionnaireRecord], stats: NormalizerStats) -> np.ndarray:
    """Stack encoded feature vectors into an N x 16 matrix."""
    if not records:
        return np.zeros((0, len(FEATURE_KEYS)))
    return np.stack([encode_features(r, stats) for r in records])


def label_vector(records: Sequence[QuestionnaireRecord]) -> np.ndarray:
    """Labels as an int vector; every record must be labeled."""
    if any(r.label is None for r in records):
        raise ValueError("labels required")
    return np.array([r.label for r in records], dtype=np.int64)


def _apportion(sizes: list[int], total: int, caps: list[int]) -> list[int]:
    """Split ``total`` across groups proportionally to ``sizes``.

    Largest-remainder rounding: each group ends within one record of its
    exact proportional share (subject to ``caps``).
    """
    n = sum(sizes)
    quotas = [total * s / n for s in sizes]
    counts = [min(int(q), c) for q, c in zip(quotas, caps)]
    while sum(counts) < total:
        candidates = [i for i in range(len(sizes)) if counts[i] < caps[i]]
        pick = max(candidates, key=lambda i: (quotas[i] - counts[i], sizes[i], -i))
        counts[pick] += 1
    return counts


def split_dataset(
    records: Sequence[QuestionnaireRecord], seed: int, stratified: bool = True
) -> DatasetSplit:
    """Seeded 70/10/20 partition into train/validation/test.

    Sizes are floor(0.7 N), floor(0.1 N) and the remainder. With
    ``stratified`` (the default) each part keeps class proportions within
    one record of the overall dataset.
    """
    n = len(records)
    if n < 3:
        raise ValueError("dataset too small to split")
    n_train = 7 * n // 10
    n_val = n // 10
    rng = np.random.default_rng(seed)

    if not stratified:
        order = rng.permutation(n)
        shuffled = [records[i] for i in order]
        parts = [
            shuffled[:n_train],
            shuffled[n_train : n_train + n_val],
            shuffled[n_train + n_val :],
        ]
    else:
        groups: dict[int, list[QuestionnaireRecord]] = {}
        for record in records:
            key = -1 if record.label is None else record.label
            groups.setdefault(key, []).append(record)
        ordered_groups = [groups[key] for key in sorted(groups)]
        shuffled_groups = []
        for group in ordered_groups:
            order = rng.permutation(len(group))
            shuffled_groups.append([group[i] for i in order])

        sizes = [len(g) for g in shuffled_groups]
        train_counts = _apportion(sizes, n_train, caps=sizes)
        remaining = [s - c for s, c in zip(sizes, train_counts)]
        val_counts = _apportion(sizes, n_val, caps=remaining)

        parts = [[], [], []]
        for group, tc, vc in zip(shuffled_groups, train_counts, val_counts):
            parts[0].extend(group[:tc])
            parts[1].extend(group[tc : tc + vc])
            parts[2].extend(group[tc + vc :])
        # Shuffle each merged part so records are not grouped by class.
        parts = [[part[i] for i in rng.permutation(len(part))] for part in parts]

    return DatasetSplit(
        train=tuple(parts[0]),
        validation=tuple(parts[1]),
        test=tuple(parts[2]),
        seed=int(seed),
    )
