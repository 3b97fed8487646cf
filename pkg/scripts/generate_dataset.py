#!/usr/bin/env python3
"""Regenerate the bundled questionnaire dataset.

The shipped file src/elmscreen/resources/diabetes_questionnaire.csv is a
synthetic stand-in for the public 520-row early-stage diabetes risk
questionnaire benchmark (UCI / IEEE Dataport), so the test and demo runs
work offline. It matches that benchmark's schema (same header spellings
and Yes/No / Positive/Negative vocabulary) and its 320/200 class balance,
and approximates its gender/age structure and class-conditional symptom
prevalences, with the class separation tuned so a 50-neuron random-feature
model reaches the mid-90s test accuracy the benchmark is known for. It is
generated data: no row describes a real person.

Deterministic: rerunning this script reproduces the committed file byte
for byte.

Usage: python3 scripts/generate_dataset.py [--out PATH]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

SEED = 5
N_POSITIVE = 320
N_NEGATIVE = 200

HEADER = (
    "Age,Gender,Polyuria,Polydipsia,sudden weight loss,weakness,Polyphagia,"
    "Genital thrush,visual blurring,Itching,Irritability,delayed healing,"
    "partial paresis,muscle stiffness,Alopecia,Obesity,class"
)

# Per-symptom P(yes | positive), P(yes | negative). Order matches the header.
SYMPTOM_PROBS = [
    ("Polyuria", 0.83, 0.04),
    ("Polydipsia", 0.78, 0.02),
    ("sudden weight loss", 0.66, 0.10),
    ("weakness", 0.70, 0.38),
    ("Polyphagia", 0.62, 0.20),
    ("Genital thrush", 0.28, 0.12),
    ("visual blurring", 0.58, 0.24),
    ("Itching", 0.50, 0.47),
    ("Irritability", 0.38, 0.08),
    ("delayed healing", 0.52, 0.36),
    ("partial paresis", 0.64, 0.08),
    ("muscle stiffness", 0.45, 0.26),
    ("Alopecia", 0.25, 0.50),
    ("Obesity", 0.19, 0.14),
]

# Classic osmotic/appetite symptoms co-occur within a case: a shared
# per-case severity shifts this block together, mirroring the strong
# polyuria/polydipsia correlation in the benchmark.
CORE = {"Polyuria", "Polydipsia", "sudden weight loss", "Polyphagia", "partial paresis"}
SEVERITY_SHIFT = 0.15

P_MALE_POSITIVE = 0.44  # females skew heavily positive in the benchmark
P_MALE_NEGATIVE = 0.93
YOUNG_ONSET_FRACTION = 0.20


def _age(rng: np.random.Generator, positive: bool) -> int:
    if positive:
        # Bimodal: a young-onset cluster plus the dominant mid-life cluster.
        if rng.uniform() < YOUNG_ONSET_FRACTION:
            age = rng.normal(31.0, 5.0)
        else:
            age = rng.normal(52.0, 8.0)
    else:
        age = rng.normal(45.0, 11.0)
    return int(np.clip(round(age), 20, 65))


def _row(rng: np.random.Generator, positive: bool) -> str:
    male = rng.uniform() < (P_MALE_POSITIVE if positive else P_MALE_NEGATIVE)
    age = _age(rng, positive)
    severity = rng.uniform(-1.0, 1.0) if positive else 0.0
    cells = [str(age), "Male" if male else "Female"]
    for name, p_pos, p_neg in SYMPTOM_PROBS:
        p = p_pos if positive else p_neg
        if positive and name in CORE:
            p = float(np.clip(p + SEVERITY_SHIFT * severity, 0.02, 0.98))
        if name == "Alopecia":
            # Alopecia tracks gender more than class.
            p = float(np.clip(p * (1.6 if male else 0.35), 0.02, 0.98))
        cells.append("Yes" if rng.uniform() < p else "No")
    cells.append("Positive" if positive else "Negative")
    return ",".join(cells)


def generate() -> str:
    rng = np.random.default_rng(SEED)
    labels = np.array([True] * N_POSITIVE + [False] * N_NEGATIVE)
    labels = labels[rng.permutation(labels.size)]
    lines = [HEADER]
    lines.extend(_row(rng, bool(flag)) for flag in labels)
    return "\n".join(lines) + "\n"


def main() -> None:
    default_out = (
        Path(__file__).resolve().parents[1]
        / "src"
        / "elmscreen"
        / "resources"
        / "diabetes_questionnaire.csv"
    )
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(default_out))
    args = parser.parse_args()
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(generate(), encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
