"""Locate the bundled questionnaire dataset.

The package ships a 520-row synthetic questionnaire CSV with the same
schema, class balance and per-symptom prevalences as the public
early-stage diabetes risk benchmark (see scripts/generate_dataset.py).
Set the ELMSCREEN_DATA environment variable to point the benchmark and
test suite at a different file, e.g. the real downloaded benchmark CSV.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

__all__ = ["bundled_dataset_path"]


def bundled_dataset_path() -> Path:
    override = os.environ.get("ELMSCREEN_DATA")
    if override:
        return Path(override)
    return Path(str(resources.files("elmscreen").joinpath("resources/diabetes_questionnaire.csv")))
