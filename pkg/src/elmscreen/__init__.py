"""Extreme-learning-machine screening pipeline for a 16-question diabetes
risk questionnaire: data ingestion, training, metrics, a transfer-function
benchmark, model persistence, a CLI and an HTTP prediction service.
"""

__version__ = "0.1.0"

from .data import (
    ATTRIBUTE_NAMES,
    FEATURE_KEYS,
    SYMPTOM_KEYS,
    DatasetSplit,
    NormalizerStats,
    QuestionnaireRecord,
    encode_features,
    encode_records,
    fit_normalizer,
    label_vector,
    parse_csv,
    parse_csv_file,
    split_dataset,
)
from .datasets import bundled_dataset_path
from .elm import (
    ActivationKind,
    ElmConfig,
    ElmModel,
    apply_activation,
    fit,
    hidden_matrix,
    init_random,
    predict_class,
    predict_scores,
)
from .linalg import lstsq_solve, pseudoinverse
from .metrics import (
    BenchmarkTable,
    ConfusionMatrix,
    MetricsReport,
    benchmark_csv,
    benchmark_transfer_functions,
    confusion,
    format_benchmark_table,
    report,
)
from .modelfile import load_model, save_model
from .service import PredictionService, make_server

__all__ = [
    "ATTRIBUTE_NAMES",
    "FEATURE_KEYS",
    "SYMPTOM_KEYS",
    "ActivationKind",
    "BenchmarkTable",
    "ConfusionMatrix",
    "DatasetSplit",
    "ElmConfig",
    "ElmModel",
    "MetricsReport",
    "NormalizerStats",
    "PredictionService",
    "QuestionnaireRecord",
    "apply_activation",
    "benchmark_csv",
    "benchmark_transfer_functions",
    "bundled_dataset_path",
    "confusion",
    "encode_features",
    "encode_records",
    "fit",
    "fit_normalizer",
    "format_benchmark_table",
    "hidden_matrix",
    "init_random",
    "label_vector",
    "load_model",
    "lstsq_solve",
    "make_server",
    "parse_csv",
    "parse_csv_file",
    "predict_class",
    "predict_scores",
    "pseudoinverse",
    "report",
    "save_model",
    "split_dataset",
]
