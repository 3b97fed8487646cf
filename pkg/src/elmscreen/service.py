"""HTTP prediction service backing the questionnaire UI.

The model is loaded once and treated as read-only; request handling is
stateless and submitted answers are never stored. Responses carry
permissive CORS headers so a browser UI served elsewhere can call the API.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import urlsplit

from .data import FEATURE_KEYS, SYMPTOM_KEYS, QuestionnaireRecord, encode_features
from .elm import DECISION_THRESHOLD, ElmModel, predict_scores
from .modelfile import FORMAT_VERSION

__all__ = ["DISCLAIMER", "FieldError", "PredictionService", "record_from_payload", "make_server"]

DISCLAIMER = "not a medical diagnosis"


class FieldError(ValueError):
    """A request field is missing or invalid; maps to HTTP 400."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


def record_from_payload(payload) -> QuestionnaireRecord:
    """Build a record from a JSON request body.

    Requires all 16 keys: integer ``age``, ``gender`` of Male/Female, and
    true/false literals for the 14 symptom keys.
    """
    if not isinstance(payload, dict):
        raise FieldError("", "request body must be a JSON object")
    for key in FEATURE_KEYS:
        if key not in payload:
            raise FieldError(key, f"missing field '{key}'")

    age = payload["age"]
    if isinstance(age, bool) or not isinstance(age, (int, float)):
        raise FieldError("age", "field 'age' must be an integer")
    if isinstance(age, float) and not age.is_integer():
        raise FieldError("age", "field 'age' must be an integer")

    gender_raw = payload["gender"]
    if not isinstance(gender_raw, str):
        raise FieldError("gender", "field 'gender' must be 'Male' or 'Female'")
    gender = {"male": "Male", "female": "Female"}.get(gender_raw.strip().lower())
    if gender is None:
        raise FieldError("gender", f"field 'gender' must be 'Male' or 'Female', got '{gender_raw}'")

    symptoms = {}
    for key in SYMPTOM_KEYS:
        value = payload[key]
        if not isinstance(value, bool):
            raise FieldError(key, f"field '{key}' must be true or false")
        symptoms[key] = value

    return QuestionnaireRecord(age=int(age), gender=gender, **symptoms)


class PredictionService:
    """Stateless prediction core shared by the HTTP handler and tests."""

    def __init__(self, model: ElmModel | None = None):
        if model is not None:
            if not model.fitted:
                raise ValueError("model not fitted")
            if model.normalizer is None:
                raise ValueError("model has no normalizer statistics")
        self._model = model

    @property
    def model_loaded(self) -> bool:
        return self._model is not None

    def model_info(self) -> dict | None:
        if self._model is None:
            return None
        return {
            "activation": self._model.config.activation.value,
            "hidden_count": self._model.config.hidden_count,
            "feature_names": list(FEATURE_KEYS),
            "format_version": FORMAT_VERSION,
            "age_range": [self._model.normalizer.age_min, self._model.normalizer.age_max],
            "age_handling": "ages outside the training range are clamped, not rejected",
            "disclaimer": DISCLAIMER,
        }

    def predict(self, payload) -> dict:
        """Score one request body; raises FieldError on bad input."""
        record = record_from_payload(payload)
        features = encode_features(record, self._model.normalizer)
        score = float(predict_scores(self._model, features[None, :])[0])
        return {
            "prediction": "diabetes" if score >= DECISION_THRESHOLD else "normal",
            "raw_score": score,
            "model_activation": self._model.config.activation.value,
            "disclaimer": DISCLAIMER,
        }


class _Handler(BaseHTTPRequestHandler):
    service: PredictionService  # bound by make_server

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass  # keep test output and service stdout quiet

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._cors_headers()
        self.end_headers()
        self.wfile.write(body)

    def _cors_headers(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors_headers()
        self.end_headers()

    def do_GET(self):
        path = urlsplit(self.path).path
        if path == "/api/health":
            self._send(200, {"status": "ok"})
        elif path == "/api/model":
            info = self.service.model_info()
            if info is None:
                self._send(503, {"error": "no model loaded"})
            else:
                self._send(200, info)
        else:
            self._send(404, {"error": f"unknown path '{path}'"})

    def do_POST(self):
        path = urlsplit(self.path).path
        if path != "/api/predict":
            self._send(404, {"error": f"unknown path '{path}'"})
            return
        if not self.service.model_loaded:
            self._send(503, {"error": "no model loaded"})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            payload = json.loads(self.rfile.read(length))
        except (ValueError, TypeError):
            self._send(400, {"error": "request body is not valid JSON", "field": None})
            return
        try:
            self._send(200, self.service.predict(payload))
        except FieldError as exc:
            self._send(400, {"error": str(exc), "field": exc.field})


def make_server(service: PredictionService, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Build a threading HTTP server bound to ``host:port`` (0 = ephemeral).

    The caller owns the lifecycle: ``serve_forever()`` to run, ``shutdown()``
    and ``server_close()`` to stop.
    """
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((host, port), handler)
