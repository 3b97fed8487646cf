import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np
import pytest
import requests

from elmscreen import (
    ElmConfig,
    NormalizerStats,
    encode_records,
    fit,
    init_random,
    predict_class,
    predict_scores,
)
from elmscreen.data import SYMPTOM_KEYS
from elmscreen.service import (
    DISCLAIMER,
    FieldError,
    PredictionService,
    make_server,
    record_from_payload,
)


def _payload(age=30, gender="Female", **symptoms):
    body = {"age": age, "gender": gender}
    for key in SYMPTOM_KEYS:
        body[key] = bool(symptoms.get(key, False))
    return body


def _payload_from_record(record):
    body = {"age": record.age, "gender": record.gender}
    for key in SYMPTOM_KEYS:
        body[key] = bool(getattr(record, key))
    return body


@pytest.fixture(scope="module")
def server_url(trained_model):
    server = make_server(PredictionService(trained_model), port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


@pytest.fixture(scope="module")
def empty_server_url():
    server = make_server(PredictionService(None), port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


def test_health_endpoint(server_url):
    response = requests.get(f"{server_url}/api/health", timeout=5)
    assert response.status_code == 200
    assert response.json()["status"] == "ok"
    assert response.headers["Access-Control-Allow-Origin"] == "*"


def test_model_endpoint_describes_model(server_url, trained_model):
    response = requests.get(f"{server_url}/api/model", timeout=5)
    assert response.status_code == 200
    info = response.json()
    assert info["hidden_count"] == 50
    assert info["activation"] == trained_model.config.activation.value
    assert info["feature_names"][0] == "age" and len(info["feature_names"]) == 16
    assert info["format_version"] == 1
    assert "clamped" in info["age_handling"]


def test_model_endpoint_before_load_is_503(empty_server_url):
    response = requests.get(f"{empty_server_url}/api/model", timeout=5)
    assert response.status_code == 503
    response = requests.post(f"{empty_server_url}/api/predict", json=_payload(), timeout=5)
    assert response.status_code == 503


def test_predict_matches_library(server_url, trained_model, dataset_records):
    record = dataset_records[0]
    response = requests.post(
        f"{server_url}/api/predict", json=_payload_from_record(record), timeout=5
    )
    assert response.status_code == 200
    body = response.json()
    x = encode_records([record], trained_model.normalizer)
    expected_class = int(predict_class(trained_model, x)[0])
    expected_score = float(predict_scores(trained_model, x)[0])
    assert body["prediction"] == ("diabetes" if expected_class == 1 else "normal")
    assert body["raw_score"] == pytest.approx(expected_score, abs=0)
    assert body["model_activation"] == trained_model.config.activation.value
    assert body["disclaimer"] == DISCLAIMER
    assert (body["raw_score"] >= 0.5) == (body["prediction"] == "diabetes")


def test_predict_golden_equivalence_over_random_records(server_url, trained_model, dataset_records):
    rng = np.random.default_rng(123)
    picks = rng.integers(0, len(dataset_records), size=50)
    with requests.Session() as session:
        for i in picks:
            record = dataset_records[int(i)]
            response = session.post(
                f"{server_url}/api/predict", json=_payload_from_record(record), timeout=5
            )
            assert response.status_code == 200
            x = encode_records([record], trained_model.normalizer)
            expected = "diabetes" if int(predict_class(trained_model, x)[0]) == 1 else "normal"
            assert response.json()["prediction"] == expected


def test_predict_missing_field_is_400_naming_it(server_url):
    body = _payload()
    del body["polyuria"]
    response = requests.post(f"{server_url}/api/predict", json=body, timeout=5)
    assert response.status_code == 400
    payload = response.json()
    assert payload["field"] == "polyuria"
    assert "polyuria" in payload["error"]


def test_predict_invalid_values_are_400(server_url):
    cases = [
        ({**_payload(), "age": "forty"}, "age"),
        ({**_payload(), "age": 30.5}, "age"),
        ({**_payload(), "age": True}, "age"),
        ({**_payload(), "gender": "martian"}, "gender"),
        ({**_payload(), "itching": "yes"}, "itching"),
        ({**_payload(), "obesity": 1}, "obesity"),
    ]
    for body, field in cases:
        response = requests.post(f"{server_url}/api/predict", json=body, timeout=5)
        assert response.status_code == 400
        assert response.json()["field"] == field


def test_predict_rejects_invalid_json(server_url):
    response = requests.post(
        f"{server_url}/api/predict",
        data="{nope",
        headers={"Content-Type": "application/json"},
        timeout=5,
    )
    assert response.status_code == 400
    assert "JSON" in response.json()["error"]


def test_unknown_path_is_404(server_url):
    assert requests.get(f"{server_url}/api/nope", timeout=5).status_code == 404
    assert requests.post(f"{server_url}/api/nope", json={}, timeout=5).status_code == 404


def test_options_preflight_carries_cors_headers(server_url):
    response = requests.options(f"{server_url}/api/predict", timeout=5)
    assert response.status_code == 204
    assert response.headers["Access-Control-Allow-Origin"] == "*"
    assert "POST" in response.headers["Access-Control-Allow-Methods"]


def test_concurrent_identical_requests_agree(server_url):
    body = _payload(age=45, gender="Male", polyuria=True, polydipsia=True)

    def call(_):
        return requests.post(f"{server_url}/api/predict", json=body, timeout=10).json()

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(call, range(16)))
    assert all(r == results[0] for r in results)


def test_all_no_young_female_on_zero_weight_model():
    rng = np.random.default_rng(0)
    x = rng.uniform(size=(8, 16))
    model = fit(init_random(ElmConfig(hidden_count=4, seed=0), 16, x), x, np.zeros(8))
    model = replace(model, normalizer=NormalizerStats(20.0, 65.0))
    service = PredictionService(model)
    result = service.predict(_payload(age=20, gender="Female"))
    assert result == {
        "prediction": "normal",
        "raw_score": 0.0,
        "model_activation": "multiquadric",
        "disclaimer": DISCLAIMER,
    }


def test_record_from_payload_validation_order_and_types():
    with pytest.raises(FieldError) as err:
        record_from_payload({"age": 30})
    assert err.value.field == "gender"  # first missing key in form order
    with pytest.raises(FieldError):
        record_from_payload([1, 2, 3])
    record = record_from_payload(_payload(age=44.0, gender=" male "))
    assert record.age == 44 and record.gender == "Male"


def test_service_requires_usable_model(trained_model):
    with pytest.raises(ValueError, match="not fitted"):
        PredictionService(replace(trained_model, output_weights=None))
    with pytest.raises(ValueError, match="normalizer"):
        PredictionService(replace(trained_model, normalizer=None))
