"""Command-line interface: train, eval, predict, benchmark, serve.

Exit codes: 0 success, 1 runtime error, 2 usage error. Results go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import __version__
from .data import (
    FEATURE_KEYS,
    LABEL_DIABETES,
    QuestionnaireRecord,
    encode_records,
    fit_normalizer,
    label_vector,
    parse_csv_file,
    split_dataset,
)
from .elm import ActivationKind, ElmConfig, fit, init_random, predict_class, predict_scores
from .metrics import benchmark_csv, benchmark_transfer_functions, confusion, format_benchmark_table, report
from .modelfile import load_model, save_model
from .service import PredictionService, make_server


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _activation(text: str) -> ActivationKind:
    try:
        return ActivationKind.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--hidden", type=_positive_int, default=50,
                        help="hidden neuron count (default 50)")
    parser.add_argument("--activation", type=_activation, default=ActivationKind.MULTIQUADRIC,
                        help="transfer function (default multiquadric)")
    parser.add_argument("--alpha", type=float, default=1.0,
                        help="dot-product vs RBF-distance mixing in [0,1] (default 1.0)")
    parser.add_argument("--gamma", type=float, default=1.0,
                        help="RBF distance width (default 1.0)")
    parser.add_argument("--ridge", type=float, default=0.0,
                        help="ridge regularization (default 0: minimum-norm solve)")
    parser.add_argument("--rcond", type=float, default=1e-12,
                        help="singular-value cutoff for the pseudoinverse (default 1e-12)")


def _config_from_args(args, seed: int) -> ElmConfig:
    return ElmConfig(
        hidden_count=args.hidden,
        activation=args.activation,
        alpha=args.alpha,
        rbf_width=args.gamma,
        ridge=args.ridge,
        rcond=args.rcond,
        seed=seed,
    )


def _print_metrics(name: str, model, records, stats) -> None:
    if not records:
        print(f"{name:<11} (empty)")
        return
    x = encode_records(records, stats)
    cm = confusion(predict_class(model, x), label_vector(records))
    rep = report(cm, model.train_time_s or 0.0)
    print(
        f"{name:<11} accuracy={rep.accuracy:.4f} precision={rep.precision:.4f} "
        f"recall={rep.recall:.4f} f1={rep.f1:.4f}  "
        f"tp={cm.tp} fp={cm.fp} fn={cm.fn} tn={cm.tn}"
    )


def cmd_train(args) -> int:
    records = parse_csv_file(args.data)
    if not records:
        raise ValueError("no records")
    if any(r.label is None for r in records):
        raise ValueError("labels required for training")
    split = split_dataset(records, args.seed, stratified=not args.no_stratify)
    stats = fit_normalizer(split.train)
    x_train = encode_records(split.train, stats)
    config = _config_from_args(args, args.seed)
    model = fit(init_random(config, x_train.shape[1], x_train), x_train, label_vector(split.train))
    model = replace(model, normalizer=stats)

    print(f"parsed {len(records)} records from {args.data}")
    print(
        f"split sizes: train={len(split.train)} validation={len(split.validation)} "
        f"test={len(split.test)} (seed {args.seed})"
    )
    print(
        f"model: hidden={config.hidden_count} activation={config.activation.value} "
        f"alpha={config.alpha} train_time={model.train_time_s:.4f}s"
    )
    for name, part in (("train", split.train), ("validation", split.validation), ("test", split.test)):
        _print_metrics(name, model, part, stats)
    save_model(model, args.out)
    print(f"model written to {args.out}")
    return 0


def cmd_eval(args) -> int:
    model = load_model(args.model)
    records = parse_csv_file(args.data)
    if not records:
        raise ValueError("no records")
    if any(r.label is None for r in records):
        raise ValueError("labels required for eval")
    x = encode_records(records, model.normalizer)
    cm = confusion(predict_class(model, x), label_vector(records))
    rep = report(cm, model.train_time_s or 0.0)
    print(f"records  : {len(records)}")
    print(f"accuracy : {rep.accuracy:.4f}")
    print(f"precision: {rep.precision:.4f}")
    print(f"recall   : {rep.recall:.4f}")
    print(f"f1       : {rep.f1:.4f}")
    if rep.flags:
        print(f"flagged 0/0 metrics: {', '.join(rep.flags)}")
    print(f"confusion: tp={cm.tp} fp={cm.fp} fn={cm.fn} tn={cm.tn}")
    return 0


def _record_from_answers(text: str) -> QuestionnaireRecord:
    values: dict[str, str] = {}
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        if "=" not in chunk:
            raise ValueError(f"bad answer '{chunk.strip()}', expected key=value")
        key, _, value = chunk.partition("=")
        values[key.strip().lower()] = value.strip()
    for key in FEATURE_KEYS:
        if key not in values:
            raise ValueError(f"missing field '{key}'")

    try:
        age = int(values["age"])
    except ValueError:
        raise ValueError(f"non-integer age '{values['age']}'") from None
    gender = {"male": "Male", "female": "Female"}.get(values["gender"].lower())
    if gender is None:
        raise ValueError(f"field 'gender': unrecognized value '{values['gender']}'")
    symptoms = {}
    for key in FEATURE_KEYS[2:]:
        answer = values[key].lower()
        if answer in ("yes", "true", "1"):
            symptoms[key] = True
        elif answer in ("no", "false", "0"):
            symptoms[key] = False
        else:
            raise ValueError(f"field '{key}': unrecognized value '{values[key]}'")
    return QuestionnaireRecord(age=age, gender=gender, **symptoms)


def cmd_predict(args) -> int:
    model = load_model(args.model)
    if args.input:
        records = parse_csv_file(args.input)
        if len(records) != 1:
            raise ValueError(f"expected exactly one record, got {len(records)}")
        record = records[0]
    else:
        record = _record_from_answers(args.answers)
    x = encode_records([record], model.normalizer)
    score = float(predict_scores(model, x)[0])
    klass = int(predict_class(model, x)[0])
    label = "Diabetes" if klass == LABEL_DIABETES else "Normal"
    print(f"{label} (raw score {score:.6f})")
    return 0


def cmd_benchmark(args) -> int:
    records = parse_csv_file(args.data)
    if not records:
        raise ValueError("no records")
    config = _config_from_args(args, seed=0)
    table = benchmark_transfer_functions(records, config, seeds=range(args.seeds))
    n_train, n_val, n_test = table.split_sizes
    print(
        f"{len(records)} records, split train={n_train} validation={n_val} "
        f"test={n_test}, {len(table.seeds)} seed(s), hidden={config.hidden_count}, "
        f"alpha={config.alpha}"
    )
    print(format_benchmark_table(table))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(benchmark_csv(table))
        print(f"per-seed results written to {args.out}")
    return 0


def cmd_serve(args) -> int:
    model = load_model(args.model)
    server = make_server(PredictionService(model), host=args.host, port=args.port)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (Ctrl-C to stop)", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elmscreen",
        description="Train, evaluate and serve the questionnaire screening model.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="fit a model on a labeled CSV and save it")
    p_train.add_argument("--data", required=True, help="labeled questionnaire CSV")
    p_train.add_argument("--out", required=True, help="output model file")
    p_train.add_argument("--seed", type=int, default=0, help="split + init seed (default 0)")
    p_train.add_argument("--no-stratify", action="store_true", help="disable stratified splitting")
    _add_config_flags(p_train)
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="evaluate a saved model on a labeled CSV")
    p_eval.add_argument("--model", required=True, help="model file")
    p_eval.add_argument("--data", required=True, help="labeled questionnaire CSV")
    p_eval.set_defaults(func=cmd_eval)

    p_pred = sub.add_parser("predict", help="classify a single questionnaire record")
    p_pred.add_argument("--model", required=True, help="model file")
    src = p_pred.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="CSV file holding exactly one record (label optional)")
    src.add_argument("--answers", help="inline answers, e.g. age=40,gender=Male,polyuria=no,...")
    p_pred.set_defaults(func=cmd_predict)

    p_bench = sub.add_parser("benchmark", help="compare all six transfer functions")
    p_bench.add_argument("--data", required=True, help="labeled questionnaire CSV")
    p_bench.add_argument("--seeds", type=_positive_int, default=20,
                         help="number of split/init seeds to average over (default 20)")
    p_bench.add_argument("--out", help="write per-seed CSV rows to this file")
    _add_config_flags(p_bench)
    p_bench.set_defaults(func=cmd_benchmark)

    p_serve = sub.add_parser("serve", help="run the HTTP prediction service")
    p_serve.add_argument("--model", required=True, help="model file")
    p_serve.add_argument("--port", type=int, default=8000, help="listen port (default 8000)")
    p_serve.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
