"""Command-line entry point: train, eval, score, host, export-metrics.

Exit codes: 0 success, 1 runtime failure, 2 usage error. Diagnostics and
progress go to stderr; stdout carries only the declared output formats
(`accuracy=<f> loss=<f>`, `score=<f> tier=<n>`, or host-protocol frames).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import msghost, trainer
from .errors import ConfigError, DatasetError, ModelFormatError, TrainingDivergedError
from .scorer import score_headline, severity

MODEL_ENV_VAR = "CLICKGUARD_MODEL"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _momentum(text: str) -> float:
    value = float(text)
    if not 0 <= value < 1:
        raise argparse.ArgumentTypeError(f"must be in [0, 1), got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clickguard",
        description="Train and serve the clickbait headline scorer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model and write the artifact")
    p_train.add_argument(
        "--data", nargs="+", required=True, metavar="PATH",
        help="one TSV file (label<TAB>headline), or a positive-headlines file "
             "followed by a negative-headlines file",
    )
    p_train.add_argument("--out", required=True, help="model artifact output path")
    p_train.add_argument("--epochs", type=_positive_int, default=80)
    p_train.add_argument("--batch-size", type=_positive_int, default=128)
    p_train.add_argument("--lr", type=_positive_float, default=0.01)
    p_train.add_argument("--momentum", type=_momentum, default=0.9)
    p_train.add_argument("--seed", type=int, default=0)
    p_train.add_argument("--metrics", help="also write a per-epoch metrics CSV here")
    p_train.add_argument("--train-count", type=_positive_int, default=26_666,
                         help="size of the training split (the rest is held out)")
    p_train.add_argument("--vocab-size", type=_positive_int, default=10_000)

    p_eval = sub.add_parser("eval", help="print accuracy and loss of a model on a dataset")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--data", nargs="+", required=True, metavar="PATH")

    p_score = sub.add_parser("score", help="score one headline")
    p_score.add_argument("--model", required=True)
    p_score.add_argument("--headline", required=True)

    p_host = sub.add_parser("host", help="run the native-messaging host on stdin/stdout")
    p_host.add_argument("--model", help=f"model artifact (default: ${MODEL_ENV_VAR})")

    p_export = sub.add_parser("export-metrics", help="re-emit a metrics CSV in canonical form")
    p_export.add_argument("--history", required=True, help="metrics CSV to read")
    p_export.add_argument("--out", required=True, help="canonical CSV to write")

    return parser


def cmd_train(args: argparse.Namespace) -> int:
    config = trainer.TrainingConfig(
        epochs=args.epochs,
        batch_size=args.batch_size,
        lr=args.lr,
        momentum=args.momentum,
        seed=args.seed,
        train_count=args.train_count,
        vocab_size=args.vocab_size,
    )
    examples = trainer.load_dataset(args.data)
    if not examples:
        raise ConfigError("dataset is empty, refusing to train")
    train_set, test_set = trainer.split_dataset(examples, config.seed, config.train_count)
    logging.info("training on %d examples (%d held out)", len(train_set), len(test_set))
    params, vocab, history = trainer.train(config, train_set)
    trainer.save_model(params, vocab, args.out)
    if args.metrics:
        trainer.export_metrics(history, args.metrics)
    final = history[-1]
    print(f"accuracy={final.train_accuracy:.6f} loss={final.train_loss:.6f}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    params, vocab = trainer.load_model(args.model)
    examples = trainer.load_dataset(args.data)
    accuracy, loss = trainer.evaluate(params, vocab, examples)
    print(f"accuracy={accuracy:.6f} loss={loss:.6f}")
    return 0


def cmd_score(args: argparse.Namespace) -> int:
    params, vocab = trainer.load_model(args.model)
    score = score_headline(params, vocab, args.headline)
    # repr round-trips the float exactly, so the printed tier always matches it
    print(f"score={score!r} tier={severity(score)}")
    return 0


def cmd_host(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    model_path = args.model or os.environ.get(MODEL_ENV_VAR)
    if not model_path:
        parser.error(f"host mode needs --model or ${MODEL_ENV_VAR}")
    return msghost.serve(model_path)


def cmd_export_metrics(args: argparse.Namespace) -> int:
    history = trainer.load_metrics(args.history)
    trainer.export_metrics(history, args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s"
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "train":
            return cmd_train(args)
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "score":
            return cmd_score(args)
        if args.command == "host":
            return cmd_host(args, parser)
        if args.command == "export-metrics":
            return cmd_export_metrics(args)
    except (ConfigError, DatasetError, ModelFormatError, TrainingDivergedError, OSError) as exc:
        print(f"clickguard: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
