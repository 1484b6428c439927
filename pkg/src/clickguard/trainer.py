"""Dataset loading, train/test split, the training loop, and serialization.

Dataset formats:
  * two-file: one UTF-8 headline per line, blank lines skipped, one file per
    label (positive file first);
  * TSV: lines of ``label<TAB>headline`` with label 0 or 1.

The model artifact is one self-describing JSON document holding the format
version, dimensions, vocabulary, and parameter tensors as decimal numerals
with full round-trip precision.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError, DatasetError, ModelFormatError, TrainingDivergedError
from .nn import (
    DEFAULT_HIDDEN,
    ModelDims,
    ModelParams,
    backward_arrays,
    bce_loss_vec,
    forward_batch,
    init_params,
    seeded_rng,
    sgd_momentum_step,
    zero_velocity,
)
from .preprocess import LabeledExample, Vocabulary, build_vocabulary, encode_headline

log = logging.getLogger(__name__)

MODEL_FORMAT = "clickguard-model"
MODEL_VERSION = 1

# Evaluation batches are chunked to bound the (chunk, 24, 64) embedding buffer.
_EVAL_CHUNK = 2048


@dataclass(frozen=True)
class TrainingConfig:
    epochs: int = 80
    batch_size: int = 128
    lr: float = 0.01
    momentum: float = 0.9
    seed: int = 0
    train_count: int = 26_666
    vocab_size: int = 10_000

    def __post_init__(self) -> None:
        if self.epochs < 1:
            raise ConfigError(f"epochs must be >= 1, got {self.epochs}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.lr <= 0:
            raise ConfigError(f"lr must be positive, got {self.lr}")
        if not 0 <= self.momentum < 1:
            raise ConfigError(f"momentum must be in [0, 1), got {self.momentum}")
        if self.train_count < 1:
            raise ConfigError(f"train_count must be >= 1, got {self.train_count}")
        if self.vocab_size < 1:
            raise ConfigError(f"vocab_size must be >= 1, got {self.vocab_size}")


@dataclass(frozen=True)
class EpochMetrics:
    epoch: int
    train_accuracy: float
    train_loss: float


def load_tsv(path: str | Path) -> list[LabeledExample]:
    """Parse ``label<TAB>headline`` lines; blank lines are skipped."""
    examples = []
    for lineno, line in _read_lines(path):
        if not line.strip():
            continue
        label_field, sep, headline = line.partition("\t")
        if not sep:
            raise DatasetError(f"{path}:{lineno}: expected 'label<TAB>headline'")
        if label_field not in ("0", "1"):
            raise DatasetError(f"{path}:{lineno}: label must be 0 or 1, got {label_field!r}")
        examples.append(LabeledExample(headline=headline.strip(), label=int(label_field)))
    return examples


def load_labeled_files(positive: str | Path, negative: str | Path) -> list[LabeledExample]:
    """Load two one-headline-per-line files: positives (label 1) then negatives."""
    examples = []
    for path, label in ((positive, 1), (negative, 0)):
        for _, line in _read_lines(path):
            headline = line.strip()
            if headline:
                examples.append(LabeledExample(headline=headline, label=label))
    return examples


def load_dataset(paths: Sequence[str | Path]) -> list[LabeledExample]:
    """One path means TSV; two paths mean positive-file, negative-file."""
    if len(paths) == 1:
        return load_tsv(paths[0])
    if len(paths) == 2:
        return load_labeled_files(paths[0], paths[1])
    raise DatasetError(f"expected one TSV path or two labelled files, got {len(paths)} paths")


def _read_lines(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            yield from enumerate(fh.read().splitlines(), start=1)
    except OSError as exc:
        raise DatasetError(f"cannot read dataset file {path}: {exc}") from exc


def split_dataset(
    examples: Sequence[LabeledExample], seed: int, train_count: int
) -> tuple[list[LabeledExample], list[LabeledExample]]:
    """Seeded shuffle, then the first train_count examples train and the rest test."""
    if not 0 < train_count < len(examples):
        raise ConfigError(
            f"train_count must be in (0, {len(examples)}), got {train_count}"
        )
    order = seeded_rng(seed, stream=2).permutation(len(examples))
    shuffled = [examples[i] for i in order]
    return shuffled[:train_count], shuffled[train_count:]


def encode_dataset(
    examples: Sequence[LabeledExample], vocab: Vocabulary
) -> tuple[np.ndarray, np.ndarray]:
    """Token-index matrix (N, 24) and float label vector (N,)."""
    ids = np.asarray([encode_headline(ex.headline, vocab) for ex in examples], dtype=np.int64)
    y = np.asarray([ex.label for ex in examples], dtype=np.float64)
    return ids, y


def train(
    config: TrainingConfig,
    train_set: Sequence[LabeledExample],
    vocab: Vocabulary | None = None,
) -> tuple[ModelParams, Vocabulary, list[EpochMetrics]]:
    """Run the full training loop over train_set.

    The vocabulary is built from train_set alone unless one (also built from
    the training split only) is passed in. Each epoch reshuffles with a
    generator derived from config.seed, walks sequential batches keeping the
    final partial batch, and records accuracy and mean loss over the whole
    training set at threshold 0.5.
    """
    if not train_set:
        raise ConfigError("cannot train on an empty dataset")
    if vocab is None:
        vocab = build_vocabulary(train_set, config.vocab_size)
    ids, y = encode_dataset(train_set, vocab)
    dims = ModelDims(vocab=vocab.size, hidden=DEFAULT_HIDDEN)
    params = init_params(dims, config.seed)
    velocity = zero_velocity(params)
    shuffle_rng = seeded_rng(config.seed, stream=1)

    history: list[EpochMetrics] = []
    n = len(train_set)
    for epoch in range(1, config.epochs + 1):
        order = shuffle_rng.permutation(n)
        for batch_index, start in enumerate(range(0, n, config.batch_size)):
            take = order[start : start + config.batch_size]
            grads, loss = backward_arrays(ids[take], y[take], params)
            if not math.isfinite(loss):
                raise TrainingDivergedError(
                    f"non-finite loss at epoch {epoch}, batch {batch_index}"
                )
            sgd_momentum_step(params, grads, velocity, config.lr, config.momentum)
        accuracy, mean_loss = _evaluate_encoded(params, ids, y)
        history.append(EpochMetrics(epoch=epoch, train_accuracy=accuracy, train_loss=mean_loss))
        log.info(
            "epoch %d/%d accuracy=%.4f loss=%.4f",
            epoch, config.epochs, accuracy, mean_loss,
        )
    return params, vocab, history


def evaluate(
    params: ModelParams, vocab: Vocabulary, dataset: Sequence[LabeledExample]
) -> tuple[float, float]:
    """Accuracy (score >= 0.5 counts as label 1) and mean BCE loss."""
    if not dataset:
        raise ConfigError("cannot evaluate on an empty dataset")
    ids, y = encode_dataset(dataset, vocab)
    return _evaluate_encoded(params, ids, y)


def _evaluate_encoded(params, ids, y) -> tuple[float, float]:
    correct = 0
    loss_sum = 0.0
    for start in range(0, ids.shape[0], _EVAL_CHUNK):
        p = forward_batch(ids[start : start + _EVAL_CHUNK], params)
        yc = y[start : start + _EVAL_CHUNK]
        correct += int(((p >= 0.5) == (yc == 1.0)).sum())
        loss_sum += float(bce_loss_vec(p, yc).sum())
    return correct / ids.shape[0], loss_sum / ids.shape[0]


def save_model(params: ModelParams, vocab: Vocabulary, path: str | Path) -> None:
    """Write the JSON artifact; floats keep full round-trip precision."""
    document = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "dims": {
            "seq_len": params.dims.seq_len,
            "embed_dim": params.dims.embed_dim,
            "hidden": params.dims.hidden,
            "vocab": params.dims.vocab,
        },
        "vocabulary": list(vocab.tokens),
        "params": {
            "embedding": params.E.tolist(),
            "dense1_weights": params.W1.tolist(),
            "dense1_bias": params.b1.tolist(),
            "output_weights": params.w2.tolist(),
            "output_bias": params.b2,
        },
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(document, fh, ensure_ascii=False, separators=(",", ":"))
        fh.write("\n")


def load_model(path: str | Path) -> tuple[ModelParams, Vocabulary]:
    try:
        with open(path, encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        raise ModelFormatError(f"cannot read model file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"model file {path} is not valid JSON: {exc}") from exc

    if not isinstance(document, dict) or document.get("format") != MODEL_FORMAT:
        raise ModelFormatError(f"{path}: not a {MODEL_FORMAT} file")
    if document.get("version") != MODEL_VERSION:
        raise ModelFormatError(
            f"{path}: unsupported version {document.get('version')!r}, expected {MODEL_VERSION}"
        )
    try:
        d = document["dims"]
        dims = ModelDims(
            vocab=d["vocab"], hidden=d["hidden"], seq_len=d["seq_len"], embed_dim=d["embed_dim"]
        )
        vocab = Vocabulary(tokens=tuple(document["vocabulary"]))
        raw = document["params"]
        params = ModelParams(
            E=np.asarray(raw["embedding"], dtype=np.float64),
            W1=np.asarray(raw["dense1_weights"], dtype=np.float64),
            b1=np.asarray(raw["dense1_bias"], dtype=np.float64),
            w2=np.asarray(raw["output_weights"], dtype=np.float64),
            b2=float(raw["output_bias"]),
            dims=dims,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"{path}: malformed model document: {exc}") from exc
    if vocab.size != dims.vocab:
        raise ModelFormatError(
            f"{path}: vocabulary size {vocab.size} does not match dims.vocab {dims.vocab}"
        )
    for name, tensor in (("embedding", params.E), ("dense1_weights", params.W1),
                         ("dense1_bias", params.b1), ("output_weights", params.w2)):
        if not np.isfinite(tensor).all():
            raise ModelFormatError(f"{path}: non-finite value in {name}")
    if not math.isfinite(params.b2):
        raise ModelFormatError(f"{path}: non-finite output bias")
    return params, vocab


def export_metrics(history: Iterable[EpochMetrics], path: str | Path) -> None:
    """CSV rows ``epoch,train_accuracy,train_loss`` at six decimal places."""
    rows = list(history)
    if not rows:
        raise ConfigError("metrics history is empty")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("epoch,train_accuracy,train_loss\n")
        for m in rows:
            fh.write(f"{m.epoch},{m.train_accuracy:.6f},{m.train_loss:.6f}\n")


def load_metrics(path: str | Path) -> list[EpochMetrics]:
    """Parse a metrics CSV written by export_metrics."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise DatasetError(f"cannot read metrics file {path}: {exc}") from exc
    if not lines or lines[0] != "epoch,train_accuracy,train_loss":
        raise DatasetError(f"{path}:1: missing metrics header")
    history = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise DatasetError(f"{path}:{lineno}: expected 3 comma-separated fields")
        try:
            history.append(
                EpochMetrics(int(fields[0]), float(fields[1]), float(fields[2]))
            )
        except ValueError as exc:
            raise DatasetError(f"{path}:{lineno}: {exc}") from exc
    return history
