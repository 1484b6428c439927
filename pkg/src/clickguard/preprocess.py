"""Headline text preprocessing: normalization, tokenization, vocabulary, encoding.

Raw headlines become fixed-length sequences of 24 token indices. Index 0 is
reserved for padding, index 1 for out-of-vocabulary tokens; real tokens start
at index 2, ordered by descending training-corpus frequency.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ConfigError

SEQ_LEN = 24
PAD_INDEX = 0
OOV_INDEX = 1

TokenSequence = tuple[int, ...]


@dataclass(frozen=True)
class LabeledExample:
    headline: str
    label: int

    def __post_init__(self) -> None:
        if self.label not in (0, 1):
            raise ConfigError(f"label must be 0 or 1, got {self.label!r}")


@dataclass(frozen=True)
class Vocabulary:
    """Immutable token -> index map. tokens[i] has index i + 2."""

    tokens: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {tok: i + 2 for i, tok in enumerate(self.tokens)}
        if len(index) != len(self.tokens):
            raise ConfigError("vocabulary tokens must be unique")
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.tokens) + 2

    def lookup(self, token: str) -> int:
        return self._index.get(token, OOV_INDEX)


def normalize(raw: str) -> str:
    """Lowercase, map non-alphanumerics to spaces, collapse whitespace, strip."""
    cleaned = "".join(ch if ch.isalnum() else " " for ch in raw.lower())
    return " ".join(cleaned.split())


def tokenize(normalized: str) -> list[str]:
    return normalized.split()


def build_vocabulary(corpus: Iterable[LabeledExample], max_size: int) -> Vocabulary:
    """Index the max_size most frequent tokens of the corpus.

    Descending frequency order, ties broken lexicographically ascending, so the
    result is deterministic for a given corpus.
    """
    if max_size < 1:
        raise ConfigError(f"max_size must be >= 1, got {max_size}")
    counts: Counter[str] = Counter()
    seen_any = False
    for example in corpus:
        seen_any = True
        counts.update(tokenize(normalize(example.headline)))
    if not seen_any:
        raise ConfigError("cannot build a vocabulary from an empty corpus")
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return Vocabulary(tokens=tuple(tok for tok, _ in ranked[:max_size]))


def encode(tokens: Sequence[str], vocab: Vocabulary) -> TokenSequence:
    """Map tokens to indices, keeping the first 24 and post-padding with PAD."""
    ids = [vocab.lookup(tok) for tok in tokens[:SEQ_LEN]]
    ids.extend([PAD_INDEX] * (SEQ_LEN - len(ids)))
    return tuple(ids)


def encode_headline(raw: str, vocab: Vocabulary) -> TokenSequence:
    """Full pipeline: normalize, tokenize, encode."""
    return encode(tokenize(normalize(raw)), vocab)
