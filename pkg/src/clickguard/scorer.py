"""Headline scoring and the tiered warning table.

A score in (0,1) is mapped onto a 0-10 scale; anything at or below 5 raises
no warning, and the five unit-width bands above 5 select one of five warning
variants of increasing severity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nn import ModelParams, forward
from .preprocess import Vocabulary, encode_headline


@dataclass(frozen=True)
class ScoreResult:
    score: float
    tier: int


@dataclass(frozen=True)
class WarningSpec:
    tier: int
    symbol: str
    colour: str
    heading: str
    advice: str


_WARNINGS = {
    1: WarningSpec(
        tier=1,
        symbol="magnifying-glass",
        colour="yellow",
        heading="This headline shows mild signs of sensationalism.",
        advice="Read with a critical eye before accepting any claims.",
    ),
    2: WarningSpec(
        tier=2,
        symbol="magnifying-glass",
        colour="amber",
        heading="This headline looks designed to provoke rather than inform.",
        advice="Consider checking how other outlets report this story.",
    ),
    3: WarningSpec(
        tier=3,
        symbol="warning-sign",
        colour="orange",
        heading="This page is likely to contain misleading content.",
        advice="Consider finding alternative sources before reading on.",
    ),
    4: WarningSpec(
        tier=4,
        symbol="stop-sign",
        colour="orange-red",
        heading="This page shows strong signs of misinformation.",
        advice="Verify these claims with a trusted outlet before continuing.",
    ),
    5: WarningSpec(
        tier=5,
        symbol="authority-figure",
        colour="red",
        heading="This page is very likely misinformation.",
        advice="Leave this page and consult a reputable source instead.",
    ),
}


def score_headline(params: ModelParams, vocab: Vocabulary, raw: str) -> float:
    """Score raw headline text; an empty headline scores the all-padding sequence."""
    return forward(encode_headline(raw, vocab), params)


def severity(score: float) -> int:
    """Tier 0 (no warning) through 5 from the score on a 0-10 scale."""
    if not 0.0 <= score <= 1.0:
        raise ValueError(f"score must be in [0, 1], got {score}")
    t = score * 10.0
    if t <= 5.0:
        return 0
    if t <= 6.0:
        return 1
    if t <= 7.0:
        return 2
    if t <= 8.0:
        return 3
    if t <= 9.0:
        return 4
    return 5


def warning_spec(tier: int) -> WarningSpec:
    """The fixed variant for a warning tier 1 through 5."""
    if tier not in _WARNINGS:
        raise ValueError(f"warning tier must be 1..5, got {tier}")
    return _WARNINGS[tier]


def score_result(params: ModelParams, vocab: Vocabulary, raw: str) -> ScoreResult:
    score = score_headline(params, vocab, raw)
    return ScoreResult(score=score, tier=severity(score))
