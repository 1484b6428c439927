"""Forward pass, loss, analytic gradients, and SGD-with-momentum updates.

The network is: embedding lookup (24 x 64) -> global average pool (64) ->
dense+ReLU (H) -> dense+sigmoid (scalar score in (0,1)). Everything is
float64 numpy; gradients are derived by hand, no autodiff.

The single-sequence ops pin down their floating-point semantics: pooling
sums are exactly rounded (order-free) and dense reductions accumulate in
ascending input order with the bias added after the sum, so a naive
accumulation loop reproduces them bit-for-bit. The batched training path
trades that pinning for vectorised speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .preprocess import SEQ_LEN, TokenSequence

EMBED_DIM = 64
DEFAULT_HIDDEN = 16
BCE_EPS = 1e-7
# Keep sigmoid output strictly inside (0,1) even where float64 saturates.
SCORE_CLIP = 1e-12


@dataclass(frozen=True)
class ModelDims:
    vocab: int
    hidden: int = DEFAULT_HIDDEN
    seq_len: int = SEQ_LEN
    embed_dim: int = EMBED_DIM


@dataclass
class ModelParams:
    E: np.ndarray  # (vocab, embed_dim)
    W1: np.ndarray  # (embed_dim, hidden)
    b1: np.ndarray  # (hidden,)
    w2: np.ndarray  # (hidden,)
    b2: float
    dims: ModelDims = field(repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.dims is None:
            self.dims = ModelDims(vocab=self.E.shape[0], hidden=self.W1.shape[1])
        d = self.dims
        if self.E.shape != (d.vocab, d.embed_dim):
            raise ValueError(f"embedding shape {self.E.shape} != {(d.vocab, d.embed_dim)}")
        if self.W1.shape != (d.embed_dim, d.hidden):
            raise ValueError(f"dense1 weight shape {self.W1.shape} != {(d.embed_dim, d.hidden)}")
        if self.b1.shape != (d.hidden,):
            raise ValueError(f"dense1 bias shape {self.b1.shape} != {(d.hidden,)}")
        if self.w2.shape != (d.hidden,):
            raise ValueError(f"output weight shape {self.w2.shape} != {(d.hidden,)}")


@dataclass
class Gradients:
    E: np.ndarray
    W1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: float


# Same container, different role: the momentum accumulator.
Velocity = Gradients


def seeded_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Deterministic per-purpose RNG; `stream` separates uses of one seed."""
    return np.random.default_rng([seed % 2**64, stream])


def init_params(dims: ModelDims, seed: int) -> ModelParams:
    """Uniform(-0.05, 0.05) embeddings, Glorot-uniform dense layers, zero biases."""
    rng = seeded_rng(seed, stream=0)
    limit1 = math.sqrt(6.0 / (dims.embed_dim + dims.hidden))
    limit2 = math.sqrt(6.0 / (dims.hidden + 1))
    return ModelParams(
        E=rng.uniform(-0.05, 0.05, size=(dims.vocab, dims.embed_dim)),
        W1=rng.uniform(-limit1, limit1, size=(dims.embed_dim, dims.hidden)),
        b1=np.zeros(dims.hidden),
        w2=rng.uniform(-limit2, limit2, size=(dims.hidden,)),
        b2=0.0,
        dims=dims,
    )


def zero_velocity(params: ModelParams) -> Velocity:
    return Velocity(
        E=np.zeros_like(params.E),
        W1=np.zeros_like(params.W1),
        b1=np.zeros_like(params.b1),
        w2=np.zeros_like(params.w2),
        b2=0.0,
    )


def embed(seq: TokenSequence | Sequence[int], E: np.ndarray) -> np.ndarray:
    """Row i of the result is E[seq[i]]. PAD rows are included, never masked."""
    ids = np.asarray(seq, dtype=np.int64)
    if ids.shape != (SEQ_LEN,):
        raise ValueError(f"sequence must have length {SEQ_LEN}, got shape {ids.shape}")
    return E[ids]


def global_average_pool(M: np.ndarray) -> np.ndarray:
    """Column means: out[j] = (1/24) * sum_i M[i][j].

    Column sums are exactly rounded (fsum), so the result is genuinely
    independent of row order, not just approximately so.
    """
    rows, cols = M.shape
    return np.asarray(
        [math.fsum(M[i, j] for i in range(rows)) / rows for j in range(cols)]
    )


def dense_relu(x: np.ndarray, W1: np.ndarray, b1: np.ndarray) -> np.ndarray:
    """max(0, x @ W1 + b1), accumulated in ascending input-index order."""
    acc = np.zeros(W1.shape[1])
    for j in range(W1.shape[0]):
        acc += x[j] * W1[j]
    return np.maximum(0.0, acc + b1)


def _sigmoid_scalar(z: float) -> float:
    if z >= 0:
        return float(1.0 / (1.0 + np.exp(-np.float64(z))))
    e = np.exp(np.float64(z))
    return float(e / (1.0 + e))


def _sigmoid_vec(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    e = np.exp(z[~pos])
    out[~pos] = e / (1.0 + e)
    return out


def dense_sigmoid(h: np.ndarray, w2: np.ndarray, b2: float) -> float:
    """sigmoid(h . w2 + b2), clipped to stay strictly inside (0, 1)."""
    z = 0.0
    for k in range(w2.shape[0]):
        z += h[k] * w2[k]
    z += b2
    p = _sigmoid_scalar(z)
    return float(min(max(p, SCORE_CLIP), 1.0 - SCORE_CLIP))


def forward(seq: TokenSequence | Sequence[int], params: ModelParams) -> float:
    x = global_average_pool(embed(seq, params.E))
    h = dense_relu(x, params.W1, params.b1)
    return dense_sigmoid(h, params.w2, params.b2)


def forward_batch(ids: np.ndarray, params: ModelParams) -> np.ndarray:
    """Vectorised forward over an (N, 24) index matrix."""
    _, _, _, _, p = _forward_batch_full(ids, params)
    return p


def _forward_batch_full(ids, params):
    # Plain vectorised arithmetic: training and evaluation have no
    # bit-exactness contract, unlike the single-sequence ops above.
    emb = params.E[ids]  # (N, 24, embed_dim)
    x = emb.mean(axis=1)
    pre1 = x @ params.W1 + params.b1
    h = np.maximum(0.0, pre1)
    z = h @ params.w2 + params.b2
    p = np.clip(_sigmoid_vec(z), SCORE_CLIP, 1.0 - SCORE_CLIP)
    return x, pre1, h, z, p


def bce_loss(p: float, y: int) -> float:
    """-(y ln p + (1-y) ln(1-p)) with p clamped into [eps, 1-eps], eps=1e-7."""
    pc = min(max(p, BCE_EPS), 1.0 - BCE_EPS)
    if y == 1:
        return float(-np.log(np.float64(pc)))
    return float(-np.log(np.float64(1.0 - pc)))


def bce_loss_vec(p: np.ndarray, y: np.ndarray) -> np.ndarray:
    pc = np.clip(p, BCE_EPS, 1.0 - BCE_EPS)
    return -(y * np.log(pc) + (1.0 - y) * np.log(1.0 - pc))


def backward(
    batch: Sequence[tuple[TokenSequence, int]], params: ModelParams
) -> tuple[Gradients, float]:
    """Gradients of the mean batch BCE with respect to every parameter."""
    if not batch:
        raise ValueError("backward requires a non-empty batch")
    ids = np.asarray([seq for seq, _ in batch], dtype=np.int64)
    y = np.asarray([label for _, label in batch], dtype=np.float64)
    return backward_arrays(ids, y, params)


def backward_arrays(
    ids: np.ndarray, y: np.ndarray, params: ModelParams
) -> tuple[Gradients, float]:
    n = ids.shape[0]
    x, pre1, h, _, p = _forward_batch_full(ids, params)
    mean_loss = float(bce_loss_vec(p, y).mean())

    dz = (p - y) / n  # (N,)
    db2 = float(dz.sum())
    dw2 = h.T @ dz
    dpre1 = (dz[:, None] * params.w2[None, :]) * (pre1 > 0)
    dW1 = x.T @ dpre1
    db1 = dpre1.sum(axis=0)
    dx = dpre1 @ params.W1.T  # (N, embed_dim)

    dE = np.zeros_like(params.E)
    contrib = np.repeat(dx / ids.shape[1], ids.shape[1], axis=0)  # (N*24, embed_dim)
    np.add.at(dE, ids.ravel(), contrib)

    return Gradients(E=dE, W1=dW1, b1=db1, w2=dw2, b2=db2), mean_loss


def sgd_momentum_step(
    params: ModelParams,
    grads: Gradients,
    velocity: Velocity,
    lr: float,
    mu: float,
) -> tuple[ModelParams, Velocity]:
    """Classical momentum, in place: v <- mu*v - lr*g; w <- w + v."""
    if lr <= 0:
        raise ValueError(f"learning rate must be positive, got {lr}")
    if not 0 <= mu < 1:
        raise ValueError(f"momentum must be in [0, 1), got {mu}")
    for name in ("E", "W1", "b1", "w2"):
        v = getattr(velocity, name)
        v *= mu
        v -= lr * getattr(grads, name)
        w = getattr(params, name)
        w += v
    velocity.b2 = mu * velocity.b2 - lr * grads.b2
    params.b2 = params.b2 + velocity.b2
    return params, velocity
