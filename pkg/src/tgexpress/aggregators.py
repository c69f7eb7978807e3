"""Edge-sequence encoders: exponential decay (D), per-step weights (S), exact.

The numeric encoders take presence/attribute sequences as numbers with Null
read as 0. They are fixed-parameter functions here; nothing is trained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .tgraph import InvalidInput
from .wl import Interner


@dataclass(frozen=True)
class DecayParams:
    rate: float

    def __post_init__(self):
        if not math.isfinite(self.rate):
            raise InvalidInput(f"decay rate must be finite, got {self.rate}")


@dataclass(frozen=True)
class WeightParams:
    theta: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(float(w) for w in self.theta))


def sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def _numeric(seq: Sequence) -> list[float]:
    out = []
    for a in seq:
        v = 0.0 if a is None else float(a)
        if not math.isfinite(v):
            raise InvalidInput(f"non-finite sequence entry {a!r}")
        out.append(v)
    return out


def _weighted_sum(weights: Sequence[float], values: Sequence[float]) -> float:
    total = 0.0
    for w, a in zip(weights, values):
        total += w * a
    return total


def decay_logit(seq: Sequence, rate: float) -> float:
    values = _numeric(seq)
    T = len(values)
    # 0-based index k is step k + 1, weighted exp(rate * (T - k))
    weights = [math.exp(rate * (T - k)) for k in range(T)]
    return _weighted_sum(weights, values)


def decay_encode(seq: Sequence, rate: float | DecayParams) -> float:
    if isinstance(rate, DecayParams):
        rate = rate.rate
    if not math.isfinite(rate):
        raise InvalidInput(f"decay rate must be finite, got {rate}")
    return sigmoid(decay_logit(seq, rate))


def weighted_logit(seq: Sequence, theta: Sequence[float] | WeightParams) -> float:
    if isinstance(theta, WeightParams):
        theta = theta.theta
    values = _numeric(seq)
    if len(theta) != len(values):
        raise InvalidInput(f"weight length {len(theta)} != sequence length {len(values)}")
    return _weighted_sum([float(w) for w in theta], values)


def weighted_encode(seq: Sequence, theta: Sequence[float] | WeightParams) -> float:
    return sigmoid(weighted_logit(seq, theta))


def exact_seq_encode(seq: Sequence, interner: Interner) -> int:
    return interner(("edgeseq", tuple(seq)))
