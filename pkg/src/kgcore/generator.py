"""Seeded synthetic hypergraphs with power-law communities.

A simplified community benchmark for scalability runs: nodes are split into
contiguous communities with power-law sizes, each node gets a power-law
popularity weight inside its community, and every hyperedge draws its
members either from one community (probability ``1 - noise``) or uniformly
from all nodes.

Randomness comes from :class:`SplitMix64`, a counter-based generator written
against numpy ``uint64`` arithmetic so that outputs are identical on every
platform and numpy version.
"""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import ConfigError
from .hypergraph import Hypergraph

__all__ = ["SplitMix64", "GenConfig", "generate", "community_of"]

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 stream; draws are produced in vectorised batches."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_u64(self, n: int) -> np.ndarray:
        steps = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + steps * np.uint64(_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
        self.state = (self.state + n * _GAMMA) & _MASK
        return z

    def random(self, n: int) -> np.ndarray:
        """``n`` doubles uniform in [0, 1)."""
        return (self.next_u64(n) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def integers(self, low: int, high: int, n: int) -> np.ndarray:
        """``n`` integers uniform in the closed range [low, high]."""
        span = high - low + 1
        return low + np.minimum((self.random(n) * span).astype(np.int64), span - 1)


@dataclass(frozen=True)
class GenConfig:
    node_count: int = 10_000
    edge_count: int = 10_000
    cardinality_range: tuple[int, int] = (1, 40)
    degree_exponent: float = 2.1
    community_exponent: float = 1.7
    community_count: int = 80
    noise: float = 0.2
    seed: int = 0

    def validate(self) -> None:
        lo, hi = self.cardinality_range
        if self.node_count < 1 or self.edge_count < 1 or self.community_count < 1:
            raise ConfigError("node, edge and community counts must be positive")
        if lo < 1 or hi < lo:
            raise ConfigError(f"invalid cardinality range {self.cardinality_range}")
        if hi > self.node_count:
            raise ConfigError(f"maximum cardinality {hi} exceeds node count {self.node_count}")
        if self.community_count > self.node_count:
            raise ConfigError("more communities than nodes")
        if not 0.0 <= self.noise <= 1.0:
            raise ConfigError(f"noise must lie in [0, 1], got {self.noise}")
        if self.degree_exponent <= 1.0 or self.community_exponent <= 1.0:
            raise ConfigError("power-law exponents must exceed 1")

    @classmethod
    def from_json(cls, source) -> "GenConfig":
        if isinstance(source, (str, os.PathLike)):
            with open(source, encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            data = json.load(source)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "cardinality_range" in data:
            data["cardinality_range"] = tuple(data["cardinality_range"])
        return cls(**data)

    def to_json(self) -> dict:
        d = asdict(self)
        d["cardinality_range"] = list(self.cardinality_range)
        return d


def _community_sizes(cfg: GenConfig, rng: SplitMix64) -> np.ndarray:
    # Pareto-distributed weights, allocated by largest remainder with a floor of one
    c, n = cfg.community_count, cfg.node_count
    u = 1.0 - rng.random(c)
    weights = u ** (-1.0 / (cfg.community_exponent - 1.0))
    share = weights / weights.sum() * (n - c)
    sizes = np.floor(share).astype(np.int64)
    leftover = (n - c) - int(sizes.sum())
    order = np.argsort(-(share - sizes), kind="stable")
    sizes[order[:leftover]] += 1
    return sizes + 1


def community_of(cfg: GenConfig) -> np.ndarray:
    """Community index of every node for ``cfg`` (same draws as :func:`generate`)."""
    cfg.validate()
    sizes = _community_sizes(cfg, SplitMix64(cfg.seed))
    return np.repeat(np.arange(len(sizes)), sizes)


def _distinct(rng: SplitMix64, cdf: np.ndarray, offset: int, size: int, want: int) -> list[int]:
    """``want`` distinct ids from ``[offset, offset + size)`` drawn by weight."""
    picked: dict[int, None] = {}
    for _ in range(4):
        for x in np.searchsorted(cdf, rng.random(2 * want), side="right").tolist():
            picked[min(x, size - 1)] = None
            if len(picked) == want:
                return [offset + x for x in picked]
    # heavy skew: finish with a uniform random order of the unpicked members
    rest = np.array([x for x in range(size) if x not in picked], dtype=np.int64)
    rest = rest[np.argsort(rng.random(len(rest)), kind="stable")]
    return [offset + x for x in list(picked) + rest[: want - len(picked)].tolist()]


def generate(cfg: GenConfig) -> Hypergraph:
    """Generate a hypergraph from ``cfg``; identical output for identical configs."""
    cfg.validate()
    rng = SplitMix64(cfg.seed)
    n = cfg.node_count
    sizes = _community_sizes(cfg, rng)
    starts = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    alpha = 1.0 / (cfg.degree_exponent - 1.0)
    cdfs = []
    for s in sizes.tolist():
        w = np.arange(1, s + 1, dtype=np.float64) ** -alpha
        cdf = np.cumsum(w)
        cdfs.append(cdf / cdf[-1])
    community_cdf = np.cumsum(sizes) / n
    uniform_cdf = np.arange(1, n + 1, dtype=np.float64) / n

    m = cfg.edge_count
    lo, hi = cfg.cardinality_range
    cards = rng.integers(lo, hi, m).tolist()
    local = (rng.random(m) >= cfg.noise).tolist()
    picks = np.searchsorted(community_cdf, rng.random(m), side="right").tolist()

    edges = []
    for card, is_local, c in zip(cards, local, picks):
        c = min(c, len(sizes) - 1)
        size = int(sizes[c])
        if is_local and size >= card:
            members = _distinct(rng, cdfs[c], int(starts[c]), size, card)
        elif is_local:
            members = list(range(int(starts[c]), int(starts[c]) + size))
            taken = set(members)
            for x in _distinct(rng, uniform_cdf, 0, n, min(n, card + size)):
                if len(members) == card:
                    break
                if x not in taken:
                    taken.add(x)
                    members.append(x)
        else:
            members = _distinct(rng, uniform_cdf, 0, n, card)
        edges.append(members)
    return Hypergraph([str(i) for i in range(n)], edges)
