"""Full (k,g)-core decomposition and the coreness skyline index.

:func:`bca` enumerates every non-empty (k,g)-core with a bucket queue per
support threshold ``g``; :func:`deduplicate` reduces those cores to the
maximal (k,g) pairs of each node.  The resulting :class:`CorenessSkyline`
answers (k,g)-core queries without touching the hypergraph: a node lies in
the (k,g)-core iff one of its skyline pairs dominates (k,g).
"""
from __future__ import annotations

import json
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, IndexValidationError, IndexVersionError, ParseError
from .hypergraph import Hypergraph

__all__ = [
    "CorenessSkyline",
    "DecompositionResult",
    "bca",
    "deduplicate",
    "query_core",
    "coreness_projections",
    "save_index",
    "load_index",
    "cores_to_json",
]

INDEX_VERSION = 1

Pair = tuple[int, int]


class CorenessSkyline:
    """Per-node lists of maximal, mutually non-dominating (k,g) pairs.

    Pairs are stored sorted by ascending ``k`` (hence descending ``g``).
    """

    def __init__(self, labels: Sequence[str], skylines: Sequence[Iterable[Pair]]):
        if len(labels) != len(skylines):
            raise ValueError("labels and skylines must be parallel")
        self.labels = tuple(str(x) for x in labels)
        self.skylines = tuple(tuple(sorted((int(k), int(g)) for k, g in s)) for s in skylines)
        self._index = None

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, v: int) -> tuple[Pair, ...]:
        return self.skylines[v]

    def __eq__(self, other):
        if not isinstance(other, CorenessSkyline):
            return NotImplemented
        return self.labels == other.labels and self.skylines == other.skylines

    def __repr__(self):
        return f"CorenessSkyline({len(self)} nodes)"

    def node_id(self, label) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self._index[str(label)]
        except KeyError:
            raise DomainError(f"unknown node label {label!r}") from None

    def validate(self) -> None:
        """Raise :class:`IndexValidationError` if any skyline is malformed."""
        for v, sky in enumerate(self.skylines):
            for k, g in sky:
                if k < 1 or g < 1:
                    raise IndexValidationError(f"node {self.labels[v]!r}: non-positive pair ({k},{g})")
            for a, b in zip(sky, sky[1:]):
                if a == b:
                    raise IndexValidationError(f"node {self.labels[v]!r}: repeated pair {a}")
            for i, (k1, g1) in enumerate(sky):
                for k2, g2 in sky[i + 1:]:
                    if (k1 >= k2 and g1 >= g2) or (k2 >= k1 and g2 >= g1):
                        raise IndexValidationError(
                            f"node {self.labels[v]!r}: pair ({k1},{g1}) and ({k2},{g2}) dominate each other"
                        )

    @property
    def k_max(self) -> int:
        return max((k for s in self.skylines for k, _ in s), default=0)

    @property
    def g_max(self) -> int:
        return max((g for s in self.skylines for _, g in s), default=0)

    def to_json(self) -> dict:
        return {
            "version": INDEX_VERSION,
            "labels": list(self.labels),
            "skylines": [[[k, g] for k, g in s] for s in self.skylines],
        }

    @classmethod
    def from_json(cls, data) -> "CorenessSkyline":
        if not isinstance(data, dict):
            raise ParseError("index must be a JSON object")
        if "version" not in data:
            raise ParseError("index has no version field")
        if data["version"] != INDEX_VERSION:
            raise IndexVersionError(f"unsupported index version {data['version']!r}")
        labels, skylines = data.get("labels"), data.get("skylines")
        if not isinstance(labels, list) or not isinstance(skylines, list):
            raise ParseError("index needs 'labels' and 'skylines' arrays")
        if len(labels) != len(skylines):
            raise ParseError("'labels' and 'skylines' differ in length")
        parsed = []
        for sky in skylines:
            if not isinstance(sky, list):
                raise ParseError("each skyline must be an array of [k, g] pairs")
            pairs = []
            for p in sky:
                if (not isinstance(p, list) or len(p) != 2
                        or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
                    raise ParseError(f"malformed skyline pair {p!r}")
                pairs.append((p[0], p[1]))
            parsed.append(pairs)
        index = cls(labels, parsed)
        index.validate()
        return index


@dataclass
class DecompositionResult:
    """All non-empty (k,g)-cores and the skyline derived from them."""

    raw: dict[Pair, frozenset[int]]
    skyline: CorenessSkyline
    g_levels: int = field(default=0)

    @property
    def k_max(self) -> int:
        return max((k for k, _ in self.raw), default=0)

    @property
    def g_max(self) -> int:
        return max((g for _, g in self.raw), default=0)


def _peel_all_k(G: Hypergraph, g: int, raw: dict) -> bool:
    """Record every non-empty (k,g)-core for fixed ``g``.

    Returns False when no node has a single g-neighbour, i.e. every core at
    this and larger ``g`` is empty.
    """
    n = G.num_nodes
    edges, incidence = G.edges, G.incidence
    alive = bytearray(b"\x01") * n
    queued = bytearray(n)
    count = [0] * n
    buckets: dict[int, set[int]] = {}
    counts = Counter()

    for v in range(n):
        counts.clear()
        for e in incidence[v]:
            counts.update(edges[e])
        c = sum(1 for x in counts.values() if x >= g)
        if counts.get(v, 0) >= g:
            c -= 1
        count[v] = c
        buckets.setdefault(c, set()).add(v)

    if not any(key > 0 and members for key, members in buckets.items()):
        return False

    survivors = n
    k = 0
    low = 0  # every bucket below `low` is empty
    queue = deque()
    while survivors:
        k += 1
        for j in range(low, k):
            members = buckets.get(j)
            if members:
                for v in members:
                    if not queued[v]:
                        queued[v] = 1
                        queue.append(v)
        low = k

        while queue:
            v = queue.popleft()
            counts.clear()
            for e in incidence[v]:
                counts.update(edges[e])
            alive[v] = 0
            survivors -= 1
            buckets[count[v]].discard(v)
            for w, c in counts.items():
                if c < g or not alive[w] or queued[w]:
                    continue
                old = count[w]
                buckets[old].discard(w)
                new = max(old - 1, 0)
                count[w] = new
                if new < k:
                    queued[w] = 1
                    queue.append(w)
                buckets.setdefault(new, set()).add(w)

        if survivors:
            raw[(k, g)] = frozenset(v for v in range(n) if alive[v])
    return True


def deduplicate(raw: Mapping[Pair, Iterable[int]], num_nodes: int | None = None) -> list[list[Pair]]:
    """Reduce raw cores to maximal (k,g) pairs per node.

    A node of the (k,g)-core receives the pair (k,g) unless it also lies in
    the (k+1,g)- or (k,g+1)-core.  Missing keys count as empty cores.
    Returns one pair list per node id, ascending in ``k``.
    """
    if num_nodes is None:
        num_nodes = 1 + max((v for core in raw.values() for v in core), default=-1)
    skylines: list[list[Pair]] = [[] for _ in range(num_nodes)]
    empty: frozenset = frozenset()
    for k, g in sorted(raw, key=lambda p: (p[1], p[0])):
        remaining = set(raw[(k, g)])
        remaining -= set(raw.get((k + 1, g), empty))
        remaining -= set(raw.get((k, g + 1), empty))
        for v in remaining:
            skylines[v].append((k, g))
    for s in skylines:
        s.sort()
    return skylines


def bca(G: Hypergraph) -> DecompositionResult:
    """Bucket-based coreness algorithm: every (k,g)-core and each node's skyline."""
    raw: dict[Pair, frozenset[int]] = {}
    g = 1
    while _peel_all_k(G, g, raw):
        g += 1
    skyline = CorenessSkyline(G.labels, deduplicate(raw, G.num_nodes))
    return DecompositionResult(raw=raw, skyline=skyline, g_levels=g - 1)


def query_core(index: CorenessSkyline, k: int, g: int) -> set[int]:
    """Node ids of the (k,g)-core, answered from the skyline index alone."""
    if not isinstance(k, int) or k < 1 or not isinstance(g, int) or g < 1:
        raise DomainError(f"k and g must be positive integers, got ({k!r}, {g!r})")
    return {
        v for v, sky in enumerate(index.skylines)
        if any(a >= k and b >= g for a, b in sky)
    }


def coreness_projections(index: CorenessSkyline, v: int) -> tuple[dict[int, int], dict[int, int]]:
    """k-coreness and g-coreness maps of node ``v``.

    ``k_coreness[k]`` is the largest ``g`` with ``v`` in the (k,g)-core and
    ``g_coreness[g]`` the largest ``k`` with ``v`` in the (k,g)-core; keys
    cover exactly the parameter values for which ``v`` is in some core.
    """
    if not isinstance(v, int) or not 0 <= v < len(index):
        raise DomainError(f"node id {v!r} is not indexed")
    sky = index.skylines[v]
    k_top = max((a for a, _ in sky), default=0)
    g_top = max((b for _, b in sky), default=0)
    k_coreness = {k: max(b for a, b in sky if a >= k) for k in range(1, k_top + 1)}
    g_coreness = {g: max(a for a, b in sky if b >= g) for g in range(1, g_top + 1)}
    return k_coreness, g_coreness


def save_index(index: CorenessSkyline, sink) -> None:
    """Write ``index`` as JSON to a path or text stream."""
    text = json.dumps(index.to_json(), separators=(",", ":"))
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sink.write(text)


def load_index(source) -> CorenessSkyline:
    """Read an index written by :func:`save_index` from a path or stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            text = fh.read()
    else:
        text = source.read()
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"index is not valid JSON: {exc}") from None
    return CorenessSkyline.from_json(data)


def cores_to_json(G_labels: Sequence[str], raw: Mapping[Pair, Iterable[int]]) -> dict[str, list[str]]:
    """Raw cores keyed by ``"k,g"`` with sorted label arrays, ascending (g, k)."""
    return {
        f"{k},{g}": sorted(G_labels[v] for v in raw[(k, g)])
        for k, g in sorted(raw, key=lambda p: (p[1], p[0]))
    }
