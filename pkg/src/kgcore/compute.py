"""(k,g)-core computation: support primitives, EPA, and the naive baseline.

Both peeling algorithms rely on one observation: for two nodes that are
still candidates, their co-occurrence count inside the induced
subhypergraph equals their count in the full hypergraph, because a
restricted edge keeps every surviving member.  Counting co-occurrences over
the raw incidence lists and then discarding removed nodes is therefore
exact.

Auxiliary memory is tracked by :class:`AuxMeter`, an internal accounting of
the slots each algorithm owns, which makes memory comparisons deterministic.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Container, Iterable

from .errors import DomainError
from .hypergraph import Hypergraph

__all__ = [
    "AuxMeter",
    "MemoryReport",
    "support",
    "g_neighbours",
    "epa",
    "naive_kg_core",
    "peak_aux_memory",
    "memory_report",
    "SLOT_BYTES",
    "PAIR_BYTES",
]

# accounted sizes: one machine word per scalar slot, key+value per pair entry
SLOT_BYTES = 8
PAIR_BYTES = 16


class AuxMeter:
    """High-water-mark accounting of algorithm-owned auxiliary storage.

    Three categories are tracked separately:

    ``slots``
        per-node scalars (counts, flags, queue cells);
    ``scratch``
        entries of a transient single-node neighbour map;
    ``pairs``
        entries of persistent per-pair maps (only the naive algorithm).
    """

    def __init__(self):
        self.slots = self.scratch = self.pairs = 0
        self.peak_slots = self.peak_scratch = self.peak_pairs = 0
        self.peak_bytes = 0
        self.peak_entries = 0

    def add(self, slots=0, scratch=0, pairs=0):
        self.slots += slots
        self.scratch += scratch
        self.pairs += pairs
        if slots > 0 or scratch > 0 or pairs > 0:
            self._bump()

    def _bump(self):
        self.peak_slots = max(self.peak_slots, self.slots)
        self.peak_scratch = max(self.peak_scratch, self.scratch)
        self.peak_pairs = max(self.peak_pairs, self.pairs)
        entries = self.slots + self.scratch + self.pairs
        self.peak_entries = max(self.peak_entries, entries)
        nbytes = SLOT_BYTES * self.slots + PAIR_BYTES * (self.scratch + self.pairs)
        self.peak_bytes = max(self.peak_bytes, nbytes)


@dataclass(frozen=True)
class MemoryReport:
    algorithm: str
    peak_bytes: int
    peak_entries: int
    peak_slots: int
    peak_scratch: int
    peak_pairs: int
    result_size: int


def _check_params(k, g):
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"g must be a positive integer, got {g!r}")


def support(G: Hypergraph, u: int, v: int) -> int:
    """Number of hyperedges containing both ``u`` and ``v``."""
    G.check_node(u)
    G.check_node(v)
    if u == v:
        raise DomainError("support of a node with itself is undefined")
    a, b = G.incidence[u], G.incidence[v]
    if len(a) > len(b):
        a, b = b, a
    return len(set(a).intersection(b))


def _cooccurrence(G: Hypergraph, v: int) -> Counter:
    # counts include v itself (value deg(v)); callers drop it
    counts = Counter()
    edges = G.edges
    for e in G.incidence[v]:
        counts.update(edges[e])
    return counts


def g_neighbours(G: Hypergraph, H: Container[int], v: int, g: int) -> dict[int, int]:
    """Map every g-neighbour of ``v`` inside candidate set ``H`` to its support.

    Only co-occurrences with members of ``H`` are considered, and entries
    with fewer than ``g`` shared hyperedges are filtered out.
    """
    G.check_node(v)
    if v not in H:
        raise DomainError(f"node {v} is not in the candidate set")
    counts = _cooccurrence(G, v)
    return {u: c for u, c in counts.items() if c >= g and u != v and u in H}


def epa(G: Hypergraph, k: int, g: int, meter: AuxMeter | None = None) -> set[int]:
    """Efficient peeling algorithm for the (k,g)-core.

    Only the number of g-neighbours is stored per node.  When a node is
    dequeued its g-neighbours among the survivors are recomputed and each
    of them that is not already queued loses one.

    Returns the set of node ids of the (k,g)-core (possibly empty).
    """
    _check_params(k, g)
    n = G.num_nodes
    meter = meter if meter is not None else AuxMeter()
    alive = bytearray(b"\x01") * n
    queued = bytearray(n)
    gcount = [0] * n
    meter.add(slots=3 * n)
    queue = deque()
    edges, incidence = G.edges, G.incidence
    counts = Counter()  # one scratch map, cleared per node

    for v in range(n):
        counts.clear()
        for e in incidence[v]:
            counts.update(edges[e])
        meter.add(scratch=len(counts))
        c = sum(1 for x in counts.values() if x >= g)
        if counts.get(v, 0) >= g:
            c -= 1
        meter.add(scratch=-len(counts))
        gcount[v] = c
        if c < k:
            queue.append(v)
            queued[v] = 1
            meter.add(slots=1)

    while queue:
        v = queue.popleft()
        meter.add(slots=-1)
        counts.clear()
        for e in incidence[v]:
            counts.update(edges[e])
        meter.add(scratch=len(counts))
        alive[v] = 0
        for w, c in counts.items():
            if c < g or not alive[w] or queued[w]:
                continue
            gcount[w] = max(gcount[w] - 1, 0)
            if gcount[w] < k:
                queue.append(w)
                queued[w] = 1
                meter.add(slots=1)
        meter.add(scratch=-len(counts))

    return {v for v in range(n) if alive[v]}


def naive_kg_core(G: Hypergraph, k: int, g: int, meter: AuxMeter | None = None) -> set[int]:
    """Baseline peeling that keeps every node's full g-neighbour map.

    Memory grows with the number of co-occurring node pairs; exposed for
    comparison with :func:`epa`, whose result it always matches.
    """
    _check_params(k, g)
    n = G.num_nodes
    meter = meter if meter is not None else AuxMeter()
    alive = bytearray(b"\x01") * n
    queued = bytearray(n)
    meter.add(slots=2 * n)
    maps: list[dict[int, int] | None] = [None] * n
    queue = deque()

    for v in range(n):
        m: dict[int, int] = {}
        for e in G.incidence[v]:
            for u in G.edges[e]:
                if u != v:
                    if u not in m:
                        m[u] = 1
                        meter.add(pairs=1)
                    else:
                        m[u] += 1
        weak = [u for u, c in m.items() if c < g]
        for u in weak:
            del m[u]
        meter.add(pairs=-len(weak))
        maps[v] = m
        if len(m) < k:
            queue.append(v)
            queued[v] = 1
            meter.add(slots=1)

    while queue:
        v = queue.popleft()
        meter.add(slots=-1)
        alive[v] = 0
        mv = maps[v]
        for u in mv:
            mu = maps[u]
            del mu[v]
            meter.add(pairs=-1)
            if len(mu) < k and not queued[u]:
                queue.append(u)
                queued[u] = 1
                meter.add(slots=1)
        meter.add(pairs=-len(mv))
        maps[v] = None

    return {v for v in range(n) if alive[v]}


_ALGORITHMS = {"epa": epa, "naive": naive_kg_core}


def memory_report(algorithm: str, G: Hypergraph, k: int, g: int) -> MemoryReport:
    """Run ``algorithm`` on ``G`` and report its accounted peak auxiliary memory."""
    try:
        fn = _ALGORITHMS[algorithm]
    except KeyError:
        raise DomainError(f"unknown algorithm {algorithm!r}; expected epa or naive") from None
    meter = AuxMeter()
    result = fn(G, k, g, meter=meter)
    return MemoryReport(
        algorithm=algorithm,
        peak_bytes=meter.peak_bytes,
        peak_entries=meter.peak_entries,
        peak_slots=meter.peak_slots,
        peak_scratch=meter.peak_scratch,
        peak_pairs=meter.peak_pairs,
        result_size=len(result),
    )


def peak_aux_memory(algorithm: str, G: Hypergraph, k: int, g: int) -> int:
    """Accounted peak auxiliary bytes of ``algorithm`` on ``(G, k, g)``."""
    return memory_report(algorithm, G, k, g).peak_bytes
