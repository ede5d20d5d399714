"""Hypergraph data model, edge-list I/O, induced subhypergraphs and statistics.

Nodes are interned to dense integer ids ``0 .. n-1`` in order of first
appearance; the external labels are kept in ``Hypergraph.labels``.  Every
algorithm in the package indexes plain Python lists by these ids.
"""
from __future__ import annotations

import io
import os
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

__all__ = [
    "Hypergraph",
    "SubhypergraphStats",
    "load_hypergraph",
    "loads_hypergraph",
    "dump_hypergraph",
    "dumps_hypergraph",
    "induced",
    "stats",
]

_SEPARATORS = re.compile(r"[,\s]+")


class Hypergraph:
    """Undirected, unweighted hypergraph with a node -> hyperedge index.

    Parameters
    ----------
    labels : sequence of str
        External label of every node; position is the node id.
    edges : iterable of iterables of int
        Hyperedge member ids. Members are deduplicated and sorted.
        Identical hyperedges are kept as distinct edges.
    origin : sequence of int, optional
        For induced subhypergraphs, the index of the parent edge each edge
        was restricted from.
    """

    __slots__ = ("labels", "edges", "incidence", "origin", "_index")

    def __init__(self, labels: Sequence[str], edges: Iterable[Iterable[int]], origin=None):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        self.edges = tuple(tuple(sorted(set(e))) for e in edges)
        incidence = [[] for _ in range(n)]
        for i, members in enumerate(self.edges):
            for v in members:
                if not 0 <= v < n:
                    raise DomainError(f"edge {i} references node id {v} outside [0, {n})")
                incidence[v].append(i)
        self.incidence = tuple(tuple(inc) for inc in incidence)
        self.origin = tuple(origin) if origin is not None else tuple(range(len(self.edges)))
        if len(self.origin) != len(self.edges):
            raise ValueError("origin must be parallel to edges")
        self._index = None

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable]) -> "Hypergraph":
        """Build from hyperedges given as collections of hashable labels."""
        index: dict = {}
        interned = []
        for e in edges:
            ids = []
            for label in e:
                label = str(label)
                if label not in index:
                    index[label] = len(index)
                ids.append(index[label])
            interned.append(ids)
        return cls(list(index), interned)

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def total_degree(self) -> int:
        return sum(len(e) for e in self.edges)

    def max_cardinality(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def node_id(self, label) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self._index[str(label)]
        except KeyError:
            raise DomainError(f"unknown node label {label!r}") from None

    def node_ids(self, labels: Iterable) -> set[int]:
        return {self.node_id(x) for x in labels}

    def label_set(self, nodes: Iterable[int]) -> list[str]:
        """Labels of ``nodes``, sorted lexicographically."""
        return sorted(self.labels[v] for v in nodes)

    def check_node(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.num_nodes:
            raise DomainError(f"node id {v!r} outside [0, {self.num_nodes})")

    def __repr__(self) -> str:
        return f"Hypergraph(|V|={self.num_nodes}, |E|={self.num_edges})"


def _read_lines(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return fh.read().split(b"\n")
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).split(b"\n")
    data = source.read()
    if isinstance(data, str):
        return data.split("\n")
    return data.split(b"\n")


def load_hypergraph(source, format: str = "edge-list") -> Hypergraph:
    """Load a hypergraph from an edge-list file, path, bytes, or stream.

    Each non-empty line is one hyperedge whose node labels are separated by
    spaces, tabs or commas. Lines starting with ``#`` are comments. Repeated
    labels on one line collapse to a single member; singleton hyperedges are
    kept.
    """
    if format != "edge-list":
        raise ValueError(f"unsupported format {format!r}")
    index: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(_read_lines(source), start=1):
        if isinstance(raw, bytes):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise ParseError(f"invalid UTF-8 ({exc.reason})", line=lineno) from None
        else:
            line = raw
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [t for t in _SEPARATORS.split(stripped) if t]
        if not tokens:
            raise ParseError(f"hyperedge has no members: {stripped!r}", line=lineno)
        ids = []
        for t in tokens:
            if t not in index:
                index[t] = len(index)
            ids.append(index[t])
        edges.append(ids)
    return Hypergraph(list(index), edges)


def loads_hypergraph(text: str) -> Hypergraph:
    return load_hypergraph(io.StringIO(text))


def dumps_hypergraph(G: Hypergraph) -> str:
    """Edge-list text for ``G``: one line per edge, space separated labels."""
    return "".join(" ".join(G.labels[v] for v in e) + "\n" for e in G.edges)


def dump_hypergraph(G: Hypergraph, sink) -> None:
    text = dumps_hypergraph(G)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sink.write(text)


def induced(G: Hypergraph, nodes: Iterable[int]) -> Hypergraph:
    """Induced subhypergraph over ``nodes`` with partial participation.

    Each edge is restricted to its members inside ``nodes`` and kept only if
    at least two members remain. The result is re-indexed: node ``i`` of the
    result is the ``i``-th smallest id of ``nodes``, labels are carried over,
    and ``origin`` records the parent edge index of every kept edge.
    """
    keep = sorted(set(nodes))
    for v in keep:
        G.check_node(v)
    remap = {v: i for i, v in enumerate(keep)}
    edges, origin = [], []
    for i, e in enumerate(G.edges):
        restricted = [remap[v] for v in e if v in remap]
        if len(restricted) >= 2:
            edges.append(restricted)
            origin.append(i)
    return Hypergraph([G.labels[v] for v in keep], edges, origin)


@dataclass(frozen=True)
class SubhypergraphStats:
    node_count: int
    edge_count: int
    avg_degree: Fraction
    avg_support: Fraction
    vertex_density: Fraction

    def as_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "avg_degree": float(self.avg_degree),
            "avg_support": float(self.avg_support),
            "vertex_density": float(self.vertex_density),
        }


def stats(G: Hypergraph, nodes: Iterable[int] | None = None) -> SubhypergraphStats:
    """Node/edge counts, average degree and support of ``G[nodes]``.

    ``avg_support`` averages the co-occurrence count over every unordered
    node pair that shares at least one induced edge.
    """
    sub = G if nodes is None else induced(G, nodes)
    n, m = sub.num_nodes, sub.num_edges
    if n == 0:
        zero = Fraction(0)
        return SubhypergraphStats(0, 0, zero, zero, zero)
    pair_support = Counter()
    for e in sub.edges:
        pair_support.update(combinations(e, 2))
    if pair_support:
        avg_support = Fraction(sum(pair_support.values()), len(pair_support))
    else:
        avg_support = Fraction(0)
    return SubhypergraphStats(
        node_count=n,
        edge_count=m,
        avg_degree=Fraction(sub.total_degree(), n),
        avg_support=avg_support,
        vertex_density=Fraction(m, n),
    )
