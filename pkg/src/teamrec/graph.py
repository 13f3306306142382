"""Co-authorship graphs: citation weights, query weights and their blend.

All three graphs share one edge set, the co-authorship relation. Edge keys
are unordered author pairs stored as sorted tuples.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple

from .corpus import CorpusBundle
from .errors import AuthorNotFound, EmptyEdgeSet, GraphShapeMismatch, SameNode
from .text_index import Bm25Params, QueryTerms, TextIndex, score_documents

Pair = Tuple[str, str]
CollabIndex = Dict[Pair, List[str]]


def pair_key(a: str, b: str) -> Pair:
    if a == b:
        raise ValueError(f"an author pair needs two distinct names, got {a!r} twice")
    return (a, b) if a < b else (b, a)


@dataclass
class WeightedAuthorGraph:
    nodes: Set[str]
    weights: Dict[Pair, float]
    adjacency: Dict[str, Set[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: Dict[str, Set[str]] = {n: set() for n in self.nodes}
        for a, b in self.weights:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        self.nodes = set(adj)
        self.adjacency = adj

    def weight(self, a: str, b: str) -> float:
        return self.weights[pair_key(a, b)]

    def neighbors(self, name: str) -> Set[str]:
        try:
            return self.adjacency[name]
        except KeyError:
            raise AuthorNotFound(name) from None

    @property
    def edge_count(self) -> int:
        return len(self.weights)


def build_collab_index(bundle: CorpusBundle) -> CollabIndex:
    """Map every co-author pair to the papers the two wrote together."""
    collab: CollabIndex = {}
    for pid, paper in bundle.papers.items():
        for a, b in combinations(paper.authors, 2):
            collab.setdefault(pair_key(a, b), []).append(pid)
    return collab


def build_citation_graph(bundle: CorpusBundle, collab: CollabIndex) -> WeightedAuthorGraph:
    """Edge weight is the summed in-citation count of the pair's joint papers.

    Pairs whose joint papers are uncited keep a zero-weight edge.
    """
    papers = bundle.papers
    weights = {pair: sum(papers[pid].in_citations for pid in pids) for pair, pids in collab.items()}
    return WeightedAuthorGraph(set(bundle.authors), weights)


def build_query_graph(bundle: CorpusBundle, collab: CollabIndex, q: QueryTerms, index: TextIndex,
                      scorer: str = "bm25", params: Bm25Params = Bm25Params()) -> WeightedAuthorGraph:
    """Edge weight is the summed relevance of the pair's joint papers to ``q``."""
    scores = score_documents(q, index.candidates(q), index, scorer, params)
    parts: Dict[Pair, List[float]] = {}
    for pid, s in scores.items():
        if s == 0.0:
            continue
        for a, b in combinations(bundle.papers[pid].authors, 2):
            parts.setdefault(pair_key(a, b), []).append(s)
    weights = {pair: math.fsum(parts[pair]) if pair in parts else 0.0 for pair in collab}
    return WeightedAuthorGraph(set(bundle.authors), weights)


def minmax_normalize(weights: Mapping[Pair, float]) -> Dict[Pair, float]:
    """Rescale to [0, 1] with (w - min) / (max - min).

    A constant map (max == min) normalizes to all ones so that the edges keep
    their presence in the blend.
    """
    if not weights:
        raise EmptyEdgeSet("cannot normalize an empty edge set")
    lo = min(weights.values())
    hi = max(weights.values())
    if hi == lo:
        return dict.fromkeys(weights, 1.0)
    span = hi - lo
    return {k: (w - lo) / span for k, w in weights.items()}


def blend(citation: WeightedAuthorGraph, query: WeightedAuthorGraph) -> WeightedAuthorGraph:
    if citation.weights.keys() != query.weights.keys():
        raise GraphShapeMismatch(
            f"edge sets differ ({len(citation.weights)} vs {len(query.weights)} edges)")
    nodes = citation.nodes | query.nodes
    if not citation.weights:
        return WeightedAuthorGraph(nodes, {})
    nc = minmax_normalize(citation.weights)
    nq = minmax_normalize(query.weights)
    return WeightedAuthorGraph(nodes, {k: nc[k] + nq[k] for k in nc})


def degree(graph: WeightedAuthorGraph, author: str) -> int:
    return len(graph.neighbors(author))


def bfs_distances(graph: WeightedAuthorGraph, src: str, targets: Optional[Iterable[str]] = None) -> Dict[str, int]:
    """Hop counts from ``src`` to every reachable node (``src`` itself at 0).

    With ``targets``, stops as soon as all of them have been reached.
    """
    adj = graph.adjacency
    if src not in adj:
        raise AuthorNotFound(src)
    dist = {src: 0}
    remaining = set(targets) - {src} if targets is not None else None
    frontier = deque([src])
    while frontier:
        u = frontier.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if v in dist:
                continue
            dist[v] = du
            frontier.append(v)
            if remaining is not None:
                remaining.discard(v)
                if not remaining:
                    return dist
    return dist


def hop_distance(graph: WeightedAuthorGraph, src: str, dst: str) -> Optional[int]:
    """Unweighted shortest path length, or None when ``dst`` is unreachable."""
    if src == dst:
        raise SameNode(src)
    if dst not in graph.adjacency:
        raise AuthorNotFound(dst)
    return bfs_distances(graph, src, (dst,)).get(dst)
