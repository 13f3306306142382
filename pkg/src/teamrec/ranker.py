"""Candidate scoring on the blended graph and team assembly.

A candidate's score is ``F = I1 * I2`` where ``I1`` is the mean blended
weight of the candidate's incident edges and ``I2`` is the reciprocal hop
distance from the seed researcher.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, List, Optional

from .corpus import resolve_author
from .errors import InvalidRequest
from .graph import WeightedAuthorGraph, bfs_distances, blend, build_query_graph, hop_distance, pair_key
from .model import Model
from .roles import Role, RoleCriterion, classify, partition
from .text_index import SCORERS, Bm25Params, QueryTerms

PAIRINGS = ("aligned", "product")


@dataclass
class CandidateScore:
    author: str
    i1: float
    i2: Optional[float]
    f: float
    role: Optional[Role] = None

    def to_dict(self) -> dict:
        return {
            "name": self.author,
            "role": self.role.label if self.role is not None else None,
            "i1": self.i1,
            "i2": self.i2,
            "f": self.f,
        }


@dataclass
class RecommendRequest:
    seed_name: str
    query: str
    seed_role: Optional[Role] = None
    interest: Optional[str] = None
    top_k: int = 2
    scorer: str = "bm25"
    criterion: RoleCriterion = field(default_factory=RoleCriterion)
    pairing: str = "aligned"
    interest_in_query: bool = True
    bm25: Bm25Params = field(default_factory=Bm25Params)

    def validate(self):
        if not isinstance(self.top_k, int) or self.top_k < 1:
            raise InvalidRequest(f"top_k must be a positive integer, got {self.top_k!r}")
        if self.scorer not in SCORERS:
            raise InvalidRequest(f"unknown scorer {self.scorer!r}")
        if self.pairing not in PAIRINGS:
            raise InvalidRequest(f"unknown pairing {self.pairing!r}")

    def query_terms(self) -> QueryTerms:
        text = self.query
        if self.interest and self.interest_in_query:
            text = f"{self.query} {self.interest}"
        return QueryTerms.from_text(text)


@dataclass
class TeamRecommendation:
    seed_name: str
    seed_role: Role
    query: str
    interest: Optional[str]
    k: int
    pairs: List[List[CandidateScore]]
    fallback_used: bool = False

    def to_dict(self) -> dict:
        return {
            "seed": {"name": self.seed_name, "role": self.seed_role.label},
            "query": self.query,
            "interest": self.interest,
            "k": self.k,
            "fallback_used": self.fallback_used,
            "pairs": [
                {"rank": i, "members": [m.to_dict() for m in pair]}
                for i, pair in enumerate(self.pairs, start=1)
            ],
        }


def avg_incident_weight(graph: WeightedAuthorGraph, name: str) -> float:
    nbrs = graph.neighbors(name)
    if not nbrs:
        return 0.0
    w = graph.weights
    # fsum keeps the mean independent of set iteration order
    return math.fsum(w[pair_key(name, v)] for v in nbrs) / len(nbrs)


def proximity(graph: WeightedAuthorGraph, seed: str, name: str) -> Optional[float]:
    hops = hop_distance(graph, seed, name)
    return None if hops is None else 1.0 / hops


def _candidate(graph, name, hops, role=None) -> CandidateScore:
    i1 = avg_incident_weight(graph, name)
    if hops is None:
        return CandidateScore(name, i1, None, 0.0, role)
    i2 = 1.0 / hops
    return CandidateScore(name, i1, i2, i1 * i2, role)


def f_score(graph: WeightedAuthorGraph, seed: str, name: str, role: Optional[Role] = None) -> CandidateScore:
    return _candidate(graph, name, hop_distance(graph, seed, name), role)


def rank_role(graph: WeightedAuthorGraph, seed: str, candidates: Iterable[str], k: int,
              role: Optional[Role] = None) -> List[CandidateScore]:
    """Top ``k`` candidates by F, ties by name.

    Candidates with F == 0 (isolated or unreachable) only fill a shortfall,
    ordered by I1 then name.
    """
    candidates = [c for c in candidates if c != seed]
    if not candidates or k < 1:
        return []
    dist = bfs_distances(graph, seed)
    scored = [_candidate(graph, c, dist.get(c), role) for c in candidates]
    # str ordering is code point order, which matches UTF-8 byte order
    top = heapq.nsmallest(k, (s for s in scored if s.f > 0), key=lambda s: (-s.f, s.author))
    if len(top) < k:
        rest = (s for s in scored if s.f == 0)
        top += heapq.nsmallest(k - len(top), rest, key=lambda s: (-s.i1, s.author))
    return top


def missing_roles(seed_role: Role) -> List[Role]:
    return [r for r in sorted(Role, reverse=True) if r != seed_role]


def _pair_up(first, second, k, mode):
    if mode == "aligned":
        return [[a, b] for a, b in zip(first, second)]
    combos = heapq.nsmallest(
        k, product(first, second), key=lambda ab: (-(ab[0].f + ab[1].f), ab[0].author, ab[1].author))
    return [list(ab) for ab in combos]


def recommend_team(model: Model, request: RecommendRequest) -> TeamRecommendation:
    request.validate()
    seed = resolve_author(model.bundle, request.seed_name)

    query = build_query_graph(model.bundle, model.collab, request.query_terms(), model.index,
                              request.scorer, request.bm25)
    graph = blend(model.citation, query)

    seed_role = request.seed_role
    if seed_role is None:
        seed_role = classify(seed, model.citation, request.criterion)
    groups = partition(model.bundle, model.citation, request.criterion)

    ranked = [rank_role(graph, seed.name, groups[r], request.top_k, r) for r in missing_roles(seed_role)]
    pairs = _pair_up(ranked[0], ranked[1], request.top_k, request.pairing)
    fallback = any(m.f == 0 for pair in pairs for m in pair)
    return TeamRecommendation(seed.name, seed_role, request.query, request.interest,
                              request.top_k, pairs, fallback)
