"""Three-level academic role assignment by thresholding one author metric."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Set

from .corpus import AuthorRecord, CorpusBundle
from .graph import WeightedAuthorGraph, degree


class Role(enum.IntEnum):
    STUDENT = 0
    ASSISTANT = 1
    PRIME = 2

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def parse(cls, text: str) -> "Role":
        key = text.strip().lower().replace("_", " ").replace("-", " ")
        for role, names in _ALIASES.items():
            if key in names:
                return role
        raise ValueError(f"unknown role {text!r}")


_LABELS = {Role.PRIME: "prime", Role.ASSISTANT: "assistant", Role.STUDENT: "student"}
_ALIASES = {
    Role.PRIME: {"prime", "prime professor", "primeprofessor"},
    Role.ASSISTANT: {"assistant", "assistant professor", "assistantprofessor"},
    Role.STUDENT: {"student", "phd student"},
}


class CriterionKind(str, enum.Enum):
    PAPER = "paper"
    CITATION = "citation"
    NEIGHBOR = "neighbor"


@dataclass(frozen=True)
class RoleCriterion:
    kind: CriterionKind = CriterionKind.PAPER
    t1: int = 20
    t2: int = 40

    def __post_init__(self):
        object.__setattr__(self, "kind", CriterionKind(self.kind))
        if self.t1 < 0 or self.t2 < 0:
            raise ValueError("thresholds must be non-negative")
        if not self.t1 < self.t2:
            raise ValueError(f"need t1 < t2, got t1={self.t1}, t2={self.t2}")

    def role_for(self, metric: int) -> Role:
        if metric > self.t2:
            return Role.PRIME
        if metric > self.t1:
            return Role.ASSISTANT
        return Role.STUDENT


def metric_value(author: AuthorRecord, graph: WeightedAuthorGraph, c: RoleCriterion) -> int:
    if c.kind is CriterionKind.PAPER:
        return author.paper_count
    if c.kind is CriterionKind.CITATION:
        return author.total_citations
    return degree(graph, author.name)


def classify(author: AuthorRecord, graph: WeightedAuthorGraph, c: RoleCriterion = RoleCriterion()) -> Role:
    return c.role_for(metric_value(author, graph, c))


def partition(bundle: CorpusBundle, graph: WeightedAuthorGraph,
              c: RoleCriterion = RoleCriterion()) -> Dict[Role, Set[str]]:
    groups: Dict[Role, Set[str]] = {r: set() for r in Role}
    for name, rec in bundle.authors.items():
        groups[classify(rec, graph, c)].add(name)
    return groups
