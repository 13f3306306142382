"""Tokenization, corpus statistics and query relevance scoring (BM25 / TF-IDF)."""

from __future__ import annotations

import logging
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from .corpus import CorpusBundle
from .errors import IndexEmpty

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"[^\W_]+")

SCORERS = ("bm25", "tfidf")


def tokenize(text: str, stopwords: Optional[Iterable[str]] = None) -> List[str]:
    """Lowercase and split on every non-alphanumeric character.

    No stemming. ``stopwords``, when given, are removed after lowercasing.
    """
    tokens = _TOKEN.findall(text.lower()) if text else []
    if stopwords:
        stop = set(stopwords)
        tokens = [t for t in tokens if t not in stop]
    return tokens


@dataclass
class DocumentTerms:
    paper_id: str
    term_freq: Dict[str, int]
    length: int

    @classmethod
    def from_text(cls, paper_id, text, stopwords=None):
        tokens = tokenize(text, stopwords)
        return cls(paper_id, dict(Counter(tokens)), len(tokens))


@dataclass
class CorpusStats:
    doc_count: int
    avg_len: float
    doc_freq: Dict[str, int]


@dataclass(frozen=True)
class Bm25Params:
    k1: float = 1.5
    b: float = 0.75

    def __post_init__(self):
        if self.k1 < 0:
            raise ValueError(f"k1 must be >= 0, got {self.k1}")
        if not 0 <= self.b <= 1:
            raise ValueError(f"b must be in [0, 1], got {self.b}")


@dataclass
class QueryTerms:
    raw: str
    term_freq: Dict[str, int]

    @classmethod
    def from_text(cls, raw, stopwords=None):
        return cls(raw, dict(Counter(tokenize(raw, stopwords))))


@dataclass
class TextIndex:
    docs: Dict[str, DocumentTerms]
    stats: CorpusStats
    _postings: Optional[Dict[str, List[str]]] = field(default=None, repr=False, compare=False)

    def postings(self, term: str) -> List[str]:
        """Ids of the documents containing ``term``, in corpus order."""
        if self._postings is None:
            inv: Dict[str, List[str]] = {}
            for pid, doc in self.docs.items():
                for w in doc.term_freq:
                    inv.setdefault(w, []).append(pid)
            self._postings = inv
        return self._postings.get(term, [])

    def candidates(self, q: QueryTerms) -> List[str]:
        """Documents sharing at least one term with ``q``; every other score is 0."""
        seen: Dict[str, None] = {}
        for w in q.term_freq:
            for pid in self.postings(w):
                seen[pid] = None
        return list(seen)


def build_index(bundle: CorpusBundle, stopwords=None) -> TextIndex:
    docs: Dict[str, DocumentTerms] = {}
    df: Counter = Counter()
    total = 0
    for pid, paper in bundle.papers.items():
        doc = DocumentTerms.from_text(pid, paper.text, stopwords)
        docs[pid] = doc
        df.update(doc.term_freq.keys())
        total += doc.length
    if total == 0:
        raise IndexEmpty("corpus has no document with at least one token")
    stats = CorpusStats(doc_count=len(docs), avg_len=total / len(docs), doc_freq=dict(df))
    return TextIndex(docs, stats)


def _idf(s: CorpusStats, w: str) -> float:
    return math.log((s.doc_count + 1) / s.doc_freq[w])


def bm25_score(q: QueryTerms, d: DocumentTerms, s: CorpusStats, p: Bm25Params = Bm25Params()) -> float:
    """Modified BM25 with IDF ``ln((|D| + 1) / df(w))`` and natural log."""
    if d.length == 0:
        return 0.0
    norm = p.k1 * (1 - p.b + p.b * d.length / s.avg_len)
    parts = []
    for w, cq in q.term_freq.items():
        cd = d.term_freq.get(w, 0)
        if not cd:
            continue
        damped = (p.k1 + 1) * cd / (cd + norm)
        parts.append(cq * damped * _idf(s, w))
    return math.fsum(parts)


def tfidf_score(q: QueryTerms, d: DocumentTerms, s: CorpusStats) -> float:
    """Raw term frequency times the same IDF as :func:`bm25_score`."""
    parts = []
    for w, cq in q.term_freq.items():
        cd = d.term_freq.get(w, 0)
        if cd:
            parts.append(cq * cd * _idf(s, w))
    return math.fsum(parts)


def score_documents(q: QueryTerms, ids: Iterable[str], index: TextIndex, scorer: str = "bm25",
                    params: Bm25Params = Bm25Params()) -> Dict[str, float]:
    if scorer == "bm25":
        fn = lambda d: bm25_score(q, d, index.stats, params)  # noqa: E731
    elif scorer == "tfidf":
        fn = lambda d: tfidf_score(q, d, index.stats)  # noqa: E731
    else:
        raise ValueError(f"unknown scorer {scorer!r}, expected one of {SCORERS}")
    out = {}
    for pid in ids:
        doc = index.docs.get(pid)
        if doc is None:
            log.warning("score_documents: unknown paper id %r skipped", pid)
            continue
        out[pid] = fn(doc)
    return out
