"""Query-independent state built once per corpus and shared by every request."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import CorpusBundle
from .errors import IndexEmpty
from .graph import CollabIndex, WeightedAuthorGraph, build_citation_graph, build_collab_index
from .text_index import CorpusStats, DocumentTerms, TextIndex, build_index


@dataclass
class Model:
    bundle: CorpusBundle
    index: TextIndex
    collab: CollabIndex
    citation: WeightedAuthorGraph


def empty_index(bundle: CorpusBundle) -> TextIndex:
    """Index for a corpus without a single token: every score is 0."""
    docs = {pid: DocumentTerms(pid, {}, 0) for pid in bundle.papers}
    return TextIndex(docs, CorpusStats(len(docs), 0.0, {}))


def prepare(bundle: CorpusBundle, stopwords=None) -> Model:
    try:
        index = build_index(bundle, stopwords)
    except IndexEmpty:
        index = empty_index(bundle)
    collab = build_collab_index(bundle)
    return Model(bundle, index, collab, build_citation_graph(bundle, collab))
