"""Academic team recommendation over a citation/query blended co-authorship graph."""

from .corpus import AuthorRecord, CorpusBundle, PaperRecord, parse_corpus, parse_corpus_file, resolve_author
from .errors import (AuthorNotFound, EmptyEdgeSet, GraphShapeMismatch, IndexEmpty, InvalidRequest,
                     SameNode, SnapshotError, TeamRecError)
from .graph import WeightedAuthorGraph, blend, build_citation_graph, build_collab_index, build_query_graph
from .model import Model, prepare
from .ranker import RecommendRequest, TeamRecommendation, recommend_team
from .roles import CriterionKind, Role, RoleCriterion, classify, partition
from .text_index import Bm25Params, QueryTerms, bm25_score, build_index, tfidf_score, tokenize

__version__ = "0.1.0"
