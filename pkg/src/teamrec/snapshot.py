"""Versioned JSON snapshot of the query-independent model.

See docs/snapshot_format.md for the field layout. Files ending in ``.gz``
are gzip-compressed; the JSON payload is the same.
"""

from __future__ import annotations

import gzip
import json
import os
import tempfile
from pathlib import Path

from .corpus import AuthorRecord, CorpusBundle, PaperRecord
from .errors import SnapshotError
from .graph import WeightedAuthorGraph, build_collab_index
from .model import Model
from .text_index import CorpusStats, DocumentTerms, TextIndex

FORMAT_NAME = "teamrec-snapshot"
FORMAT_VERSION = 1


def to_payload(model: Model) -> dict:
    b, ix, g = model.bundle, model.index, model.citation
    return {
        "format": FORMAT_NAME,
        "format_version": FORMAT_VERSION,
        "corpus": {
            "papers": [
                {
                    "id": p.id,
                    "title": p.title,
                    "authors": p.authors,
                    "year": p.year,
                    "venue": p.venue,
                    "references": p.references,
                    "abstract": p.abstract,
                    "in_citations": p.in_citations,
                }
                for p in b.papers.values()
            ],
            "authors": [
                {
                    "name": a.name,
                    "papers": a.papers,
                    "paper_count": a.paper_count,
                    "total_citations": a.total_citations,
                }
                for a in b.authors.values()
            ],
        },
        "index": {
            "doc_count": ix.stats.doc_count,
            "avg_len": ix.stats.avg_len,
            "doc_freq": ix.stats.doc_freq,
            "documents": [
                {"paper_id": d.paper_id, "length": d.length, "term_freq": d.term_freq}
                for d in ix.docs.values()
            ],
        },
        "citation_graph": {
            "nodes": sorted(g.nodes),
            "edges": [[a, b, w] for (a, b), w in sorted(g.weights.items())],
        },
    }


def from_payload(data: dict) -> Model:
    if not isinstance(data, dict) or data.get("format") != FORMAT_NAME:
        raise SnapshotError("not a teamrec snapshot")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise SnapshotError(f"unsupported snapshot version {version!r} (expected {FORMAT_VERSION})")
    try:
        corpus = data["corpus"]
        bundle = CorpusBundle(
            papers={p["id"]: PaperRecord(**p) for p in corpus["papers"]},
            authors={a["name"]: AuthorRecord(**a) for a in corpus["authors"]},
        )
        ix = data["index"]
        docs = {d["paper_id"]: DocumentTerms(**d) for d in ix["documents"]}
        index = TextIndex(docs, CorpusStats(ix["doc_count"], ix["avg_len"], ix["doc_freq"]))
        cg = data["citation_graph"]
        citation = WeightedAuthorGraph(set(cg["nodes"]), {(a, b): w for a, b, w in cg["edges"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise SnapshotError(f"malformed snapshot: {exc}") from exc
    collab = build_collab_index(bundle)
    if collab.keys() != citation.weights.keys():
        raise SnapshotError("citation graph edges disagree with the corpus co-authorships")
    return Model(bundle, index, collab, citation)


def save(model: Model, path) -> None:
    path = Path(path)
    raw = json.dumps(to_payload(model), ensure_ascii=False, separators=(",", ":")).encode("utf-8") + b"\n"
    if path.suffix == ".gz":
        raw = gzip.compress(raw, mtime=0)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(raw)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def load(path) -> Model:
    path = Path(path)
    raw = path.read_bytes()
    if path.suffix == ".gz":
        raw = gzip.decompress(raw)
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SnapshotError(f"{path}: not valid JSON ({exc})") from exc
    return from_payload(data)
