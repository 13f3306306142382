"""Reader for the Arnetminer/DBLP citation dump format.

A dump is a sequence of blank-line separated blocks, one paper each::

    #*<title>
    #@<author>;<author>,<author>
    #t<year>          (or #year<year>)
    #c<venue>         (or #conf<venue>)
    #index<id>
    #%<referenced id> (repeatable)
    #!<abstract>

Author identity is the trimmed name string. Citation counts are always
recomputed from the reference lines inside the parsed corpus.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from .errors import AuthorNotFound

log = logging.getLogger(__name__)

_AUTHOR_SEP = re.compile(r"[;,]")

# tag -> field; None marks tags that are recognized but ignored
_SLOTS = {
    "index": "id",
    "year": "year",
    "conf": "venue",
    "citation": None,
    "arnetid": None,
    "*": "title",
    "@": "authors",
    "t": "year",
    "c": "venue",
    "%": "ref",
    "!": "abstract",
}
# longer tags first so that #year is not read as #t, #conf as #c
_TAG = re.compile("#(%s)(.*)" % "|".join(re.escape(t) for t in sorted(_SLOTS, key=len, reverse=True)))


@dataclass
class PaperRecord:
    id: str
    title: str
    authors: List[str]
    year: Optional[int] = None
    venue: Optional[str] = None
    references: List[str] = field(default_factory=list)
    abstract: Optional[str] = None
    in_citations: int = 0

    @property
    def text(self) -> str:
        """Title plus abstract; the document indexed for query relevance."""
        if self.abstract:
            return f"{self.title} {self.abstract}"
        return self.title


@dataclass
class AuthorRecord:
    name: str
    papers: List[str] = field(default_factory=list)
    paper_count: int = 0
    total_citations: int = 0


@dataclass(frozen=True)
class ParseWarning:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


@dataclass
class CorpusBundle:
    papers: Dict[str, PaperRecord] = field(default_factory=dict)
    authors: Dict[str, AuthorRecord] = field(default_factory=dict)
    warnings: List[ParseWarning] = field(default_factory=list, compare=False)
    skipped: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.papers)


def split_authors(payload: str) -> List[str]:
    """Split an author line on ``;`` and ``,``; trims, drops empties and repeats."""
    seen = {}
    for tok in _AUTHOR_SEP.split(payload):
        tok = tok.strip()
        if tok:
            seen.setdefault(tok, None)
    return list(seen)


class _Block:
    __slots__ = ("start", "id", "title", "authors", "year", "venue", "refs", "abstract")

    def __init__(self, start):
        self.start = start
        self.id = None
        self.title = None
        self.authors = []
        self.year = None
        self.venue = None
        self.refs = []
        self.abstract = None

    def empty(self):
        return self.id is None and self.title is None and not self.authors


def parse_corpus(lines: Iterable[str]) -> CorpusBundle:
    """Parse a citation dump into papers and an author registry.

    ``lines`` can be an open text file or any iterable of strings. Records
    missing an id, title or authors are skipped and counted in
    ``bundle.skipped``; recoverable problems are collected in
    ``bundle.warnings`` with their 1-based line number.
    """
    bundle = CorpusBundle()
    papers = bundle.papers
    warn = bundle.warnings
    block = None

    def flush(b):
        if b is None or b.empty():
            return
        missing = [n for n, v in (("index", b.id), ("title", b.title), ("authors", b.authors)) if not v]
        if missing:
            bundle.skipped += 1
            warn.append(ParseWarning(b.start, f"record skipped, missing {'/'.join(missing)}"))
            return
        if b.id in papers:
            warn.append(ParseWarning(b.start, f"duplicate record id {b.id!r}, keeping the later one"))
            del papers[b.id]
        # self-citations and repeated reference lines are dropped
        refs = list(dict.fromkeys(r for r in b.refs if r != b.id))
        papers[b.id] = PaperRecord(
            id=b.id,
            title=b.title,
            authors=b.authors,
            year=b.year,
            venue=b.venue,
            references=refs,
            abstract=b.abstract,
        )

    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            flush(block)
            block = None
            continue
        if block is None:
            block = _Block(lineno)
        if not line.startswith("#"):
            warn.append(ParseWarning(lineno, "line without a '#' tag ignored"))
            continue
        m = _TAG.match(line)
        if m is None:
            warn.append(ParseWarning(lineno, f"unknown tag in {line[:16]!r}"))
            continue
        slot = _SLOTS[m.group(1)]
        payload = m.group(2).strip()
        if slot is None:
            continue
        if slot == "title" and block.title is not None:
            # a new title without a separating blank line starts the next record
            flush(block)
            block = _Block(lineno)
        if slot == "ref":
            if payload:
                block.refs.append(payload)
        elif slot == "authors":
            block.authors = split_authors(payload)
        elif slot == "year":
            if payload:
                try:
                    block.year = int(payload)
                except ValueError:
                    warn.append(ParseWarning(lineno, f"bad year {payload!r}"))
        else:
            setattr(block, slot, payload or None)
    flush(block)

    counts = compute_citation_counts(papers)
    for pid, paper in papers.items():
        paper.in_citations = counts[pid]
    bundle.authors = build_author_registry(papers)
    for w in warn:
        log.debug("%s", w)
    return bundle


def parse_corpus_file(path, encoding="utf-8") -> CorpusBundle:
    with open(path, encoding=encoding, errors="replace") as fh:
        return parse_corpus(fh)


def compute_citation_counts(papers: Dict[str, PaperRecord]) -> Dict[str, int]:
    """Count in-links per paper; references to ids outside the corpus are ignored."""
    counts = dict.fromkeys(papers, 0)
    for paper in papers.values():
        for ref in paper.references:
            if ref in counts and ref != paper.id:
                counts[ref] += 1
    return counts


def build_author_registry(papers: Dict[str, PaperRecord]) -> Dict[str, AuthorRecord]:
    authors: Dict[str, AuthorRecord] = {}
    for paper in papers.values():
        for name in paper.authors:
            rec = authors.get(name)
            if rec is None:
                rec = authors[name] = AuthorRecord(name)
            rec.papers.append(paper.id)
            rec.paper_count += 1
            rec.total_citations += paper.in_citations
    return authors


def resolve_author(bundle: CorpusBundle, name: str) -> AuthorRecord:
    key = name.strip()
    try:
        return bundle.authors[key]
    except KeyError:
        raise AuthorNotFound(name) from None
