"""Command-line entry point.

Exit status: 0 success, 1 other failure, 2 author not found, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import snapshot
from .corpus import parse_corpus_file, resolve_author
from .errors import AuthorNotFound, InvalidRequest, TeamRecError
from .model import prepare
from .ranker import PAIRINGS, RecommendRequest, TeamRecommendation, recommend_team
from .roles import CriterionKind, Role, RoleCriterion, classify, metric_value, partition
from .text_index import SCORERS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_FOUND = 2
EXIT_USAGE = 64

log = logging.getLogger("teamrec")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _non_negative_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _add_criterion_flags(p):
    p.add_argument("--criterion", choices=[c.value for c in CriterionKind], default="paper",
                   help="metric used to assign roles (default: paper)")
    p.add_argument("--t1", type=_non_negative_int, default=20, help="lower role threshold (default: 20)")
    p.add_argument("--t2", type=_non_negative_int, default=40, help="upper role threshold (default: 40)")


def _criterion(args) -> RoleCriterion:
    try:
        return RoleCriterion(CriterionKind(args.criterion), args.t1, args.t2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teamrec", description="Recommend role-complete academic teams.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="parse a citation dump and write a snapshot")
    p.add_argument("--input", required=True, help="Arnetminer/DBLP citation dump")
    p.add_argument("--snapshot", required=True, help="output path (.json or .json.gz)")

    p = sub.add_parser("recommend", help="recommend team pairs for a researcher")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--name", required=True, help="seed researcher")
    p.add_argument("--role", choices=["prime", "assistant", "student"],
                   help="seed role; classified from the corpus when omitted")
    p.add_argument("--query", required=True, help="task query")
    p.add_argument("--interest", help="research interest")
    p.add_argument("-k", type=_positive_int, default=2, help="number of team pairs (default: 2)")
    p.add_argument("--scorer", choices=SCORERS, default="bm25")
    _add_criterion_flags(p)
    p.add_argument("--pairing", choices=PAIRINGS, default="aligned")
    p.add_argument("--no-interest-in-query", dest="interest_in_query", action="store_false",
                   help="do not append the research interest to the query")
    p.add_argument("--format", choices=["json", "table"], default="json")

    p = sub.add_parser("classify", help="print the role of one author")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--name", required=True)
    _add_criterion_flags(p)

    p = sub.add_parser("stats", help="summarize a snapshot")
    p.add_argument("--snapshot", required=True)
    _add_criterion_flags(p)
    return parser


def cmd_build(args, out) -> int:
    bundle = parse_corpus_file(args.input)
    if bundle.warnings:
        print(f"{len(bundle.warnings)} parse warning(s), {bundle.skipped} record(s) skipped", file=sys.stderr)
        for w in bundle.warnings[:10]:
            print(f"  {w}", file=sys.stderr)
        if len(bundle.warnings) > 10:
            print(f"  ... {len(bundle.warnings) - 10} more", file=sys.stderr)
    model = prepare(bundle)
    snapshot.save(model, args.snapshot)
    print(f"papers: {len(bundle.papers)}", file=out)
    print(f"authors: {len(bundle.authors)}", file=out)
    print(f"edges: {model.citation.edge_count}", file=out)
    return EXIT_OK


def format_table(rec: TeamRecommendation) -> str:
    lines = [f"seed: {rec.seed_name} ({rec.seed_role.label})", f"query: {rec.query}"]
    if rec.interest is not None:
        lines.append(f"interest: {rec.interest}")
    rows = [("rank", "role", "name", "i1", "i2", "f")]
    for i, pair in enumerate(rec.pairs, start=1):
        for m in pair:
            i2 = "-" if m.i2 is None else f"{m.i2:.4f}"
            rows.append((str(i), m.role.label, m.author, f"{m.i1:.4f}", i2, f"{m.f:.4f}"))
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if not rec.pairs:
        lines.append("(no team pairs)")
    if rec.fallback_used:
        lines.append("note: some members are unreachable from the seed (F = 0)")
    return "\n".join(lines)


def cmd_recommend(args, out) -> int:
    model = snapshot.load(args.snapshot)
    request = RecommendRequest(
        seed_name=args.name,
        query=args.query,
        seed_role=Role.parse(args.role) if args.role else None,
        interest=args.interest,
        top_k=args.k,
        scorer=args.scorer,
        criterion=_criterion(args),
        pairing=args.pairing,
        interest_in_query=args.interest_in_query,
    )
    try:
        rec = recommend_team(model, request)
    except InvalidRequest as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(rec.to_dict(), ensure_ascii=False), file=out)
    else:
        print(format_table(rec), file=out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    crit = _criterion(args)
    model = snapshot.load(args.snapshot)
    author = resolve_author(model.bundle, args.name)
    m = metric_value(author, model.citation, crit)
    role = classify(author, model.citation, crit)
    print(f"{author.name}\t{role.label}\t{crit.kind.value}={m}", file=out)
    return EXIT_OK


def cmd_stats(args, out) -> int:
    crit = _criterion(args)
    model = snapshot.load(args.snapshot)
    groups = partition(model.bundle, model.citation, crit)
    print(f"papers: {len(model.bundle.papers)}", file=out)
    print(f"authors: {len(model.bundle.authors)}", file=out)
    print(f"edges: {model.citation.edge_count}", file=out)
    print(f"criterion: {crit.kind.value} (t1={crit.t1}, t2={crit.t2})", file=out)
    for role in sorted(Role, reverse=True):
        print(f"{role.label}: {len(groups[role])}", file=out)
    return EXIT_OK


COMMANDS = {"build": cmd_build, "recommend": cmd_recommend, "classify": cmd_classify, "stats": cmd_stats}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except AuthorNotFound as exc:
        print(f"teamrec: author not found: {exc.name}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except UsageError as exc:
        print(f"teamrec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, TeamRecError) as exc:
        print(f"teamrec: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
