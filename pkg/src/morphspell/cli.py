"""Command line interface: check, suggest, batch, interactive, validate-pack.

Exit status: 0 success, 1 misspelled (``check`` only), 2 usage or pack error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO

from . import __version__
from ._validation import MAX_THRESHOLD
from .corrector import CorrectionStats
from .estimator import SpellingCorrector
from .langdef import LanguagePackError, PackValidationError, load_language, parse_language, validate, _resolve_path
from .ranking import Suggestion

log = logging.getLogger("morphspell")

STAT_FIELDS = ("recognitions", "generations", "edit_ops", "solutions")


@dataclass
class CorpusRecord:
    misspelled: str
    intended: Optional[str] = None


@dataclass
class BatchRow:
    word: str
    intended: Optional[str]
    suggestions: list
    stats: CorrectionStats

    @property
    def found(self) -> Optional[bool]:
        if self.intended is None:
            return None
        return any(s.surface == self.intended for s in self.suggestions)

    @property
    def first(self) -> Optional[bool]:
        if self.intended is None:
            return None
        return bool(self.suggestions) and self.suggestions[0].surface == self.intended


@dataclass
class BatchReport:
    rows: list[BatchRow] = field(default_factory=list)
    skipped: int = 0

    def mean(self, name: str) -> float:
        if not self.rows:
            return 0.0
        return sum(getattr(r.stats, name) for r in self.rows) / len(self.rows)

    def _pct(self, attr: str) -> float:
        judged = [getattr(r, attr) for r in self.rows if r.intended is not None]
        return 100.0 * sum(judged) / len(judged) if judged else 0.0

    @property
    def accuracy_found(self) -> float:
        return self._pct("found")

    @property
    def accuracy_first(self) -> float:
        return self._pct("first")


def read_corpus(stream: TextIO) -> tuple[list[CorpusRecord], int]:
    """Parse ``misspelled<TAB>intended?`` lines; returns records and the
    number of malformed lines skipped."""
    records, skipped = [], 0
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = [p.strip() for p in line.split("\t")]
        if len(parts) > 2 or not parts[0] or any(c.isspace() for c in parts[0]):
            log.warning("corpus line %d is malformed, skipped", lineno)
            skipped += 1
            continue
        intended = parts[1] if len(parts) == 2 and parts[1] else None
        records.append(CorpusRecord(parts[0], intended))
    return records, skipped


def _run_one(args) -> BatchRow:
    corrector, rec = args
    stats = CorrectionStats()
    return BatchRow(rec.misspelled, rec.intended, corrector.suggest(rec.misspelled, stats), stats)


def run_batch(corrector: SpellingCorrector, records: Iterable[CorpusRecord],
              jobs: int = 1) -> BatchReport:
    work = [(corrector, r) for r in records]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        rows = [_run_one(w) for w in work]
    return BatchReport(rows)


def _flag(v: Optional[bool]) -> str:
    return "-" if v is None else str(int(v))


def format_batch(report: BatchReport) -> str:
    lines = ["\t".join(("word", "intended", *STAT_FIELDS, "found", "first", "top"))]
    for r in report.rows:
        lines.append("\t".join((
            r.word, r.intended or "-",
            *(str(getattr(r.stats, f)) for f in STAT_FIELDS),
            _flag(r.found), _flag(r.first),
            r.suggestions[0].surface if r.suggestions else "-")))
    lines.append("\t".join((
        "MEAN", str(len(report.rows)),
        *(f"{report.mean(f):.2f}" for f in STAT_FIELDS),
        f"{report.accuracy_found:.1f}%", f"{report.accuracy_first:.1f}%", "-")))
    lines.append(f"# skipped {report.skipped} malformed line(s)")
    return "\n".join(lines) + "\n"


def suggestion_fields(s: Suggestion) -> dict:
    return {
        "rank": s.rank,
        "surface": s.surface,
        "distance": s.distance,
        "score": round(s.score, 4),
        "lexical": " | ".join(a.lexical for a in s.candidate.analyses),
    }


def format_suggestions(suggestions: list[Suggestion], stats: Optional[CorrectionStats] = None,
                       as_json: bool = False) -> str:
    rows = [suggestion_fields(s) for s in suggestions]
    if as_json:
        doc = {"suggestions": rows}
        if stats is not None:
            doc["stats"] = stats.as_dict()
        return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    out = [f"{r['rank']}\t{r['surface']}\t{r['distance']}\t{r['score']:.4f}\t{r['lexical']}" for r in rows]
    if stats is not None:
        out.append("# stats " + " ".join(f"{k}={v}" for k, v in stats.as_dict().items()))
    return "".join(line + "\n" for line in out)


HELP = """commands:
  <word>      show suggestions for a word
  <number>    accept that suggestion (after a word)
  s / empty   skip the current word
  :help       this text
  :quit       end the session
"""


def interactive(corrector: SpellingCorrector, instream: TextIO, outstream: TextIO,
                errstream: TextIO) -> int:
    """Review loop: suggestions go to ``errstream``, accepted corrections to
    ``outstream``."""
    pending: list[Suggestion] = []
    for raw in instream:
        line = raw.strip()
        if line.startswith(":"):
            if line == ":quit":
                break
            if line != ":help":
                errstream.write(f"unknown directive {line!r}\n")
            errstream.write(HELP)
            continue
        if pending:
            if line.isdigit() and 1 <= int(line) <= len(pending):
                outstream.write(pending[int(line) - 1].surface + "\n")
                pending = []
                continue
            if line in ("", "s"):
                pending = []
                continue
            pending = []
        if not line:
            continue
        try:
            suggestions = corrector.suggest(line)
        except ValueError as exc:
            errstream.write(f"{exc}\n")
            continue
        if not suggestions:
            errstream.write("no suggestions\n")
            continue
        errstream.write(format_suggestions(suggestions))
        errstream.write("select a number, or s to skip\n")
        pending = suggestions
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lang", required=True,
                        help="language pack path or bundled name (turkish-mini, toy)")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("-t", "--threshold", type=int, default=1, help="edit distance threshold (0..3)")
    search.add_argument("--q", type=int, default=2, help="q-gram length")
    search.add_argument("--k", type=int, default=3, help="leading q-grams consulted")
    search.add_argument("--tq", type=int, default=2, help="q-grams a root may lack")
    search.add_argument("--stats", action="store_true", help="report operation counts")
    search.add_argument("--json", action="store_true", help="JSON output")
    search.add_argument("--no-prune", action="store_true", help="disable cut-off pruning")
    search.add_argument("--no-prefilter", action="store_true", help="bypass the q-gram prefilter")

    parser = argparse.ArgumentParser(prog="morphspell", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="is the word valid?")
    p.add_argument("word", nargs="?", default="")
    p = sub.add_parser("suggest", parents=[common, search], help="ranked corrections for a word")
    p.add_argument("word")
    p = sub.add_parser("batch", parents=[common, search], help="run a TSV corpus")
    p.add_argument("corpus", type=argparse.FileType("r", encoding="utf-8"))
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_parser("interactive", parents=[common, search], help="review loop on stdin")
    sub.add_parser("validate-pack", parents=[common], help="list pack diagnostics")
    return parser


def _corrector(args) -> SpellingCorrector:
    if not 0 <= args.threshold <= MAX_THRESHOLD:
        raise SystemExit(f"morphspell: threshold must be in [0, {MAX_THRESHOLD}]")
    return SpellingCorrector(threshold=args.threshold, q=args.q, k=args.k, t_q=args.tq,
                             prune=not args.no_prune, prefilter=not args.no_prefilter)


def main(argv: Optional[list[str]] = None, stdin: TextIO = None, stdout: TextIO = None,
         stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=stderr)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "validate-pack":
        try:
            with open(_resolve_path(args.lang), encoding="utf-8") as fh:
                diags = validate(parse_language(fh))
        except (OSError, LanguagePackError) as exc:
            stderr.write(f"morphspell: {exc}\n")
            return 2
        for d in diags:
            stdout.write(d + "\n")
        if not diags:
            stdout.write("ok\n")
        return 2 if diags else 0

    try:
        lang = load_language(args.lang)
    except (OSError, LanguagePackError) as exc:
        stderr.write(f"morphspell: cannot load language pack: {exc}\n")
        return 2

    if args.command == "check":
        ok = SpellingCorrector().fit(lang).check(args.word.strip())
        stdout.write("OK\n" if ok else "MISSPELLED\n")
        return 0 if ok else 1

    try:
        corrector = _corrector(args).fit(lang)
    except (TypeError, ValueError, SystemExit) as exc:
        stderr.write(f"morphspell: {exc}\n")
        return 2

    if args.command == "suggest":
        stats = CorrectionStats() if args.stats else None
        try:
            suggestions = corrector.suggest(args.word, stats)
        except ValueError as exc:
            stderr.write(f"morphspell: {exc}\n")
            return 2
        if not suggestions:
            stderr.write("no suggestions\n")
        stdout.write(format_suggestions(suggestions, stats, args.json))
        return 0

    if args.command == "batch":
        with args.corpus:
            records, skipped = read_corpus(args.corpus)
        report = run_batch(corrector, records, args.jobs)
        report.skipped = skipped
        stdout.write(format_batch(report))
        return 0

    if args.command == "interactive":
        return interactive(corrector, stdin, stdout, stderr)
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
