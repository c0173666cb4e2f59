"""Generation of every valid word within a bounded edit distance of a
misspelled input, by pruned depth-first search over the morphotactics."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .distance import ErrorMatrix, cutoff_distance, edit_distance, prefix_edit_distance
from .langdef import LanguageDefinition, Root, Transition
from .rootindex import QGramIndex, RootQuery, candidate_roots
from .surface import append_morpheme, surface


@dataclass
class CorrectionStats:
    recognitions: int = 0
    generations: int = 0
    edit_ops: int = 0
    solutions: int = 0

    def as_dict(self) -> dict:
        return {"recognitions": self.recognitions, "generations": self.generations,
                "edit_ops": self.edit_ops, "solutions": self.solutions}


@dataclass(frozen=True, order=True)
class Analysis:
    """One lexical derivation of a surface word."""
    lexical: str
    root: Root = field(compare=False)
    path: tuple[Transition, ...] = field(default=(), compare=False)
    root_id: int = 0


@dataclass(frozen=True)
class Candidate:
    surface: str
    distance: int
    analyses: tuple[Analysis, ...]

    @property
    def lexical(self) -> str:
        return self.analyses[0].lexical

    @property
    def root(self) -> Root:
        return self.analyses[0].root

    @property
    def path(self) -> tuple[Transition, ...]:
        return self.analyses[0].path


@dataclass
class SearchFrame:
    lexical: str
    state: str
    surface: str
    matrix: ErrorMatrix
    root: Root
    path: tuple[Transition, ...]
    threshold: int
    effective_t: int = 0


def adjust_threshold(frame: SearchFrame, lang: LanguageDefinition) -> SearchFrame:
    """Allow one more edit for pruning while the partial surface ends in a
    character a following morpheme may still rewrite."""
    bump = 1 if frame.surface and frame.surface[-1] in lang.rules.mutable_final_chars else 0
    frame.effective_t = frame.threshold + bump
    return frame


class _Results:
    def __init__(self):
        self.by_surface: dict[str, tuple[int, set]] = {}

    def add(self, surf: str, dist: int, analyses: Iterable[Analysis]):
        entry = self.by_surface.setdefault(surf, (dist, set()))
        entry[1].update(analyses)

    def merge(self, candidates: Iterable[Candidate]):
        for c in candidates:
            self.add(c.surface, c.distance, c.analyses)

    def candidates(self) -> list[Candidate]:
        return [Candidate(s, d, tuple(sorted(a))) for s, (d, a) in sorted(self.by_surface.items())]


def _search(x: str, t: int, roots: Iterable[Root], lang: LanguageDefinition,
            stats: Optional[CorrectionStats], prune: bool = True) -> _Results:
    results = _Results()
    fsa = lang.fsa
    boundary = lang.alphabet.boundary_char
    m = len(x)
    stack: list[SearchFrame] = []
    for r in roots:
        matrix = ErrorMatrix(x, stats).extend(r.surface)
        frame = SearchFrame(r.lexical, r.entry_state, r.surface, matrix, r, (), t)
        if fsa.is_final(r.entry_state) and matrix.distance <= t:
            results.add(r.surface, matrix.distance, [Analysis(r.lexical, r, (), r.id)])
        stack.append(frame)
    stack.reverse()

    while stack:
        frame = stack.pop()
        children = []
        for tr in fsa.outgoing(frame.state):
            y = append_morpheme(frame.surface, tr.morpheme, lang)
            if stats is not None:
                stats.generations += 1
            matrix = frame.matrix.copy().rebase(y)
            child = adjust_threshold(
                SearchFrame(frame.lexical + boundary + tr.morpheme, tr.target, y, matrix,
                            frame.root, frame.path + (tr,), t), lang)
            if prune:
                keep = cutoff_distance(matrix, child.effective_t) <= child.effective_t
            else:
                keep = len(y) <= m + t
            if keep:
                children.append(child)
            if fsa.is_final(tr.target) and matrix.distance <= t:
                results.add(y, matrix.distance,
                            [Analysis(child.lexical, child.root, child.path, child.root.id)])
        # reversed so transitions are explored in declaration order
        stack.extend(reversed(children))
    return results


def analyze(word: str, lang: LanguageDefinition) -> list[Analysis]:
    """All lexical analyses realizing exactly as ``word`` (empty if none)."""
    if not word:
        return []
    roots = candidate_roots(word, lang, None, RootQuery(k=1, t_q=0, t=0))
    entry = _search(word, 0, roots, lang, None).by_surface.get(word)
    return sorted(entry[1]) if entry else []


def left_edge_solutions(x: str, t: int, roots: Iterable[Root], lang: LanguageDefinition,
                        stats: Optional[CorrectionStats] = None) -> list[Candidate]:
    """Words made of a root whose best prefix alignment already uses the
    whole budget ``t`` followed verbatim by the rest of ``x``."""
    results = _Results()
    surface_chars = lang.alphabet.surface_chars
    for r in roots:
        align = prefix_edit_distance(x, r.surface, stats)
        if align.pred != t:
            continue
        for i in sorted(align.indexes):
            rest = x[i:]
            if any(c not in surface_chars for c in rest):
                continue
            y = surface(r.lexical + rest, lang)
            if stats is not None:
                stats.generations += 1
                stats.recognitions += 1
            analyses = analyze(y, lang)
            if not analyses:
                continue
            if stats is not None:
                stats.edit_ops += len(x) * len(y)
            d = edit_distance(x, y)
            if d <= t:
                results.add(y, d, analyses)
    return results.candidates()


def generate_candidates(x: str, t: int, lang: LanguageDefinition, idx: Optional[QGramIndex],
                        query: Optional[RootQuery] = None, stats: Optional[CorrectionStats] = None,
                        prune: bool = True) -> list[Candidate]:
    """Every valid word within edit distance ``t`` of ``x`` whose root survives
    root retrieval, sorted by surface form.

    ``idx=None`` disables the q-gram prefilter; ``prune=False`` replaces
    cut-off pruning with a plain length bound.
    """
    if not x:
        raise ValueError("x must be nonempty")
    if query is None:
        query = RootQuery(t=t)
    elif query.t != t:
        query = replace(query, t=t)
    roots = candidate_roots(x, lang, idx, query, stats)
    results = _Results()
    results.merge(left_edge_solutions(x, t, roots, lang, stats))
    found = _search(x, t, roots, lang, stats, prune=prune)
    for s, (d, analyses) in found.by_surface.items():
        results.add(s, d, analyses)
    out = results.candidates()
    if stats is not None:
        stats.solutions += len(out)
    return out
