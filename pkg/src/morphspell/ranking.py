"""Ordering of candidate corrections by an error-frequency heuristic."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .corrector import Candidate
from .distance import edit_matrix
from .langdef import LanguageDefinition

# backtrace preference when several operations are optimal
_TIE_ORDER = ("replace", "transpose", "delete", "insert")


@dataclass(frozen=True)
class EditOp:
    kind: str           # replace | delete | insert | transpose
    position: int       # 0-based index into the misspelled string
    chars: tuple[str, ...]
    special: bool = False


@dataclass(frozen=True)
class EditScript:
    ops: tuple[EditOp, ...] = ()

    def __len__(self) -> int:
        return len(self.ops)

    def kinds(self) -> list[str]:
        return [op.kind for op in self.ops]


@dataclass(frozen=True)
class Suggestion:
    candidate: Candidate
    score: float
    rank: int

    @property
    def surface(self) -> str:
        return self.candidate.surface

    @property
    def distance(self) -> int:
        return self.candidate.distance


def extract_script(x: str, y: str, lang: Optional[LanguageDefinition] = None) -> EditScript:
    """An optimal edit script turning ``x`` into ``y``.

    Ties are broken replace > transpose > delete > insert. ``lang``, when
    given, marks replacements of special character pairs.
    """
    H = edit_matrix(x, y)
    ops: list[EditOp] = []
    i, j = len(x), len(y)
    while i or j:
        h = H[i][j]
        if i and j and x[i - 1] == y[j - 1] and h == H[i - 1][j - 1]:
            i, j = i - 1, j - 1
            continue
        for kind in _TIE_ORDER:
            if kind == "replace" and i and j and h == H[i - 1][j - 1] + 1:
                special = lang is not None and lang.is_special_pair(x[i - 1], y[j - 1])
                ops.append(EditOp("replace", i - 1, (x[i - 1], y[j - 1]), special))
                i, j = i - 1, j - 1
                break
            if (kind == "transpose" and i > 1 and j > 1 and x[i - 1] == y[j - 2]
                    and x[i - 2] == y[j - 1] and x[i - 1] != x[i - 2] and h == H[i - 2][j - 2] + 1):
                ops.append(EditOp("transpose", i - 2, (x[i - 2], x[i - 1])))
                i, j = i - 2, j - 2
                break
            if kind == "delete" and i and h == H[i - 1][j] + 1:
                ops.append(EditOp("delete", i - 1, (x[i - 1],)))
                i -= 1
                break
            if kind == "insert" and j and h == H[i][j - 1] + 1:
                ops.append(EditOp("insert", i, (y[j - 1],)))
                j -= 1
                break
        else:  # pragma: no cover - the table always admits a step
            raise AssertionError(f"inconsistent edit table at {(i, j)}")
    return EditScript(tuple(reversed(ops)))


def op_weights(lang: LanguageDefinition) -> dict[str, float]:
    """Cost per script operation, as negative log relative frequency of the
    typing error it undoes.

    A script *insert* repairs a character the typist dropped (a deletion
    error), a script *delete* repairs an extra character (an insertion
    error). Special-pair replacements are discounted by their share of all
    replacement errors.
    """
    s = lang.error_stats
    total = s.replacement + s.deletion + s.insertion + s.transposition
    if total <= 0:
        return dict.fromkeys(("special", "replace", "insert", "delete", "transpose"), 0.0)

    def w(freq: float) -> float:
        return -math.log(freq / total) if freq > 0 else math.inf

    replace = w(s.replacement)
    return {
        "special": replace * (1 - s.special_replacement_share / 100.0),
        "replace": replace,
        "insert": w(s.deletion),
        "delete": w(s.insertion),
        "transpose": w(s.transposition),
    }


def score(script: EditScript, lang: LanguageDefinition) -> float:
    weights = op_weights(lang)
    return sum(weights["special" if op.special else op.kind] for op in script.ops)


def rank(candidates: Iterable[Candidate], x: str, lang: LanguageDefinition) -> list[Suggestion]:
    """Sort by (distance, score, longer first, surface) and number from 1."""
    scored = [(c, round(score(extract_script(x, c.surface, lang), lang), 9)) for c in candidates]
    scored.sort(key=lambda cs: (cs[0].distance, cs[1], -len(cs[0].surface), cs[0].surface))
    return [Suggestion(c, s, i) for i, (c, s) in enumerate(scored, 1)]
