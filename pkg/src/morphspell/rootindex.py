"""Inverted q-gram index over root surface forms and candidate-root lookup.

Bit vectors are plain Python ints: bit ``r`` is set iff root ``r`` contains
the q-gram.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .distance import prefix_edit_distance
from .langdef import LanguageDefinition, Root


@dataclass(frozen=True)
class RootQuery:
    k: int = 3
    t_q: int = 2
    t: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0 <= self.t_q < self.k:
            raise ValueError(f"t_q must satisfy 0 <= t_q < k, got t_q={self.t_q}, k={self.k}")
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t}")


@dataclass(frozen=True)
class QGramIndex:
    q: int
    grams: dict
    root_count: int

    @property
    def all_ones(self) -> int:
        return (1 << self.root_count) - 1

    def vector(self, gram: str) -> int:
        return self.grams.get(gram, 0)


def build_index(roots: Iterable[Root], q: int = 2) -> QGramIndex:
    if q < 1:
        raise ValueError("q must be >= 1")
    roots = list(roots)
    grams: dict[str, int] = {}
    for r in roots:
        bit = 1 << r.id
        for i in range(len(r.surface) - q + 1):
            g = r.surface[i:i + q]
            grams[g] = grams.get(g, 0) | bit
    return QGramIndex(q, grams, len(roots))


def leading_qgrams(x: str, q: int, k: int) -> list[str]:
    return [x[i:i + q] for i in range(min(k, len(x) - q + 1))]


def prefilter_roots(x: str, idx: QGramIndex, query: RootQuery) -> int:
    """Union, over every (k - t_q)-subset of x's first k q-grams, of the
    intersection of the subset's bit vectors.

    Short inputs use only the q-grams they have; with none at all every
    root passes.
    """
    grams = leading_qgrams(x, idx.q, query.k)
    if not grams:
        return idx.all_ones
    size = max(1, len(grams) - query.t_q)
    result = 0
    for subset in combinations(grams, size):
        acc = idx.all_ones
        for g in subset:
            acc &= idx.vector(g)
            if not acc:
                break
        result |= acc
    return result


def bits_to_ids(bits: int) -> list[int]:
    ids = []
    i = 0
    while bits:
        if bits & 1:
            ids.append(i)
        bits >>= 1
        i += 1
    return ids


def root_threshold(root: Root, t: int, lang: LanguageDefinition) -> int:
    """Edit budget for matching a root against a prefix: one extra when the
    root ends in a character a later boundary may rewrite."""
    if root.surface and root.surface[-1] in lang.rules.mutable_final_chars:
        return t + 1
    return t


def candidate_roots(x: str, lang: LanguageDefinition, idx: Optional[QGramIndex],
                    query: RootQuery, stats=None) -> list[Root]:
    """Roots within edit distance ``query.t`` of some prefix of ``x``.

    ``idx=None`` skips the q-gram prefilter. Returned in root-id order.
    """
    if not x:
        raise ValueError("x must be nonempty")
    if idx is None:
        pool = lang.roots
    else:
        bits = prefilter_roots(x, idx, query)
        pool = [lang.roots[i] for i in bits_to_ids(bits)]
    out = []
    for r in pool:
        # cheap length bound before filling the matrix
        if len(r.surface) - len(x) > root_threshold(r, query.t, lang):
            continue
        if prefix_edit_distance(x, r.surface, stats).pred <= root_threshold(r, query.t, lang):
            out.append(r)
    return out
