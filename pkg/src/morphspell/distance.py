"""String distances: q-gram distance, restricted edit distance with
transpositions, the incremental error matrix and the measures built on it."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional


def qgrams(s: str, q: int) -> set[str]:
    """Set of distinct q-grams of ``s`` (empty when ``len(s) < q``)."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return {s[i:i + q] for i in range(len(s) - q + 1)}


def qgram_distance(x: str, y: str, q: int) -> int:
    """Number of q-grams not shared by ``x`` and ``y``, counting repeats:
    a q-gram occurring twice in one string and once in the other counts once.

    >>> qgram_distance("ahmet", "mehmet", 2)  # ah, me, eh
    3
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    gx = Counter(x[i:i + q] for i in range(len(x) - q + 1))
    gy = Counter(y[i:i + q] for i in range(len(y) - q + 1))
    return sum(((gx - gy) + (gy - gx)).values())


def _next_column(x: str, y: str, j: int, prev: tuple, prevprev: Optional[tuple]) -> tuple:
    # column j (1-based) for Y[:j]; prev is column j-1, prevprev column j-2
    c = y[j - 1]
    before = y[j - 2] if j > 1 else None
    col = [j]
    up = j
    for i in range(1, len(x) + 1):
        xi = x[i - 1]
        if xi == c:
            up = prev[i - 1]
        else:
            v = prev[i - 1]
            if prev[i] < v:
                v = prev[i]
            if up < v:
                v = up
            v += 1
            if i > 1 and xi == before and x[i - 2] == c and prevprev[i - 2] + 1 < v:
                v = prevprev[i - 2] + 1
            up = v
        col.append(up)
    return tuple(col)


def edit_distance(x: str, y: str) -> int:
    """Minimum number of insertions, deletions, replacements and adjacent
    transpositions turning ``x`` into ``y`` (optimal string alignment).

    >>> edit_distance("kalay", "yatay")
    2
    """
    prevprev = None
    prev = tuple(range(len(x) + 1))
    for j in range(1, len(y) + 1):
        prev, prevprev = _next_column(x, y, j, prev, prevprev), prev
    return prev[len(x)]


def edit_matrix(x: str, y: str) -> list[list[int]]:
    """Full table ``H[i][j] = ed(x[:i], y[:j])``, rows indexed by ``x``."""
    cols = [tuple(range(len(x) + 1))]
    for j in range(1, len(y) + 1):
        cols.append(_next_column(x, y, j, cols[-1], cols[-2] if j > 1 else None))
    return [[cols[j][i] for j in range(len(y) + 1)] for i in range(len(x) + 1)]


class ErrorMatrix:
    """Edit-distance table between a fixed string ``x`` and a growing ``y``.

    Stored column by column so ``y`` can be extended one character at a
    time in O(len(x)) and rolled back for backtracking. Columns are
    immutable tuples, so :meth:`copy` is cheap and copies may share them.

    ``counter``, if given, is any object with an integer ``edit_ops``
    attribute; it is incremented by one per evaluated cell.
    """

    __slots__ = ("x", "y", "columns", "counter")

    def __init__(self, x: str, counter=None):
        self.x = x
        self.y = ""
        self.columns = [tuple(range(len(x) + 1))]
        self.counter = counter

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.y)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.columns[j][i]

    def column(self, j: int) -> tuple:
        return self.columns[j]

    @property
    def distance(self) -> int:
        """``ed(x, y)`` for the current ``y``."""
        return self.columns[-1][-1]

    def extend(self, chars: str) -> "ErrorMatrix":
        for c in chars:
            self.y += c
            j = len(self.y)
            self.columns.append(
                _next_column(self.x, self.y, j, self.columns[j - 1],
                             self.columns[j - 2] if j > 1 else None))
            if self.counter is not None:
                self.counter.edit_ops += len(self.x)
        return self

    def retract(self, count: int = 1) -> "ErrorMatrix":
        if count < 0 or count > self.n:
            raise ValueError(f"cannot retract {count} of {self.n} columns")
        if count:
            del self.columns[-count:]
            self.y = self.y[:-count]
        return self

    def snapshot(self) -> int:
        return self.n

    def restore(self, n: int) -> "ErrorMatrix":
        return self.retract(self.n - n)

    def copy(self) -> "ErrorMatrix":
        other = ErrorMatrix.__new__(ErrorMatrix)
        other.x = self.x
        other.y = self.y
        other.columns = list(self.columns)
        other.counter = self.counter
        return other

    def rebase(self, y: str) -> "ErrorMatrix":
        """Make the matrix describe ``y``, keeping columns of the common prefix."""
        keep = 0
        limit = min(len(y), self.n)
        while keep < limit and y[keep] == self.y[keep]:
            keep += 1
        self.restore(keep)
        return self.extend(y[keep:])


def extend_matrix(h: ErrorMatrix, c: str) -> ErrorMatrix:
    """Return a copy of ``h`` with ``y`` extended by ``c``; ``h`` is untouched."""
    return h.copy().extend(c)


@dataclass(frozen=True)
class AlignmentResult:
    pred: int
    indexes: frozenset


def prefix_edit_distance(x: str, r: str, counter=None) -> AlignmentResult:
    """Smallest edit distance between ``r`` and a nonempty prefix of ``x``,
    together with every prefix length attaining it."""
    if not x or not r:
        raise ValueError("prefix_edit_distance needs nonempty strings")
    col = ErrorMatrix(x, counter).extend(r).columns[-1]
    best = min(col[1:])
    return AlignmentResult(best, frozenset(i for i in range(1, len(x) + 1) if col[i] == best))


def cutoff_distance(h: ErrorMatrix, t: int) -> int:
    """Lower bound on the distance any extension of ``h.y`` can reach.

    Scans the band of rows ``n - t .. n + t`` (clamped to ``1..m``) of the
    last column; once ``n >= m + t`` the bound is simply ``n - m``.
    """
    m, n = h.m, h.n
    if n < 1:
        raise ValueError("cutoff distance needs at least one column")
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    col = h.columns[n]
    if n <= t:
        lo, hi = 1, min(n + t, m)
    elif n <= m:
        lo, hi = max(1, n - t), min(n + t, m)
    elif n < m + t:
        lo, hi = max(1, n - t), m
    else:
        return n - m
    if lo > hi:
        # empty band (only when m == 0); no prefix of x can align
        return n
    return min(col[lo:hi + 1])
