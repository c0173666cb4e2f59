import random

import pytest
from hypothesis import given, settings, strategies as st

from morphspell.distance import (
    ErrorMatrix, cutoff_distance, edit_distance, edit_matrix, extend_matrix,
    prefix_edit_distance, qgram_distance,
)
from oracles import all_strings, bfs_distances, naive_ed

small = st.text(alphabet="abc", max_size=7)


@pytest.mark.parametrize("q, expected", [(2, 3), (3, 3)])
def test_qgram_distance_repeated_grams(q, expected):
    assert qgram_distance("ahmet", "mehmet", q) == expected


@given(st.text(max_size=10), st.integers(1, 4))
def test_qgram_distance_identity_and_symmetry(x, q):
    assert qgram_distance(x, x, q) == 0
    assert qgram_distance(x, "zz" + x, q) == qgram_distance("zz" + x, x, q)


def test_qgram_distance_short_strings_have_no_grams():
    assert qgram_distance("a", "b", 2) == 0
    assert qgram_distance("a", "ab", 2) == 1


@pytest.mark.parametrize("x, y, d", [
    ("kalayhla", "kalayla", 1),
    ("kalay", "kalas", 1),
    ("kala", "yatay", 3),
    ("kalay", "yatay", 2),
    ("kalayh", "yatay", 3),
    ("", "abc", 3),
    ("abc", "", 3),
    ("ab", "ba", 1),
    ("ca", "abc", 3),  # restricted: no edit between transposed characters
])
def test_edit_distance_values(x, y, d):
    assert edit_distance(x, y) == d


def test_edit_distance_matches_bfs_oracle_binary():
    strings = all_strings("ab", 5)
    for x in strings:
        dist = bfs_distances(x, "ab", 7)
        for y in strings:
            assert edit_distance(x, y) == dist[y], (x, y)


@given(small, small)
def test_edit_distance_matches_recurrence(x, y):
    assert edit_distance(x, y) == naive_ed(x, y)


@given(small, small, small)
def test_edit_distance_metric_properties(x, y, z):
    assert edit_distance(x, y) == edit_distance(y, x)
    assert edit_distance(x, z) <= edit_distance(x, y) + edit_distance(y, z)
    assert (edit_distance(x, y) == 0) == (x == y)


def test_extend_matrix_basics():
    h = ErrorMatrix("ab")
    assert h.n == 0 and h.column(0) == (0, 1, 2)
    h2 = extend_matrix(h, "a")
    assert h.n == 0 and h2.n == 1
    h2.extend("b")
    assert h2[2, 2] == 0


@given(small.filter(bool), small)
def test_incremental_matrix_matches_from_scratch(x, y):
    h = ErrorMatrix(x)
    for j, c in enumerate(y, 1):
        h.extend(c)
        assert h.n == j
    full = edit_matrix(x, y)
    for i in range(len(x) + 1):
        for j in range(len(y) + 1):
            assert h[i, j] == full[i][j] == naive_ed(x[:i], y[:j])


@given(small, small, small)
def test_matrix_invariants_and_rebase(x, y, z):
    h = ErrorMatrix(x).extend(y)
    for j in range(h.n + 1):
        assert h[0, j] == j
    for i in range(len(x) + 1):
        assert h[i, 0] == i
        for j in range(1, h.n + 1):
            assert abs(h[i, j] - h[i, j - 1]) <= 1
            if i:
                assert abs(h[i, j] - h[i - 1, j]) <= 1
    snap = h.snapshot()
    h.rebase(z)
    assert h.y == z and h.distance == edit_distance(x, z)
    h.rebase(y).restore(snap)
    assert h.distance == edit_distance(x, y)


def test_retract_bounds():
    h = ErrorMatrix("abc").extend("ab")
    h.retract(2)
    assert h.n == 0
    with pytest.raises(ValueError):
        h.retract()


def test_edit_op_counter():
    class C:
        edit_ops = 0
    c = C()
    ErrorMatrix("abcd", c).extend("xyz")
    assert c.edit_ops == 12


@pytest.mark.parametrize("x, r, pred, idx", [
    ("kalayhlamak", "kalayla", 1, {8}),
    ("kalayhlamak", "kalas", 1, {4, 5}),
    ("kalayhlamak", "kalayhlamak", 0, {11}),
])
def test_prefix_edit_distance(x, r, pred, idx):
    res = prefix_edit_distance(x, r)
    assert res.pred == pred and set(res.indexes) == idx


@given(small.filter(bool), small.filter(bool))
def test_prefix_distance_properties(x, r):
    res = prefix_edit_distance(x, r)
    values = [edit_distance(x[:i], r) for i in range(1, len(x) + 1)]
    assert res.pred == min(values) <= edit_distance(x, r)
    assert set(res.indexes) == {i for i, v in enumerate(values, 1) if v == res.pred}


def test_cutoff_distance_examples():
    x = "kalayhlamak"
    h = ErrorMatrix(x).extend(x)
    assert cutoff_distance(h, 1) == 0
    for t in range(4):
        g = ErrorMatrix(x).extend(x + "z" * (t + 1))
        assert cutoff_distance(g, t) == t + 1
    full = edit_matrix(x, "kalas")
    assert min(full[i][5] for i in range(4, 7)) == 1
    assert cutoff_distance(ErrorMatrix(x).extend("kalas"), 1) == 1


def test_cutoff_distance_requires_a_column():
    with pytest.raises(ValueError):
        cutoff_distance(ErrorMatrix("ab"), 1)


def _diagonal_path(H, m, n):
    d = m - n
    cells = [H[i][1] for i in range(1, d + 2)]
    cells += [H[d + j][j] for j in range(2, n + 1)]
    return cells


def test_diagonal_path_monotone():
    rng = random.Random(7)
    for _ in range(2000):
        m = rng.randint(1, 12)
        n = rng.randint(1, m)
        x = "".join(rng.choice("abc") for _ in range(m))
        y = "".join(rng.choice("abc") for _ in range(n))
        path = _diagonal_path(edit_matrix(x, y), m, n)
        assert all(a <= b for a, b in zip(path, path[1:])), (x, y)


@settings(max_examples=300)
@given(st.text(alphabet="ab", min_size=1, max_size=5), st.text(alphabet="ab", min_size=1, max_size=4),
       st.integers(0, 2))
def test_cutoff_is_sound_for_extensions(x, y, t):
    """No extension of y with length in [m-t, m+t] beats the cut-off bound."""
    m = len(x)
    bound = cutoff_distance(ErrorMatrix(x).extend(y), t)
    for suffix in all_strings("ab", max(0, m + t - len(y))):
        full = y + suffix
        if m - t <= len(full) <= m + t:
            assert edit_distance(x, full) >= min(bound, t + 1)
        if m - t <= len(full) <= m + t and edit_distance(x, full) <= t:
            assert bound <= t


@given(st.text(alphabet="abc", min_size=1, max_size=8), st.text(alphabet="abc", min_size=1, max_size=8),
       st.integers(0, 3))
def test_cutoff_at_most_distance_when_aligned(x, y, t):
    if len(x) - t <= len(y) <= len(x) + t:
        assert cutoff_distance(ErrorMatrix(x).extend(y), t) <= edit_distance(x, y)


def test_qgram_distance_counts_repeats():
    assert qgram_distance("aaa", "aa", 2) == 1
    assert qgram_distance("abab", "ab", 2) == 2
