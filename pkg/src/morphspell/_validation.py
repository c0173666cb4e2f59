"""Input checks shared by the estimator and the command line."""
from __future__ import annotations

from numbers import Integral
import numpy as np

MAX_THRESHOLD = 3


def check_word(word) -> str:
    if not isinstance(word, str):
        raise TypeError(f"expected a str word, got {type(word).__name__}")
    word = word.strip()
    if not word:
        raise ValueError("word must be nonempty")
    if any(c.isspace() for c in word):
        raise ValueError(f"expected a single word, got {word!r}")
    return word


def check_words(X) -> list[str]:
    """Accept a single string, any iterable of strings, or a 1-d / single
    column array; return a list of stripped words."""
    if isinstance(X, str):
        return [check_word(X)]
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence of words, got shape {arr.shape}")
    return [check_word(w) for w in arr]


def check_int(name: str, value, low: int, high=None) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an int, got {value!r}")
    if value < low or (high is not None and value > high):
        bound = f">= {low}" if high is None else f"in [{low}, {high}]"
        raise ValueError(f"{name} must be {bound}, got {value}")
    return int(value)


def check_search_params(threshold, q, k, t_q) -> tuple[int, int, int, int]:
    threshold = check_int("threshold", threshold, 0, MAX_THRESHOLD)
    q = check_int("q", q, 1)
    k = check_int("k", k, 1)
    t_q = check_int("t_q", t_q, 0, k - 1)
    return threshold, q, k, t_q

