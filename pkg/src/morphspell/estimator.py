"""scikit-learn style front end for the corrector."""
from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_search_params, check_word, check_words
from .corrector import CorrectionStats, generate_candidates
from .langdef import LanguageDefinition, load_language
from .ranking import Suggestion, rank
from .rootindex import RootQuery, build_index
from .surface import recognize


class SpellingCorrector(BaseEstimator):
    """Morphology-aware spelling corrector.

    ``fit`` takes a language pack (a :class:`LanguageDefinition`, a path, or
    a bundled pack name) and builds the q-gram root index. ``predict`` maps
    each word to its best correction; ``transform`` to the full ranked list.

    Parameters
    ----------
    threshold : int
        Maximum edit distance of a suggestion (0..3).
    q : int
        q-gram length of the root index.
    k : int
        Number of leading q-grams of the input consulted.
    t_q : int
        Number of those q-grams a root may lack.
    prune : bool
        Use cut-off pruning; ``False`` searches exhaustively up to the
        length bound (slow, for testing).
    prefilter : bool
        Use the q-gram index; ``False`` tests every root.
    """

    def __init__(self, threshold: int = 1, q: int = 2, k: int = 3, t_q: int = 2,
                 prune: bool = True, prefilter: bool = True):
        self.threshold = threshold
        self.q = q
        self.k = k
        self.t_q = t_q
        self.prune = prune
        self.prefilter = prefilter

    def fit(self, X: Union[LanguageDefinition, str, Path], y=None):
        check_search_params(self.threshold, self.q, self.k, self.t_q)
        self.language_ = X if isinstance(X, LanguageDefinition) else load_language(X)
        self.index_ = build_index(self.language_.roots, self.q)
        self.n_roots_ = len(self.language_.roots)
        return self

    def _query(self) -> RootQuery:
        t, _, k, t_q = check_search_params(self.threshold, self.q, self.k, self.t_q)
        return RootQuery(k=k, t_q=t_q, t=t)

    def suggest(self, word: str, stats: Optional[CorrectionStats] = None) -> list[Suggestion]:
        """Ranked suggestions for one word."""
        check_is_fitted(self, "index_")
        word = check_word(word)
        query = self._query()
        candidates = generate_candidates(
            word, query.t, self.language_, self.index_ if self.prefilter else None,
            query, stats, prune=self.prune)
        return rank(candidates, word, self.language_)

    def check(self, word: str) -> bool:
        check_is_fitted(self, "language_")
        return bool(word) and recognize(word, self.language_)

    def transform(self, X) -> list[list[Suggestion]]:
        return [self.suggest(w) for w in check_words(X)]

    def predict(self, X) -> np.ndarray:
        """Top suggestion per word, or ``None`` where nothing is in range."""
        out = [s[0].surface if s else None for s in self.transform(X)]
        return np.asarray(out, dtype=object)

    def score(self, X, y) -> float:
        """Fraction of words whose top suggestion equals the intended word."""
        pred = self.predict(X)
        y = np.asarray(y, dtype=object)
        if len(y) != len(pred):
            raise ValueError(f"X and y lengths differ: {len(pred)} != {len(y)}")
        return float(np.mean(pred == y)) if len(y) else 0.0
