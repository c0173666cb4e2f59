"""Spelling correction for agglutinative languages.

Candidate roots come from a q-gram index; every valid word within a given
edit distance is then generated by a pruned search over the language's
morphotactics and ranked by typing-error statistics.
"""
__version__ = "0.1.0"

from .corrector import Candidate, CorrectionStats, generate_candidates, left_edge_solutions
from .distance import edit_distance, prefix_edit_distance, qgram_distance
from .estimator import SpellingCorrector
from .langdef import LanguageDefinition, load_language, validate
from .ranking import Suggestion, rank
from .rootindex import RootQuery, build_index, candidate_roots
from .surface import recognize, surface

__all__ = [
    "Candidate", "CorrectionStats", "LanguageDefinition", "RootQuery", "SpellingCorrector",
    "Suggestion", "build_index", "candidate_roots", "edit_distance", "generate_candidates",
    "left_edge_solutions", "load_language", "prefix_edit_distance", "qgram_distance", "rank",
    "recognize", "surface", "validate",
]
