"""Geodesic braid words: normal forms, exact lengths, Conway state sums and certificates."""

from .words import BraidWord, WordError, parse_word, render_word
from .garside import CanonicalForm, canonical_form, delta, equal
from .geodesy import BallTable, OutOfBall, build_ball, is_geodesic, length

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "WordError",
    "parse_word",
    "render_word",
    "CanonicalForm",
    "canonical_form",
    "delta",
    "equal",
    "BallTable",
    "OutOfBall",
    "build_ball",
    "is_geodesic",
    "length",
]
