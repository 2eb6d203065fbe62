"""Braid words, shadows and the syntactic statistics of braid diagrams.

A letter is a nonzero signed integer: ``+i`` is the Artin generator sigma_i and
``-i`` its inverse.  Strands are identified by their starting (top) position,
numbered ``1..n``.  Crossing geometry convention used throughout the package:
both strands run downward, and at a positive crossing the strand entering from
the right passes over.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "WordError",
    "BraidWord",
    "WordStats",
    "SignPattern",
    "ClassFlags",
    "BraidShadow",
    "Permutation",
    "BlockProfile",
    "parse_word",
    "render_word",
    "stats",
    "classify",
    "sign_pattern",
    "is_alternating",
    "permutation",
    "free_reduce",
    "subdiagram",
    "block_profile",
    "shadow",
    "over_strand_enters_right",
]

ALPHA_LIMIT = 26
_ALPHA_RE = re.compile(r"[A-Za-z]*")
_NUM_TOKEN_RE = re.compile(r"-?[1-9][0-9]*")


class WordError(ValueError):
    """Raised for malformed words or out-of-range generator indices."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise WordError(f"a braid needs at least one strand, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise WordError(f"letter {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise WordError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __mul__(self, k: int) -> BraidWord:
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __str__(self):
        return render_word(self)

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[int]) -> BraidWord:
        return cls(strands, tuple(letters))


@dataclass(frozen=True)
class WordStats:
    p: int
    n: int
    exp: int
    length: int


@dataclass(frozen=True)
class SignPattern:
    """Per-column signs; 0 marks a column the word never uses."""

    entries: tuple[int, ...]

    def resolve(self, default: int = 1) -> tuple[int, ...]:
        return tuple(e if e else default for e in self.entries)

    def compatible(self, other: SignPattern | Sequence[int]) -> bool:
        theirs = other.entries if isinstance(other, SignPattern) else tuple(other)
        return all(a == 0 or b == 0 or a == b for a, b in zip(self.entries, theirs))

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class ClassFlags:
    positive: bool
    negative: bool
    homogeneous: SignPattern | None
    alternating: bool
    reduced: bool
    degenerate: bool


@dataclass(frozen=True)
class BraidShadow:
    strands: int
    crossings: tuple[int, ...]

    @property
    def connected(self) -> bool:
        return set(range(1, self.strands)) <= set(self.crossings)


@dataclass(frozen=True)
class Permutation:
    """``images[p - 1]`` is the bottom position of the strand starting at top position p."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # self first, then other (word order)
        return Permutation(tuple(other.images[q - 1] for q in self.images))

    def is_identity(self) -> bool:
        return all(q == p for p, q in enumerate(self.images, 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for p, q in enumerate(self.images, 1):
            inv[q - 1] = p
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class BlockProfile:
    blocks: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]


def over_strand_enters_right(letter: int) -> bool:
    return letter > 0


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse numeric (``"1 -2 3"``) or alpha (``"aBc"``) syntax.

    Lowercase letters are positive generators, uppercase their inverses.
    """
    text = text.strip()
    if not text:
        return BraidWord(strands)
    if _ALPHA_RE.fullmatch(text):
        letters = [ord(c) - 96 if c.islower() else -(ord(c) - 64) for c in text]
    else:
        letters = []
        for tok in text.split():
            if not _NUM_TOKEN_RE.fullmatch(tok):
                raise WordError(f"malformed token {tok!r}")
            letters.append(int(tok))
    need = max(abs(x) for x in letters) + 1
    if strands < need:
        raise WordError(f"word needs at least {need} strands, got {strands}")
    return BraidWord(strands, tuple(letters))


def render_word(w: BraidWord) -> str:
    if w.strands - 1 <= ALPHA_LIMIT:
        return "".join(chr(96 + x) if x > 0 else chr(64 - x) for x in w.letters)
    return " ".join(str(x) for x in w.letters)


def stats(w: BraidWord) -> WordStats:
    p = sum(1 for x in w.letters if x > 0)
    n = len(w.letters) - p
    return WordStats(p=p, n=n, exp=p - n, length=p + n)


def sign_pattern(w: BraidWord) -> SignPattern | None:
    """The unique maximal sign pattern of a homogeneous word, else None."""
    entries = [0] * (w.strands - 1)
    for x in w.letters:
        i, e = abs(x) - 1, (1 if x > 0 else -1)
        if entries[i] == -e:
            return None
        entries[i] = e
    return SignPattern(tuple(entries))


def is_alternating(w: BraidWord) -> bool:
    """Every strand alternates over/under along its crossings, top to bottom."""
    at = list(range(w.strands))
    last = [0] * w.strands  # +1 over, -1 under, 0 not yet crossed
    for x in w.letters:
        i = abs(x) - 1
        left, right = at[i], at[i + 1]
        if over_strand_enters_right(x):
            over, under = right, left
        else:
            over, under = left, right
        if last[over] == 1 or last[under] == -1:
            return False
        last[over], last[under] = 1, -1
        at[i], at[i + 1] = right, left
    return True


def classify(w: BraidWord) -> ClassFlags:
    counts = Counter(abs(x) for x in w.letters)
    has_neg = any(x < 0 for x in w.letters)
    has_pos = any(x > 0 for x in w.letters)
    return ClassFlags(
        positive=not has_neg,
        negative=not has_pos,
        homogeneous=sign_pattern(w),
        alternating=is_alternating(w),
        reduced=all(c >= 2 for c in counts.values()),
        degenerate=len(counts) < w.strands - 1,
    )


def permutation(w: BraidWord) -> Permutation:
    at = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * w.strands
    for pos, strand in enumerate(at, 1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.strands, tuple(out))


def subdiagram(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Delete every strand not in ``keep`` (strands named by top position)."""
    kept = set(keep)
    if not kept:
        raise WordError("subdiagram needs at least one strand")
    if not kept <= set(range(1, w.strands + 1)):
        raise WordError(f"strand set {sorted(kept)} out of range 1..{w.strands}")
    at = list(range(1, w.strands + 1))
    letters = []
    for x in w.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        if a in kept and b in kept:
            rel = sum(1 for s in at[:i] if s in kept) + 1
            letters.append(rel if x > 0 else -rel)
        at[i], at[i + 1] = b, a
    return BraidWord(len(kept), tuple(letters))


def block_profile(w: BraidWord, pattern: SignPattern | Sequence[int], default: int = 1) -> BlockProfile:
    """Letter totals per maximal constant-sign run of the (resolved) pattern."""
    if isinstance(pattern, SignPattern):
        signs = pattern.resolve(default)
    else:
        signs = tuple(e if e else default for e in pattern)
    if len(signs) != w.strands - 1:
        raise WordError("pattern length must be strands - 1")
    blocks: list[list[int]] = []
    for k, e in enumerate(signs, 1):
        if blocks and signs[k - 2] == e:
            blocks[-1].append(k)
        else:
            blocks.append([k])
    block_of = {k: b for b, ks in enumerate(blocks) for k in ks}
    counts = [0] * len(blocks)
    for x in w.letters:
        i = abs(x)
        if (1 if x > 0 else -1) != signs[i - 1]:
            raise WordError(f"letter {x} incompatible with sign pattern {signs}")
        counts[block_of[i]] += 1
    return BlockProfile(tuple(tuple(b) for b in blocks), tuple(counts))


def shadow(w: BraidWord) -> BraidShadow:
    return BraidShadow(w.strands, tuple(abs(x) for x in w.letters))
