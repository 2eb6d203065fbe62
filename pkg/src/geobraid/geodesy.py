"""Exact word length in B_n by breadth-first search of the Cayley graph.

The ball of radius L is built layer by layer over canonical-form keys.  Every
length query is answered by table lookup, so all geodesic tests here are exact
inside the radius and refuse to guess outside it.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from . import garside
from .garside import CanonicalForm, Key, identity_key, key_of, mul_letter
from .words import BraidWord, WordError, free_reduce, render_word

__all__ = [
    "OutOfBall",
    "BallBudgetExceeded",
    "BallTable",
    "RSet",
    "alphabet",
    "build_ball",
    "length",
    "is_geodesic",
    "is_geodesic_extended",
    "r_set",
    "is_dead_end",
    "geodesic_representatives",
    "min_conj_length_bounded",
    "b3_geodesic",
    "save_ball",
    "load_ball",
    "cached_ball",
    "DEFAULT_RADIUS",
]

DEFAULT_RADIUS = {2: 12, 3: 12, 4: 7, 5: 5}
MAGIC = b"BRBALL"
CACHE_VERSION = 1


class OutOfBall(LookupError):
    """The queried braid (or something it depends on) lies outside the ball."""


class BallBudgetExceeded(MemoryError):
    def __init__(self, layer: int, size: int):
        super().__init__(f"ball budget exceeded while building layer {layer} ({size} elements)")
        self.layer = layer
        self.size = size


def alphabet(n: int) -> tuple[int, ...]:
    return tuple(range(1, n)) + tuple(-i for i in range(1, n))


@dataclass
class BallTable:
    strands: int
    radius: int
    lengths: dict = field(repr=False)
    layers: list = field(repr=False)
    _geo_counts: dict | None = field(default=None, repr=False)
    _inverses: dict | None = field(default=None, repr=False)

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def __contains__(self, key) -> bool:
        return key in self.lengths

    def key_length(self, key: Key) -> int:
        try:
            return self.lengths[key]
        except KeyError:
            raise OutOfBall(f"element lies outside the radius-{self.radius} ball") from None

    def word_length(self, w: BraidWord) -> int:
        self._check(w)
        return self.key_length(key_of(w))

    def _check(self, w: BraidWord) -> None:
        if w.strands != self.strands:
            raise WordError(f"ball is for B_{self.strands}, word has {w.strands} strands")

    def geodesic_counts(self) -> dict:
        """Number of geodesic words ending at each element (dynamic programming over layers)."""
        if self._geo_counts is None:
            n = self.strands
            counts = {identity_key(): 1}
            letters = alphabet(n)
            for r in range(1, len(self.layers)):
                for key in self.layers[r]:
                    total = 0
                    for s in letters:
                        prev = mul_letter(n, key, -s)
                        if self.lengths.get(prev) == r - 1:
                            total += counts[prev]
                    counts[key] = total
            self._geo_counts = counts
        return self._geo_counts

    def inverse_keys(self, r: int) -> list:
        """Keys of h^-1 for every h in layer r (cached)."""
        if self._inverses is None:
            self._inverses = {}
        if r not in self._inverses:
            n = self.strands
            self._inverses[r] = [
                key_of(CanonicalForm.from_key(n, h).to_word().inverse()) for h in self.layers[r]
            ]
        return self._inverses[r]

    def truncated(self, radius: int) -> BallTable:
        if radius > self.radius:
            raise OutOfBall(f"cannot extend a radius-{self.radius} ball to {radius}")
        layers = self.layers[: radius + 1]
        lengths = {k: r for r, layer in enumerate(layers) for k in layer}
        return BallTable(self.strands, radius, lengths, layers)


@dataclass(frozen=True)
class RSet:
    strands: int
    letters: frozenset

    def __contains__(self, s: int) -> bool:
        return s in self.letters

    def __len__(self):
        return len(self.letters)

    def sorted(self) -> list[int]:
        return sorted(self.letters, key=lambda x: (x < 0, abs(x)))


def build_ball(n: int, radius: int, max_elements: int | None = 5_000_000) -> BallTable:
    if n < 2 or radius < 0:
        raise ValueError("need n >= 2 and radius >= 0")
    garside._check_strands(n)
    ident = identity_key()
    lengths = {ident: 0}
    layers = [[ident]]
    letters = alphabet(n)
    for r in range(radius):
        nxt = []
        for key in layers[r]:
            for s in letters:
                k2 = mul_letter(n, key, s)
                if k2 not in lengths:
                    lengths[k2] = r + 1
                    nxt.append(k2)
        nxt.sort()
        layers.append(nxt)
        if max_elements is not None and len(lengths) > max_elements:
            raise BallBudgetExceeded(r + 1, len(lengths))
    return BallTable(n, radius, lengths, layers)


def length(w: BraidWord, t: BallTable) -> int:
    return t.word_length(w)


def is_geodesic(w: BraidWord, t: BallTable) -> bool:
    return len(w) == t.word_length(w)


def is_geodesic_extended(w: BraidWord, t: BallTable) -> bool:
    """Exact geodesic test for words up to length 2L + 1 (meet in the middle).

    w is not geodesic iff [w] = h g with l(h) + l(g) <= |w| - 2, and such a
    split can always take g from the ball and h from its first few layers.
    """
    t._check(w)
    target = len(w) - 2
    if target < 0:
        return True
    if target <= t.radius:
        return t.lengths.get(key_of(w), target + 2) > target
    head = target - t.radius
    if head > t.radius:
        raise OutOfBall(f"word of length {len(w)} needs a ball of radius >= {(len(w) - 1) // 2}")
    n = t.strands
    for r in range(head + 1):
        for inv in t.inverse_keys(r):
            ell = t.lengths.get(garside.mul_word(n, inv, w.letters))
            if ell is not None and r + ell <= target:
                return False
    return True


def _rset_key(t: BallTable, key: Key) -> frozenset:
    n = t.strands
    ell = t.key_length(key)
    return frozenset(
        s for s in alphabet(n) if t.lengths.get(mul_letter(n, key, -s)) == ell - 1
    )


def r_set(b: BraidWord, t: BallTable) -> RSet:
    """Letters s such that some geodesic for b ends in s."""
    t._check(b)
    return RSet(t.strands, _rset_key(t, key_of(b)))


def is_dead_end(b: BraidWord, t: BallTable) -> bool:
    t._check(b)
    key = key_of(b)
    ell = t.key_length(key)
    n = t.strands
    # a neighbour missing from the ball has length ell + 1
    return all(t.lengths.get(mul_letter(n, key, s), ell + 1) <= ell for s in alphabet(n))


def geodesic_representatives(key: Key, t: BallTable, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """All geodesic words for the element ``key``, as letter tuples."""
    n = t.strands
    letters = alphabet(n)

    def walk(k, ell, suffix):
        if ell == 0:
            yield tuple(reversed(suffix))
            return
        for s in letters:
            prev = mul_letter(n, k, -s)
            if t.lengths.get(prev) == ell - 1:
                suffix.append(s)
                yield from walk(prev, ell - 1, suffix)
                suffix.pop()

    count = 0
    for rep in walk(key, t.key_length(key), []):
        yield rep
        count += 1
        if limit is not None and count >= limit:
            return


def _is_central(n: int, letters: tuple[int, ...], key: Key) -> bool:
    return all(
        garside.mul_word(n, identity_key(), (-s,) + letters + (s,)) == key for s in range(1, n)
    )


def min_conj_length_bounded(b: BraidWord, t: BallTable, conj_bound: int) -> tuple[int, bool]:
    """Least ball length over c^-1 b c with l(c) <= conj_bound.

    Exact only when one more conjugation layer does not improve the value and
    the value is 0 or 1, or when b is central.
    """
    t._check(b)
    n = t.strands
    base = key_of(b)
    best = t.key_length(base)
    if best == 0:
        return 0, True
    if _is_central(n, b.letters, base):
        return best, True
    seen = {identity_key()}
    frontier = [((), identity_key())]
    best_at = [best]
    for _ in range(conj_bound + 1):
        nxt = []
        for word, ck in frontier:
            for s in alphabet(n):
                k2 = mul_letter(n, ck, s)
                if k2 in seen:
                    continue
                seen.add(k2)
                w2 = word + (s,)
                nxt.append((w2, k2))
                conj = garside.mul_word(n, identity_key(), tuple(-x for x in reversed(w2)) + b.letters + w2)
                ell = t.lengths.get(conj)
                if ell is not None and ell < best:
                    best = ell
        frontier = nxt
        best_at.append(best)
    value = best_at[conj_bound]
    exact = best_at[conj_bound + 1] == value and value <= 1
    return value, exact


_PAIR_A = ("ab", "ba")
_PAIR_B = ("AB", "BA")
_TRIPLE_RULES = (
    ("aba", "A"), ("aba", "B"), ("ABA", "a"), ("ABA", "b"),
    ("bab", "A"), ("bab", "B"), ("BAB", "a"), ("BAB", "b"),
)


def b3_geodesic(w: BraidWord) -> bool:
    """Closed-form geodesic test in B_3 (forbidden factor combinations)."""
    if w.strands != 3:
        raise WordError("b3_geodesic is defined on 3-strand words only")
    if len(free_reduce(w)) != len(w):
        return False
    s = render_word(w)
    if any(f in s for f in _PAIR_A) and any(f in s for f in _PAIR_B):
        return False
    return not any(tri in s and single in s for tri, single in _TRIPLE_RULES)


def save_ball(t: BallTable, path: str | os.PathLike) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<BBI", CACHE_VERSION, t.strands, t.radius))
        for layer in t.layers:
            fh.write(struct.pack("<I", len(layer)))
            for key in layer:
                rec = garside.serialize(CanonicalForm.from_key(t.strands, key))
                fh.write(struct.pack("<H", len(rec)))
                fh.write(rec)


def load_ball(path: str | os.PathLike, radius: int | None = None) -> BallTable:
    buf = Path(path).read_bytes()
    if buf[: len(MAGIC)] != MAGIC:
        raise ValueError(f"{path} is not a ball cache file")
    pos = len(MAGIC)
    version, n, stored = struct.unpack_from("<BBI", buf, pos)
    if version != CACHE_VERSION:
        raise ValueError(f"unsupported ball cache version {version}")
    pos += struct.calcsize("<BBI")
    radius = stored if radius is None else radius
    if radius > stored:
        raise OutOfBall(f"cache holds radius {stored}, asked for {radius}")
    layers, lengths = [], {}
    for r in range(radius + 1):
        (count,) = struct.unpack_from("<I", buf, pos)
        pos += 4
        layer = []
        for _ in range(count):
            (size,) = struct.unpack_from("<H", buf, pos)
            pos += 2
            cf, _ = garside.deserialize(buf, pos)
            pos += size
            layer.append(cf.key)
            lengths[cf.key] = r
        layers.append(layer)
    return BallTable(n, radius, lengths, layers)


def cached_ball(n: int, radius: int, cache_dir: str | os.PathLike | None = None) -> BallTable:
    """Build a ball, reusing (and filling) a cache directory when given.

    A cached ball of larger radius serves smaller queries.
    """
    cache_dir = cache_dir or os.environ.get("BRAID_BALL_CACHE")
    if not cache_dir:
        return build_ball(n, radius)
    root = Path(cache_dir)
    root.mkdir(parents=True, exist_ok=True)
    best = None
    for f in root.glob(f"ball_n{n}_L*.bin"):
        stored = int(f.stem.split("_L")[1])
        if stored >= radius and (best is None or stored < best[0]):
            best = (stored, f)
    if best is not None:
        return load_ball(best[1], radius)
    t = build_ball(n, radius)
    save_ball(t, root / f"ball_n{n}_L{radius}.bin")
    return t
