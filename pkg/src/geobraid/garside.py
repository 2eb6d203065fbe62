"""Left-greedy Garside normal form for B_n.

A braid is stored as ``Delta^p A_1 ... A_k`` where each ``A_j`` is a proper,
nontrivial simple element (a positive permutation braid) and consecutive pairs
are left-weighted.  Simple elements are permutations in 0-based image form:
``a[p]`` is the bottom position of the strand that starts at position ``p``.

The hot loop works on plain ``(p, factors)`` tuples ("keys"); ``CanonicalForm``
wraps a key with its strand count for the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import BraidWord, Permutation, WordError

__all__ = [
    "MAX_STRANDS",
    "CanonicalForm",
    "canonical_form",
    "equal",
    "delta",
    "is_positive_braid",
    "right_divisible",
    "identity_key",
    "mul_letter",
    "key_of",
    "serialize",
    "deserialize",
]

MAX_STRANDS = 16
FORMAT_VERSION = 1

Key = tuple  # (delta_power, (factor, ...)) with factors as tuples of ints


@lru_cache(maxsize=None)
def _delta_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _atom(n: int, i: int) -> tuple[int, ...]:
    """sigma_{i+1} as a simple element (0-based column i)."""
    a = list(range(n))
    a[i], a[i + 1] = i + 1, i
    return tuple(a)


@lru_cache(maxsize=None)
def _atom_complement(n: int, i: int) -> tuple[int, ...]:
    """The simple X with X * sigma_{i+1} = Delta."""
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(n - 1 - p, n - 1 - p) for p in range(n))


def _flip(a: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Delta on a simple element."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - p] for p in range(n))


def _inverse(a) -> list[int]:
    inv = [0] * len(a)
    for p, q in enumerate(a):
        inv[q] = p
    return inv


def _slide(a: tuple[int, ...], b: tuple[int, ...]):
    """Left-weight the pair (a, b) by moving atoms from the front of b onto a."""
    n = len(a)
    ainv = _inverse(a)
    bl = list(b)
    moved = False
    i = 0
    while i < n - 1:
        # sigma_i starts b, and a * sigma_i is still simple
        if bl[i] > bl[i + 1] and ainv[i] < ainv[i + 1]:
            ainv[i], ainv[i + 1] = ainv[i + 1], ainv[i]
            bl[i], bl[i + 1] = bl[i + 1], bl[i]
            moved = True
            i = i - 1 if i else 0
        else:
            i += 1
    if not moved:
        return a, b
    return tuple(_inverse(ainv)), tuple(bl)


def _append_simple(n: int, p: int, factors: list, x: tuple[int, ...]):
    identity = _identity_perm(n)
    if x == identity:
        return p, factors
    factors.append(x)
    j = len(factors) - 2
    while j >= 0:
        a, b = _slide(factors[j], factors[j + 1])
        if a is factors[j]:
            break
        factors[j], factors[j + 1] = a, b
        j -= 1
    d = _delta_perm(n)
    lead = 0
    while lead < len(factors) and factors[lead] == d:
        lead += 1
    if lead:
        del factors[:lead]
        p += lead
    while factors and factors[-1] == identity:
        factors.pop()
    return p, factors


def identity_key() -> Key:
    return (0, ())


def mul_letter(n: int, key: Key, letter: int) -> Key:
    """Normal form of ``key * sigma_letter`` (negative letter = inverse)."""
    p, factors = key
    i = abs(letter) - 1
    if letter > 0:
        fs = list(factors)
        p, fs = _append_simple(n, p, fs, _atom(n, i))
    else:
        # Delta^p A_1..A_k Delta^-1 X = Delta^(p-1) flip(A_1)..flip(A_k) X
        fs = [_flip(a) for a in factors]
        p, fs = _append_simple(n, p - 1, fs, _atom_complement(n, i))
    return (p, tuple(fs))


def mul_word(n: int, key: Key, letters) -> Key:
    for x in letters:
        key = mul_letter(n, key, x)
    return key


def key_of(w: BraidWord) -> Key:
    _check_strands(w.strands)
    return mul_word(w.strands, identity_key(), w.letters)


def _check_strands(n: int) -> None:
    if n > MAX_STRANDS:
        raise WordError(f"normal forms are limited to {MAX_STRANDS} strands, got {n}")


def _simple_word(a: tuple[int, ...]) -> list[int]:
    """A positive word for a simple element (peel atoms from the left)."""
    bl = list(a)
    out = []
    i = 0
    while i < len(bl) - 1:
        if bl[i] > bl[i + 1]:
            out.append(i + 1)
            bl[i], bl[i + 1] = bl[i + 1], bl[i]
            i = i - 1 if i else 0
        else:
            i += 1
    return out


@dataclass(frozen=True)
class CanonicalForm:
    strands: int
    delta_power: int
    factors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_key(cls, n: int, key: Key) -> CanonicalForm:
        return cls(n, key[0], key[1])

    @property
    def key(self) -> Key:
        return (self.delta_power, self.factors)

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def supremum(self) -> int:
        return self.delta_power + len(self.factors)

    def is_positive(self) -> bool:
        return self.delta_power >= 0

    def is_left_weighted(self) -> bool:
        n = self.strands
        d, e = _delta_perm(n), _identity_perm(n)
        if any(f in (d, e) for f in self.factors):
            return False
        for a, b in zip(self.factors, self.factors[1:]):
            ainv = _inverse(a)
            for i in range(n - 1):
                if b[i] > b[i + 1] and ainv[i] < ainv[i + 1]:
                    return False
        return True

    def exponent_sum(self) -> int:
        n = self.strands
        inv = sum(
            1 for a in self.factors for p in range(n) for q in range(p + 1, n) if a[p] > a[q]
        )
        return self.delta_power * n * (n - 1) // 2 + inv

    def permutation(self) -> Permutation:
        n = self.strands
        perm = list(range(n))
        if self.delta_power % 2:
            perm = [n - 1 - q for q in perm]
        for a in self.factors:
            perm = [a[q] for q in perm]
        return Permutation(tuple(q + 1 for q in perm))

    def to_word(self) -> BraidWord:
        n = self.strands
        dw = delta(n).letters if n > 1 else ()
        if self.delta_power >= 0:
            letters = list(dw) * self.delta_power
        else:
            letters = [-x for x in reversed(dw)] * (-self.delta_power)
        for a in self.factors:
            letters.extend(_simple_word(a))
        return BraidWord(n, tuple(letters))


def canonical_form(w: BraidWord) -> CanonicalForm:
    return CanonicalForm.from_key(w.strands, key_of(w))


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise WordError(f"strand counts differ: {u.strands} vs {v.strands}")
    return key_of(u) == key_of(v)


def delta(n: int) -> BraidWord:
    """(s1 s2 .. s_{n-1})(s1 .. s_{n-2}) .. (s1 s2) s1."""
    if n < 2:
        raise WordError("Delta needs at least two strands")
    letters = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


def is_positive_braid(w: BraidWord) -> bool:
    return key_of(w)[0] >= 0


def right_divisible(x: BraidWord, y: BraidWord) -> bool:
    """x = z y for some positive z."""
    if not (is_positive_braid(x) and is_positive_braid(y)):
        raise WordError("right_divisible is defined on positive braids only")
    return key_of(x + y.inverse())[0] >= 0


def _varint(v: int) -> bytes:
    out = bytearray()
    while True:
        byte = v & 0x7F
        v >>= 7
        if v:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return bytes(out)


def _read_varint(buf: bytes, pos: int) -> tuple[int, int]:
    shift = value = 0
    while True:
        byte = buf[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        shift += 7
        if not byte & 0x80:
            return value, pos


def serialize(cf: CanonicalForm) -> bytes:
    """version byte, strands byte, zigzag varint delta power, varint count, n-byte factors."""
    zz = (cf.delta_power << 1) ^ (cf.delta_power >> 63)
    out = bytearray([FORMAT_VERSION, cf.strands])
    out += _varint(zz)
    out += _varint(len(cf.factors))
    for a in cf.factors:
        out += bytes(a)
    return bytes(out)


def deserialize(buf: bytes, pos: int = 0) -> tuple[CanonicalForm, int]:
    if buf[pos] != FORMAT_VERSION:
        raise ValueError(f"unsupported canonical form version {buf[pos]}")
    n = buf[pos + 1]
    zz, pos = _read_varint(buf, pos + 2)
    power = (zz >> 1) ^ -(zz & 1)
    count, pos = _read_varint(buf, pos)
    factors = []
    for _ in range(count):
        factors.append(tuple(buf[pos:pos + n]))
        pos += n
    return CanonicalForm(n, power, tuple(factors)), pos
