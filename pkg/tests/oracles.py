"""Independent reference computations used only by the tests."""

from __future__ import annotations

import random

from geobraid.conway import Ordering


def conway_by_subsets(letters, n, ordering: Ordering) -> list[int]:
    """State sum over all 2^c subsets, each smoothed diagram traced string by string."""
    c = len(letters)
    alpha, beta = ordering.sequence()
    order_of = {p: k for k, p in enumerate(alpha)}
    coeffs = [0] * (c + 1)
    for mask in range(1 << c):
        # follow every string from its input down to its output
        end = {}
        visits = {}  # crossing index -> (string via left entry, string via right entry)
        for start in range(n):
            col = start
            for j, x in enumerate(letters):
                i = abs(x) - 1
                if col not in (i, i + 1):
                    continue
                if mask >> j & 1:
                    side = 0 if col == i else 1
                    visits.setdefault(j, [None, None])[side] = start
                else:
                    col = i + 1 if col == i else i
            end[start] = col
        if any(end[alpha[k]] != beta[k] for k in range(n)):
            continue
        ok = True
        sign = 1
        for j in range(c):
            if mask >> j & 1:
                left, right = visits[j]
                over_entry = right if letters[j] > 0 else left
                first = left if order_of[left] < order_of[right] else right
                if first != over_entry:
                    ok = False
                    break
                sign *= 1 if letters[j] > 0 else -1
        if ok:
            coeffs[bin(mask).count("1")] += sign
    return coeffs


def random_word(rng: random.Random, n: int, size: int) -> tuple[int, ...]:
    return tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(size))


def random_rewrite(rng: random.Random, word: tuple[int, ...], n: int) -> tuple[int, ...] | None:
    """Apply one braid relation or far commutation somewhere, if one applies."""
    moves = []
    for i in range(len(word) - 1):
        if abs(abs(word[i]) - abs(word[i + 1])) >= 2:
            moves.append(("swap", i))
    for i in range(len(word) - 2):
        a, b, c = word[i:i + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            moves.append(("braid", i))
    if not moves:
        return None
    kind, i = rng.choice(moves)
    if kind == "swap":
        return word[:i] + (word[i + 1], word[i]) + word[i + 2:]
    a, b = word[i], word[i + 1]
    return word[:i] + (b, a, b) + word[i + 3:]


def rewritable_word(rng: random.Random, n: int, size: int) -> tuple[int, ...]:
    """A random word with at least one relation site planted in it."""
    if size < 3 and not (size == 2 and n >= 4):
        raise ValueError(f"no relation fits in {size} letters of B_{n}")
    while True:
        w = random_word(rng, n, size)
        if random_rewrite(rng, w, n) is not None:
            return w
        if size >= 3 and n >= 3:
            i = rng.randint(1, n - 2)
            e = rng.choice((1, -1))
            pos = rng.randint(0, size - 3)
            trip = (e * i, e * (i + 1), e * i) if rng.random() < 0.5 else (e * (i + 1), e * i, e * (i + 1))
            return w[:pos] + trip + w[pos + 3:]
