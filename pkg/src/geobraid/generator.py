"""Mass production of certified geodesic words.

A word is assembled as ``v_1 u_1 w v_2 u_2 w ... v_k u_k w v_{k+1} u_{k+1}``:
each ``v_i`` is a freely chosen shadow, each ``u_i`` routes strands 1 and 2
back to positions 1 and 2, and ``w`` is a fixed pure word of length 4n-4.
Crossing signs are fixed by which strands meet, which makes every 3-strand
subdiagram minimal; the result ships with its 3-regular winding certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator, Sequence

from .words import BraidWord, WordError
from .winding import CertificateError, WindingCertificate, check_winding, regular_certificate

__all__ = [
    "ConstructionError",
    "GeneratorSpec",
    "Generated",
    "build_w",
    "construct_W",
    "lower_bound_count",
    "min_length",
    "enumerate_outputs",
]


class ConstructionError(RuntimeError):
    """The built word failed its own certificate; signals a construction bug."""


@dataclass(frozen=True)
class GeneratorSpec:
    strands: int
    k: int
    x: tuple[int, ...]
    shadow_choices: tuple[tuple[int, ...], ...] | None = None
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        if self.strands < 2 or self.k < 0:
            raise ValueError("need n >= 2 and k >= 0")
        if len(self.x) != self.k + 1 or any(v < 0 for v in self.x):
            raise ValueError("x must hold k + 1 nonnegative shadow sizes")
        if self.shadow_choices is not None:
            choices = tuple(tuple(c) for c in self.shadow_choices)
            object.__setattr__(self, "shadow_choices", choices)
            if tuple(len(c) for c in choices) != self.x:
                raise ValueError("shadow i must have x_i crossings")
            if any(not 1 <= c <= self.strands - 1 for cs in choices for c in cs):
                raise ValueError("shadow column out of range")

    def resolved_choices(self) -> tuple[tuple[int, ...], ...]:
        if self.shadow_choices is not None:
            return self.shadow_choices
        rng = random.Random(self.seed)
        n = self.strands
        return tuple(tuple(rng.randint(1, n - 1) for _ in range(xi)) for xi in self.x)


@dataclass(frozen=True)
class Generated:
    word: BraidWord
    certificate: WindingCertificate
    routing_lengths: tuple[int, ...]


def build_w(n: int) -> BraidWord:
    if n < 2:
        raise WordError("w needs at least two strands")
    up = list(range(1, n))
    down = list(range(n - 1, 1, -1))
    letters = up + down + [-1, -1] + list(range(2, n)) + list(range(n - 1, 0, -1))
    return BraidWord(n, tuple(letters))


def _sign(a: int, b: int) -> int:
    """Crossing sign between strands a and b (strands named by start position)."""
    if {a, b} == {1, 2}:
        return 1
    if 2 in (a, b):
        return -1
    return 1


def _assemble(n: int, choices: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    at = list(range(1, n + 1))
    letters: list[int] = []
    routing = []

    def cross(col: int, sign: int | None = None) -> None:
        i = col - 1
        s = _sign(at[i], at[i + 1]) if sign is None else sign
        letters.append(s * col)
        at[i], at[i + 1] = at[i + 1], at[i]

    w = build_w(n).letters
    for block, cols in enumerate(choices):
        for c in cols:
            cross(c)
        start = len(letters)
        for strand, home in ((1, 0), (2, 1)):
            pos = at.index(strand)
            while pos > home:
                cross(pos)
                pos -= 1
        routing.append(len(letters) - start)
        if block < len(choices) - 1:
            for x in w:
                cross(abs(x), 1 if x > 0 else -1)
    return letters, routing


def construct_W(spec: GeneratorSpec, verify: bool = True) -> Generated:
    n = spec.strands
    letters, routing = _assemble(n, spec.resolved_choices())
    word = BraidWord(n, tuple(letters))
    if n >= 3:
        cert = regular_certificate(word, 3)
    else:
        cert = WindingCertificate(word, ((1, 2),), 1, ("homogeneous",))
    if verify:
        try:
            report = check_winding(cert)
        except CertificateError as exc:
            raise ConstructionError(str(exc)) from exc
        if not report.ok:
            raise ConstructionError(f"subdiagram {report.failing_subset} is not minimal: {report.reason}")
    return Generated(word, cert, tuple(routing))


def min_length(n: int, k: int) -> int:
    """The threshold N above which the counting bound applies."""
    return (k + 1) * (n - 1) * (n - 2) // 2 + k * (4 * n - 4) + (k + 1)


def lower_bound_count(n: int, k: int, m: int) -> int:
    """Counting bound for generated geodesics of length m.

    Uses the routing allowance t = (k+1)(n-1)(n-2)/2 built into the threshold
    and d = m - t - k(4n-4) free shadow crossings.
    """
    big_n = min_length(n, k)
    if m < big_n:
        raise ValueError(f"m = {m} is below the threshold N = {big_n}")
    step = 4 * n - 4
    t = (k + 1) * (n - 1) * (n - 2) // 2
    d = m - t - k * step
    prod = 1
    for j in range(1, k + 1):
        prod *= (m - t) - j * step
    return prod // factorial(k) * (n - 1) ** d


def enumerate_outputs(n: int, k: int, m: int, verify: bool = True) -> Iterator[Generated]:
    """Every construction output of length exactly m (all splits x, all shadows)."""
    free = m - k * (4 * n - 4)
    for d in range(free + 1):
        for x in _compositions(d, k + 1):
            for choice in product(*[product(range(1, n), repeat=xi) for xi in x]):
                letters, _ = _assemble(n, choice)
                if len(letters) != m:
                    continue
                yield construct_W(GeneratorSpec(n, k, x, choice), verify=verify)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
