"""Alexander-Conway polynomial of ordered braid diagrams by descending-state sums.

Endpoints: the n inputs sit on top, the n outputs at the bottom, strands run
downward.  An ordering numbers the 2n endpoints so that, after sorting, inputs
take the odd ranks and outputs the even ranks.  The standard ordering numbers
the rightmost column first: input at top position p gets ``2(n - p) + 1`` and
the output below it ``2(n - p) + 2``.

Smoothing a crossing of a braid diagram keeps both strands in their columns, so
a state never produces a closed component; the smoothed diagram is again a
braid diagram with the remaining crossings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .garside import key_of
from .geodesy import BallTable, geodesic_representatives, is_geodesic
from .words import BraidWord, SignPattern, over_strand_enters_right, sign_pattern

__all__ = [
    "OrderingError",
    "StateBudgetExceeded",
    "Ordering",
    "OrderedDiagram",
    "ConwayPolynomial",
    "HomogeneityCertificate",
    "standard_ordering",
    "all_orderings",
    "conway",
    "top_coefficient",
    "is_homogeneous_ordering",
    "find_homogeneous_ordering",
    "homogeneous_orderings",
    "certify_minimal_homogeneous",
    "homogeneous_geodesic_converse",
]

STATE_BUDGET = 20


class OrderingError(ValueError):
    pass


class StateBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Ordering:
    """Endpoint numbers: ``inputs[p - 1]`` on top position p, ``outputs[p - 1]`` below it."""

    inputs: tuple[int, ...]
    outputs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.inputs)
        if len(self.outputs) != n or n == 0:
            raise OrderingError("need one number per input and per output")
        numbers = self.inputs + self.outputs
        if len(set(numbers)) != 2 * n:
            raise OrderingError("endpoint numbers must be distinct")
        ins = set(self.inputs)
        for r, v in enumerate(sorted(numbers)):
            if (v in ins) != (r % 2 == 0):
                raise OrderingError("inputs must take odd ranks and outputs even ranks")

    @property
    def strands(self) -> int:
        return len(self.inputs)

    def sequence(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(alpha, beta): 0-based position of the k-th input and of the k-th output."""
        ranked = sorted(
            [(v, "i", p) for p, v in enumerate(self.inputs)]
            + [(v, "o", p) for p, v in enumerate(self.outputs)]
        )
        alpha = tuple(p for _, kind, p in ranked if kind == "i")
        beta = tuple(p for _, kind, p in ranked if kind == "o")
        return alpha, beta

    @classmethod
    def from_sequence(cls, alpha, beta) -> Ordering:
        n = len(alpha)
        ins, outs = [0] * n, [0] * n
        for k, (a, b) in enumerate(zip(alpha, beta)):
            ins[a] = 2 * k + 1
            outs[b] = 2 * k + 2
        return cls(tuple(ins), tuple(outs))

    def as_map(self) -> dict:
        return {
            "inputs": {str(p): v for p, v in enumerate(self.inputs, 1)},
            "outputs": {str(p): v for p, v in enumerate(self.outputs, 1)},
        }


@dataclass(frozen=True)
class OrderedDiagram:
    word: BraidWord
    ordering: Ordering

    def __post_init__(self):
        if self.ordering.strands != self.word.strands:
            raise OrderingError("ordering and word disagree on the strand count")


@dataclass(frozen=True)
class ConwayPolynomial:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int | None:
        for m in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[m]:
                return m
        return None

    def trimmed(self) -> tuple[int, ...]:
        d = self.degree
        return () if d is None else self.coefficients[: d + 1]

    def __str__(self):
        terms = []
        for m, a in enumerate(self.trimmed()):
            if a:
                terms.append(str(a) if m == 0 else f"{a}*z" if m == 1 else f"{a}*z^{m}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps(list(self.trimmed()))


@dataclass(frozen=True)
class HomogeneityCertificate:
    word: BraidWord
    pattern: SignPattern
    ordering: Ordering
    degree: int
    leading_coefficient: int

    @property
    def geodesic(self) -> bool:
        return self.degree == len(self.word)


def standard_ordering(n: int) -> Ordering:
    if n < 1:
        raise OrderingError("need at least one strand")
    return Ordering(
        tuple(2 * (n - p) + 1 for p in range(1, n + 1)),
        tuple(2 * (n - p) + 2 for p in range(1, n + 1)),
    )


def all_orderings(n: int) -> Iterator[Ordering]:
    """Every ordering up to renumbering (n!^2 of them)."""
    from itertools import permutations

    for alpha in permutations(range(n)):
        for beta in permutations(range(n)):
            yield Ordering.from_sequence(alpha, beta)


def _over_under(x: int, left: int, right: int) -> tuple[int, int]:
    return (right, left) if over_strand_enters_right(x) else (left, right)


def conway(d: OrderedDiagram, budget: int = STATE_BUDGET) -> ConwayPolynomial:
    """Signed count of descending m-states for every m.

    States are explored crossing by crossing; a smoothed crossing is kept only
    when the string through its former overpass is traversed first, so
    non-descending branches are cut early.
    """
    letters = d.word.letters
    size = len(letters)
    if size > budget:
        raise StateBudgetExceeded(f"{size} crossings exceed the state budget of {budget}")
    n = d.word.strands
    alpha, beta = d.ordering.sequence()
    rank = [0] * n
    for k, p in enumerate(alpha):
        rank[p] = k
    target = [0] * n
    for k in range(n):
        target[beta[k]] = alpha[k]
    target = tuple(target)
    coeffs = [0] * (size + 1)

    def walk(j: int, at: tuple, smoothed: int, sign: int) -> None:
        if j == size:
            if at == target:
                coeffs[smoothed] += sign
            return
        x = letters[j]
        i = abs(x) - 1
        left, right = at[i], at[i + 1]
        crossed = at[:i] + (right, left) + at[i + 2:]
        walk(j + 1, crossed, smoothed, sign)
        over, under = _over_under(x, left, right)
        if rank[over] < rank[under]:
            walk(j + 1, at, smoothed + 1, sign if x > 0 else -sign)

    walk(0, tuple(range(n)), 0, 1)
    return ConwayPolynomial(tuple(coeffs))


def top_coefficient(d: OrderedDiagram) -> int:
    """a_{|D|}: the sign of the all-crossings state if it is coherent and descending, else 0."""
    alpha, beta = d.ordering.sequence()
    if alpha != beta:
        return 0
    rank = [0] * d.word.strands
    for k, p in enumerate(alpha):
        rank[p] = k
    sign = 1
    for x in d.word.letters:
        i = abs(x) - 1
        over, under = _over_under(x, i, i + 1)
        if rank[over] > rank[under]:
            return 0
        if x < 0:
            sign = -sign
    return sign


def is_homogeneous_ordering(d: OrderedDiagram) -> bool:
    return top_coefficient(d) != 0


def _precedence(w: BraidWord) -> list[tuple[int, int]] | None:
    """Pairs (a, b): top position a must be traversed before b (0-based)."""
    pattern = sign_pattern(w)
    if pattern is None:
        return None
    pairs = []
    for i, e in enumerate(pattern.entries):
        if e:
            pairs.append(_over_under(e, i, i + 1))
    return pairs


def homogeneous_orderings(w: BraidWord, limit: int | None = None) -> Iterator[Ordering]:
    """All orderings whose all-crossings state is coherent and descending.

    Candidates are taken rightmost-first, so a positive diagram yields the
    standard ordering first.  Generated lazily; any partial choice extends,
    so the first ordering costs O(n^2).
    """
    n = w.strands
    pairs = _precedence(w)
    if pairs is None:
        return
    preds = [set() for _ in range(n)]
    for a, b in pairs:
        preds[b].add(a)
    seq: list[int] = []
    placed = [False] * n
    found = 0

    def extend():
        nonlocal found
        if len(seq) == n:
            found += 1
            yield Ordering.from_sequence(tuple(seq), tuple(seq))
            return
        for p in range(n - 1, -1, -1):
            if not placed[p] and all(placed[q] for q in preds[p]):
                placed[p] = True
                seq.append(p)
                yield from extend()
                seq.pop()
                placed[p] = False
                if limit is not None and found >= limit:
                    return

    yield from extend()


def find_homogeneous_ordering(w: BraidWord) -> Ordering | None:
    return next(homogeneous_orderings(w, limit=1), None)


def certify_minimal_homogeneous(w: BraidWord) -> HomogeneityCertificate | None:
    """Minimality certificate for a homogeneous word; None when the word is not homogeneous.

    The certificate records a homogeneous ordering and the nonzero top
    coefficient a_{|w|}, which pins deg = |w|.
    """
    pattern = sign_pattern(w)
    if pattern is None:
        return None
    ordering = find_homogeneous_ordering(w)
    if ordering is None:
        return None
    lead = top_coefficient(OrderedDiagram(w, ordering))
    if lead == 0:
        raise AssertionError("homogeneous ordering without a descending top state")
    return HomogeneityCertificate(w, pattern, ordering, len(w), lead)


def homogeneous_geodesic_converse(w: BraidWord, t: BallTable, limit: int | None = None) -> bool:
    """Check: w geodesic iff homogeneous, and all geodesics share one sign pattern.

    Requires that [w] has a homogeneous geodesic representative in the ball.
    """
    key = key_of(w)
    reps = [BraidWord(w.strands, r) for r in geodesic_representatives(key, t, limit)]
    patterns = [sign_pattern(r) for r in reps]
    hom = [p for p in patterns if p is not None]
    if not hom:
        raise ValueError("braid has no homogeneous geodesic representative in the ball")
    if is_geodesic(w, t) != (sign_pattern(w) is not None):
        return False
    if any(p is None for p in patterns):
        return False
    return all(p.compatible(q) for p in hom for q in hom)
