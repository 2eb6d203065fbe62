"""Growth series, trace-monoid counting and bounded conjecture scans.

Everything here reads lengths from a ``BallTable``; nothing is estimated.
Scans walk the ball (or the words inside it) exhaustively and report either
replayable witnesses or that none were found.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import garside
from .garside import identity_key, key_of, mul_letter
from .geodesy import (
    BallTable,
    OutOfBall,
    alphabet,
    geodesic_representatives,
    min_conj_length_bounded,
)
from .words import (
    BraidWord,
    SignPattern,
    block_profile,
    is_alternating,
    render_word,
    sign_pattern,
)

__all__ = [
    "GrowthSeries",
    "MoebiusPolynomial",
    "Recurrence",
    "ConjectureReport",
    "TraceDisagreement",
    "element_growth",
    "geodesic_growth",
    "class_growth",
    "alternating_count_series",
    "trace_growth",
    "trace_counts",
    "moebius_polynomial",
    "fit_recurrence",
    "conjecture_scan",
    "lemma_conditions",
    "series_csv",
    "SCAN_IDS",
]

SERIES_KINDS = ("gamma_elements", "gamma_geodesics", "positive", "alternating", "homogeneous", "trace")
SCAN_IDS = ("smbc1", "smbc2", "smbc3", "hbgr", "blocks", "rset-witness", "dead-end")

PROVED = "proved-in-range"
NONE_FOUND = "no-counterexample-found"
FOUND = "counterexample"


class TraceDisagreement(AssertionError):
    """Brute-force trace counts and Moebius inversion differ: an internal error."""


@dataclass(frozen=True)
class GrowthSeries:
    kind: str
    strands: int
    counts: tuple[int, ...]
    exact: bool = True
    note: str = ""

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("growth counts are nonnegative")

    def ratios(self) -> list[float]:
        return [b / a if a else float("nan") for a, b in zip(self.counts, self.counts[1:])]

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "strands": self.strands, "counts": list(self.counts), "exact": self.exact}
        if self.note:
            d["note"] = self.note
        return d


def _need_radius(t: BallTable, n: int, L: int) -> None:
    if t.strands != n:
        raise ValueError(f"ball is for B_{t.strands}, asked about B_{n}")
    if t.radius < L:
        raise OutOfBall(f"need a ball of radius {L}, have {t.radius}")


def element_growth(n: int, L: int, t: BallTable) -> GrowthSeries:
    _need_radius(t, n, L)
    return GrowthSeries("gamma_elements", n, tuple(t.layer_sizes[: L + 1]))


def geodesic_growth(n: int, L: int, t: BallTable, method: str = "dp") -> GrowthSeries:
    """Geodesic words per length.

    ``dp`` sums per-element geodesic counts; ``dfs`` walks words and prunes a
    prefix as soon as it stops being geodesic.  Both are exact.
    """
    _need_radius(t, n, L)
    if method == "dp":
        per = t.geodesic_counts()
        counts = [sum(per[k] for k in t.layers[m]) for m in range(L + 1)]
    elif method == "dfs":
        counts = [0] * (L + 1)
        letters = alphabet(n)

        def walk(key, depth):
            counts[depth] += 1
            if depth == L:
                return
            for s in letters:
                k2 = mul_letter(n, key, s)
                if t.lengths.get(k2) == depth + 1:
                    walk(k2, depth + 1)

        walk(identity_key(), 0)
    else:
        raise ValueError(f"unknown method {method!r}")
    return GrowthSeries("gamma_geodesics", n, tuple(counts))


_CLASS_TESTS = {
    "positive": lambda w: all(x > 0 for x in w.letters),
    "alternating": is_alternating,
    "homogeneous": lambda w: sign_pattern(w) is not None,
}


def _class_words(n: int, L: int, cls: str) -> Iterator[BraidWord]:
    """Words of the class by length-first DFS; all three classes are prefix-closed."""
    test = _CLASS_TESTS[cls]
    letters = tuple(range(1, n)) if cls == "positive" else alphabet(n)

    def walk(prefix):
        yield BraidWord(n, prefix)
        if len(prefix) == L:
            return
        for s in letters:
            nxt = prefix + (s,)
            if test(BraidWord(n, nxt)):
                yield from walk(nxt)

    yield from walk(())


def class_growth(n: int, L: int, cls: str, t: BallTable | None = None, count: str = "braids") -> GrowthSeries:
    """P, A or H: braids of crossing number m with a representative in the class.

    Class words are geodesic, so each braid is counted at the length of its
    class words; duplicates are removed by canonical form.  With a ball
    table, every class word is also checked geodesic against it.
    ``count="words"`` gives the word counts p, a, h instead.
    """
    if cls not in _CLASS_TESTS:
        raise ValueError(f"unknown class {cls!r}")
    if t is not None:
        _need_radius(t, n, L)
    seen: list[set] = [set() for _ in range(L + 1)]
    words = [0] * (L + 1)
    for w in _class_words(n, L, cls):
        key = key_of(w)
        if t is not None and t.lengths.get(key) != len(w):
            raise AssertionError(f"{cls} word {render_word(w)} is not geodesic")
        seen[len(w)].add(key)
        words[len(w)] += 1
    if count == "words":
        counts = words
    elif count == "braids":
        counts = [len(s) for s in seen]
    else:
        raise ValueError("count must be 'braids' or 'words'")
    note = "word counts" if count == "words" else ""
    return GrowthSeries(cls, n, tuple(counts), note=note)


# --- power series helpers (truncated integer lists) ---

def _mul(a: Sequence[int], b: Sequence[int], L: int) -> list[int]:
    out = [0] * (L + 1)
    for i, x in enumerate(a[: L + 1]):
        if x:
            for j, y in enumerate(b[: L + 1 - i]):
                out[i + j] += x * y
    return out


def _invert(a: Sequence[int], L: int) -> list[int]:
    if not a or a[0] != 1:
        raise ValueError("series must start with 1 to be inverted over the integers")
    inv = [0] * (L + 1)
    inv[0] = 1
    for m in range(1, L + 1):
        inv[m] = -sum(a[j] * inv[m - j] for j in range(1, min(m, len(a) - 1) + 1))
    return inv


@dataclass(frozen=True)
class MoebiusPolynomial:
    """mu(z) = sum over sets C of pairwise commuting generators of (-z)^|C|."""

    generators: int
    coefficients: tuple[int, ...]

    def inverse_series(self, L: int) -> list[int]:
        return _invert(self.coefficients, L)


def _commute(i: int, j: int) -> bool:
    return abs(i - j) >= 2


def moebius_polynomial(n: int) -> MoebiusPolynomial:
    """Generators a_1..a_{n-1} with a_i a_j = a_j a_i when |i - j| >= 2."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = range(1, n)
    coeffs = [0] * n
    for size in range(n):
        for c in combinations(gens, size):
            if all(_commute(i, j) for i, j in combinations(c, 2)):
                coeffs[size] += (-1) ** size
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return MoebiusPolynomial(n - 1, tuple(coeffs))


def trace_counts(n: int, L: int) -> list[int]:
    """Count lexicographic normal forms of the trace monoid directly.

    A word is the lex-least representative of its commutation class iff it
    has no factor ``b u a`` with ``a < b`` and ``a`` commuting with ``b`` and
    with every letter of ``u``.  Scanning left to right, the letters that may
    not come next form a set; words are counted by that set.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    gens = tuple(range(1, n))
    counts = [0] * (L + 1)
    layer = {frozenset(): 1}
    for m in range(L + 1):
        counts[m] = sum(layer.values())
        if m == L:
            break
        nxt: dict = defaultdict(int)
        for banned, ways in layer.items():
            for x in gens:
                if x in banned:
                    continue
                state = frozenset(
                    [a for a in gens if a < x and _commute(a, x)]
                    + [a for a in banned if _commute(a, x)]
                )
                nxt[state] += ways
        layer = nxt
    return counts


def trace_growth(n: int, L: int) -> tuple[GrowthSeries, MoebiusPolynomial]:
    """Trace monoid growth, counted twice: normal forms and 1/mu(z)."""
    mu = moebius_polynomial(n)
    brute = trace_counts(n, L)
    inverted = mu.inverse_series(L)
    if brute != inverted:
        raise TraceDisagreement(f"n={n}: normal forms {brute} vs Moebius {inverted}")
    if _mul(inverted, mu.coefficients, L) != [1] + [0] * L:
        raise TraceDisagreement("series times mu(z) is not 1")
    return GrowthSeries("trace", n, tuple(brute)), mu


def _path_trace(k: int, L: int) -> list[int]:
    return moebius_polynomial(k + 1).inverse_series(L) if k else [1] + [0] * L


def _blocks(cols: Sequence[int]) -> list[int]:
    sizes: list[int] = []
    prev = None
    for c in cols:
        if prev is not None and c == prev + 1:
            sizes[-1] += 1
        else:
            sizes.append(1)
        prev = c
    return sizes


def alternating_count_series(n: int, L: int) -> list[int]:
    """A_n(m) from trace-monoid counts, without touching braids.

    A braid with an alternating diagram splits into connected blocks of
    columns.  On a block of k columns the alternating words with full support
    are the trace monoid elements on a path of k generators that use every
    generator (inclusion-exclusion), in one of two phases.
    """
    full: dict[int, list[int]] = {}

    def full_support(k: int) -> list[int]:
        if k not in full:
            acc = [0] * (L + 1)
            for size in range(k + 1):
                for sub in combinations(range(k), size):
                    term = [1] + [0] * L
                    for b in _blocks(sub):
                        term = _mul(term, _path_trace(b, L), L)
                    sign = (-1) ** (k - size)
                    acc = [x + sign * y for x, y in zip(acc, term)]
            full[k] = acc
        return full[k]

    total = [0] * (L + 1)
    cols = range(1, n)
    for size in range(n):
        for used in combinations(cols, size):
            term = [1] + [0] * L
            for b in _blocks(used):
                term = _mul(term, [2 * x for x in full_support(b)], L)
            total = [x + y for x, y in zip(total, term)]
    return total


# --- recurrences ---

@dataclass(frozen=True)
class Recurrence:
    """T(m) = sum_j coefficients[j-1] * T(m-j) for all m >= start."""

    coefficients: tuple[int, ...]
    start: int
    validated_on: int

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def __str__(self):
        terms = " + ".join(f"{c}*T(m-{j})" for j, c in enumerate(self.coefficients, 1) if c)
        return f"T(m) = {terms or '0'} for m >= {self.start}"


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    size = len(rows)
    a = [r[:] + [b] for r, b in zip(rows, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][size] / a[i][i] for i in range(size)]


def fit_recurrence(
    series: GrowthSeries | Sequence[int],
    max_degree: int,
    max_offset: int = 2,
    holdout: int = 2,
) -> Recurrence | None:
    """Smallest-degree integer linear recurrence, in exact arithmetic.

    Degree d is solved from d consecutive equations and must then reproduce
    every later term; at least ``holdout`` terms are left for that check.
    A recurrence may start up to ``max_offset`` terms late.
    """
    terms = list(series.counts if isinstance(series, GrowthSeries) else series)
    if len(terms) < 2 * max_degree + 2:
        raise ValueError(f"need at least {2 * max_degree + 2} terms for degree {max_degree}")
    T = [Fraction(x) for x in terms]
    for d in range(1, max_degree + 1):
        for start in range(d, d + max_offset + 1):
            if len(T) - (start + d) < holdout:
                break
            rows = [[T[m - j] for j in range(1, d + 1)] for m in range(start, start + d)]
            coeffs = _solve(rows, [T[m] for m in range(start, start + d)])
            if coeffs is None or any(c.denominator != 1 for c in coeffs):
                continue
            if all(sum(c * T[m - j] for j, c in enumerate(coeffs, 1)) == T[m] for m in range(start, len(T))):
                return Recurrence(tuple(int(c) for c in coeffs), start, len(T) - start - d)
    return None


# --- conjecture scans ---

@dataclass
class ConjectureReport:
    conjecture: str
    params: dict
    counterexamples: list = field(default_factory=list)
    status: str = NONE_FOUND
    checked: int = 0
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "params": self.params,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class _Checkpoint:
    """Per-unit progress saved as JSON so an interrupted scan resumes."""

    def __init__(self, path, report: ConjectureReport):
        self.path = Path(path) if path else None
        self.report = report
        self.done: set = set()
        if self.path and self.path.exists():
            data = json.loads(self.path.read_text())
            if data.get("conjecture") == report.conjecture and data.get("params") == report.params:
                self.done = set(data["done"])
                report.counterexamples[:] = data["counterexamples"]
                report.witnesses[:] = data["witnesses"]
                report.checked = data["checked"]

    def units(self, names: Iterable[str]) -> Iterator[str]:
        for name in names:
            if name in self.done:
                continue
            yield name
            self.done.add(name)
            self.save()

    def save(self):
        if self.path is None:
            return
        data = self.report.to_dict()
        data["done"] = sorted(self.done)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(data))
        os.replace(tmp, self.path)


def _word(n: int, letters) -> str:
    return render_word(BraidWord(n, tuple(letters)))


def _rep_ending(t: BallTable, key, s: int) -> tuple[int, ...]:
    for rep in geodesic_representatives(key, t):
        if rep and rep[-1] == s:
            return rep
    raise AssertionError("R-set letter without a geodesic ending in it")


def _rset(t: BallTable, key, ell: int) -> list[int]:
    n = t.strands
    return [s for s in alphabet(n) if t.lengths.get(mul_letter(n, key, -s)) == ell - 1]


def _scan_smbc1(t, n, L, report, ck):
    for name in ck.units(str(r) for r in range(L)):
        ell = int(name)
        for key in t.layers[ell]:
            for s in _rset(t, key, ell):
                report.checked += 1
                if t.lengths[mul_letter(n, key, s)] != ell + 1:
                    ws = _rep_ending(t, key, s)
                    report.counterexamples.append({"w": _word(n, ws[:-1]), "s": _word(n, (s,))})
    return PROVED


def _scan_smbc2(t, n, L, report, ck):
    letters = alphabet(n)
    for name in ck.units(str(s) for s in letters):
        first = int(name)
        # geodesic words x = u s v starting with `first`; doubled[i] tracks u s s v
        stack = [((first,), mul_letter(n, identity_key(), first), [mul_letter(n, mul_letter(n, identity_key(), first), first)])]
        while stack:
            word, key, doubled = stack.pop()
            size = len(word)
            for i, d in enumerate(doubled):
                report.checked += 1
                if t.lengths.get(d) != size + 1:
                    report.counterexamples.append(
                        {"u": _word(n, word[:i]), "s": _word(n, word[i:i + 1]), "v": _word(n, word[i + 1:])}
                    )
            if size + 2 > L:
                continue
            for y in letters:
                k2 = mul_letter(n, key, y)
                if t.lengths.get(k2) != size + 1:
                    continue
                d2 = [mul_letter(n, d, y) for d in doubled]
                d2.append(mul_letter(n, k2, y))
                stack.append((word + (y,), k2, d2))
    return PROVED


def _scan_smbc3(t, n, L, report, ck, conj_bound):
    unresolved = 0
    for name in ck.units(str(r) for r in range(1, L)):
        ell = int(name)
        for key in t.layers[ell]:
            rep = next(geodesic_representatives(key, t, 1))
            g = BraidWord(n, rep)
            mcl, exact = min_conj_length_bounded(g, t, conj_bound)
            if mcl < ell:
                continue
            for s in _rset(t, key, ell):
                report.checked += 1
                gs = BraidWord(n, rep + (s,))
                if t.lengths[key_of(gs)] != ell + 1:
                    bad = True
                else:
                    bad = min_conj_length_bounded(gs, t, conj_bound)[0] < ell + 1
                if bad:
                    if exact:
                        ws = _rep_ending(t, key, s)
                        report.counterexamples.append({"w": _word(n, ws[:-1]), "s": _word(n, (s,))})
                    else:
                        unresolved += 1
    if unresolved:
        report.notes.append(f"{unresolved} failures rest on an unproved premise (bounded conjugacy search)")
    return NONE_FOUND


def _full_patterns(n: int) -> list[tuple[int, ...]]:
    return [p for p in product((1, -1), repeat=n - 1)]


def _pattern_words(n: int, pattern: Sequence[int], m: int) -> Iterator[tuple[int, ...]]:
    letters = [e * i for i, e in enumerate(pattern, 1)]
    return product(letters, repeat=m)


def _rewrites(word: tuple[int, ...], pattern: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            yield word[:i] + (b, a) + word[i + 2:]
    for i in range(len(word) - 2):
        a, b, c = word[i : i + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            if pattern[abs(a) - 1] == pattern[abs(b) - 1]:
                yield word[:i] + (b, a, b) + word[i + 3:]


def _closure(word: tuple[int, ...], pattern: Sequence[int]) -> set:
    seen = {word}
    todo = [word]
    while todo:
        w = todo.pop()
        for v in _rewrites(w, pattern):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def _scan_hbgr(t, n, L, report, ck, patterns):
    for name in ck.units(",".join(map(str, p)) for p in patterns):
        pattern = tuple(int(x) for x in name.split(","))
        for m in range(2, L + 1):
            classes: dict = defaultdict(list)
            for w in _pattern_words(n, pattern, m):
                classes[garside.mul_word(n, identity_key(), w)].append(w)
            for words in classes.values():
                report.checked += 1
                if len(words) == 1:
                    continue
                reach = _closure(words[0], pattern)
                for w in words[1:]:
                    if w not in reach:
                        report.counterexamples.append(
                            {"pattern": list(pattern), "u": _word(n, words[0]), "v": _word(n, w)}
                        )
                        break
    return PROVED


def _scan_blocks(t, n, L, report, ck):
    for name in ck.units(str(m) for m in range(1, L + 1)):
        m = int(name)
        classes: dict = defaultdict(set)
        for pattern in _full_patterns(n):
            for w in _pattern_words(n, pattern, m):
                classes[garside.mul_word(n, identity_key(), w)].add(w)
        for words in classes.values():
            report.checked += 1
            ordered = sorted(words)
            merged = [0] * (n - 1)
            for w in ordered:
                for x in w:
                    merged[abs(x) - 1] = 1 if x > 0 else -1
            pat = SignPattern(tuple(merged))
            first = block_profile(BraidWord(n, ordered[0]), pat)
            for w in ordered[1:]:
                if block_profile(BraidWord(n, w), pat) != first:
                    report.counterexamples.append({"u": _word(n, ordered[0]), "v": _word(n, w)})
                    break
    return PROVED


def _scan_rset(t, n, L, report, ck):
    letters = alphabet(n)
    targets = {}
    for choice in product((0, 1, -1), repeat=n - 1):
        targets[frozenset(e * i for i, e in enumerate(choice, 1) if e)] = None
    for name in ck.units(str(r) for r in range(L + 1)):
        r = int(name)
        for key in t.layers[r]:
            report.checked += 1
            rs = frozenset(s for s in letters if t.lengths.get(mul_letter(n, key, -s)) == r - 1)
            if rs in targets and targets[rs] is None:
                targets[rs] = _word(n, next(geodesic_representatives(key, t, 1)))
    for w in report.witnesses:
        targets[frozenset(w["T"])] = w["b"]
    report.witnesses = [
        {"T": sorted(T, key=lambda x: (x < 0, abs(x))), "b": b}
        for T, b in sorted(targets.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        if b is not None
    ]
    missing = [sorted(T) for T, b in targets.items() if b is None]
    if missing:
        report.notes.append(f"no witness within radius {L} for {len(missing)} sets: {missing}")
        return NONE_FOUND
    return PROVED


def _scan_dead_end(t, n, L, report, ck):
    letters = alphabet(n)
    for name in ck.units(str(r) for r in range(1, L + 1)):
        r = int(name)
        for key in t.layers[r]:
            report.checked += 1
            # neighbours outside the ball are longer
            if all(t.lengths.get(mul_letter(n, key, s), r + 1) < r for s in letters):
                report.counterexamples.append({"b": _word(n, next(geodesic_representatives(key, t, 1)))})
    return PROVED


def conjecture_scan(
    conjecture: str,
    n: int,
    L: int,
    t: BallTable,
    *,
    patterns: Sequence[Sequence[int]] | None = None,
    conj_bound: int = 2,
    checkpoint: str | os.PathLike | None = None,
) -> ConjectureReport:
    """Exhaustive bounded scan; see the README for what each id checks.

    The ball must reach radius L (smbc2 and the word scans stay within it).
    """
    if conjecture not in SCAN_IDS:
        raise ValueError(f"unknown conjecture id {conjecture!r}")
    _need_radius(t, n, L)
    params = {"n": n, "L": L, "radius": t.radius}
    if conjecture == "smbc3":
        params["conj_bound"] = conj_bound
    if conjecture == "hbgr":
        patterns = [tuple(p) for p in patterns] if patterns else _full_patterns(n)
        for p in patterns:
            if len(p) != n - 1 or any(e not in (1, -1) for e in p):
                raise ValueError(f"hbgr needs full sign patterns, got {list(p)}")
        params["patterns"] = [list(p) for p in patterns]
    report = ConjectureReport(conjecture, params)
    ck = _Checkpoint(checkpoint, report)
    if conjecture == "smbc1":
        status = _scan_smbc1(t, n, L, report, ck)
    elif conjecture == "smbc2":
        status = _scan_smbc2(t, n, L, report, ck)
    elif conjecture == "smbc3":
        status = _scan_smbc3(t, n, L, report, ck, conj_bound)
    elif conjecture == "hbgr":
        status = _scan_hbgr(t, n, L, report, ck, patterns)
    elif conjecture == "blocks":
        status = _scan_blocks(t, n, L, report, ck)
    elif conjecture == "rset-witness":
        status = _scan_rset(t, n, L, report, ck)
    else:
        status = _scan_dead_end(t, n, L, report, ck)
    report.status = FOUND if report.counterexamples else status
    ck.save()
    return report


def lemma_conditions(t: BallTable, L: int) -> tuple[bool, bool, bool]:
    """The three equivalent extension conditions, each checked over the ball.

    1. ws geodesic implies wss geodesic (|ws| <= L - 1);
    2. s in R(g) implies s^-1 not in R(g) (l(g) <= L);
    3. for geodesic w and any s, ws or ws^-1 is geodesic (|w| <= L - 1).
    """
    n = t.strands
    _need_radius(t, n, L)
    letters = alphabet(n)
    c1 = c2 = c3 = True
    for ell in range(L + 1):
        for key in t.layers[ell]:
            rs = set(_rset(t, key, ell))
            if any(-s in rs for s in rs):
                c2 = False
            if ell == L:
                continue
            for s in rs:
                if t.lengths[mul_letter(n, key, s)] != ell + 1:
                    c1 = False
            for s in letters:
                if s > 0 and all(t.lengths[mul_letter(n, key, e * s)] != ell + 1 for e in (1, -1)):
                    c3 = False
    return c1, c2, c3


def series_csv(series: Sequence[GrowthSeries]) -> str:
    """One row per m, one column per series."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["m"] + [f"{s.kind}_n{s.strands}" for s in series])
    rows = max(len(s.counts) for s in series)
    for m in range(rows):
        out.writerow([m] + [s.counts[m] if m < len(s.counts) else "" for s in series])
    return buf.getvalue()
