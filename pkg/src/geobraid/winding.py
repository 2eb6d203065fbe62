"""Winding certificates: minimality from minimal subdiagrams covering every strand pair.

If a multiset of subdiagrams covers each pair of strands exactly m times and
every subdiagram is minimal, then m|D| = sum |D_i| <= sum |D'_i| <= m|D'| for
any other diagram D' of the braid, so D is minimal.  A certificate records the
multiset together with a checkable minimality reason for each member.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping, Union

from .geodesy import BallTable, OutOfBall, b3_geodesic, is_geodesic
from .words import BraidWord, parse_word, render_word, sign_pattern, subdiagram

__all__ = [
    "CertificateError",
    "WindingCertificate",
    "WindingReport",
    "check_winding",
    "verify_winding",
    "k_regular_check",
    "regular_certificate",
    "EVIDENCE_TAGS",
]

EVIDENCE_TAGS = ("homogeneous", "b3", "oracle")
MAX_NESTING = 2

Evidence = Union[str, "WindingCertificate"]
Tables = Union[BallTable, Mapping[int, BallTable], None]


class CertificateError(ValueError):
    """Malformed certificate, or missing data needed to check it."""


@dataclass(frozen=True)
class WindingCertificate:
    word: BraidWord
    subsets: tuple[tuple[int, ...], ...]
    multiplicity: int
    evidence: tuple[Evidence, ...]

    def to_dict(self) -> dict:
        return {
            "word": render_word(self.word),
            "strands": self.word.strands,
            "m": self.multiplicity,
            "subsets": [list(s) for s in self.subsets],
            "evidence": [e.to_dict() if isinstance(e, WindingCertificate) else e for e in self.evidence],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> WindingCertificate:
        evidence = tuple(
            cls.from_dict(e) if isinstance(e, dict) else str(e) for e in data["evidence"]
        )
        return cls(
            parse_word(data["word"], data["strands"]),
            tuple(tuple(int(x) for x in s) for s in data["subsets"]),
            int(data["m"]),
            evidence,
        )

    @classmethod
    def from_json(cls, text: str) -> WindingCertificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class WindingReport:
    ok: bool
    failing_subset: tuple[int, ...] | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failing_subset": list(self.failing_subset) if self.failing_subset else None,
            "reason": self.reason,
        }


def _table_for(tables: Tables, strands: int) -> BallTable:
    if isinstance(tables, BallTable):
        table = tables if tables.strands == strands else None
    elif tables is not None:
        table = tables.get(strands)
    else:
        table = None
    if table is None:
        raise CertificateError(f"oracle evidence needs a ball table for B_{strands}")
    return table


def _check_shape(cert: WindingCertificate) -> None:
    n = cert.word.strands
    if cert.multiplicity < 1:
        raise CertificateError("multiplicity must be at least 1")
    if len(cert.evidence) != len(cert.subsets):
        raise CertificateError("one evidence entry per subset is required")
    cover = Counter()
    for s in cert.subsets:
        if not s or len(set(s)) != len(s) or not all(1 <= x <= n for x in s):
            raise CertificateError(f"bad strand subset {list(s)}")
        for pair in combinations(sorted(s), 2):
            cover[pair] += 1
    for pair in combinations(range(1, n + 1), 2):
        if cover[pair] != cert.multiplicity:
            raise CertificateError(
                f"strands {pair} are covered {cover[pair]} times, expected {cert.multiplicity}"
            )


def _minimal_by(evidence: Evidence, sub: BraidWord, tables: Tables, depth: int) -> tuple[bool, str]:
    if isinstance(evidence, WindingCertificate):
        if depth >= MAX_NESTING:
            raise CertificateError(f"certificates nest at most {MAX_NESTING} deep")
        if evidence.word != sub:
            return False, "nested certificate is for a different word"
        report = _check(evidence, tables, depth + 1)
        return report.ok, report.reason
    if evidence == "homogeneous":
        return sign_pattern(sub) is not None, "subdiagram is not homogeneous"
    if evidence == "b3":
        if sub.strands != 3:
            raise CertificateError("b3 evidence applies to 3-strand subdiagrams only")
        return _b3_cached(sub.letters), "subdiagram fails the B3 geodesic test"
    if evidence == "oracle":
        if sub.strands == 1:
            return True, ""
        table = _table_for(tables, sub.strands)
        try:
            return is_geodesic(sub, table), "subdiagram is not geodesic"
        except OutOfBall:
            raise CertificateError("subdiagram lies outside the supplied ball") from None
    raise CertificateError(f"unknown evidence tag {evidence!r}")


@lru_cache(maxsize=65536)
def _b3_cached(letters: tuple[int, ...]) -> bool:
    return b3_geodesic(BraidWord(3, letters))


def _check(cert: WindingCertificate, tables: Tables, depth: int) -> WindingReport:
    _check_shape(cert)
    for s, ev in zip(cert.subsets, cert.evidence):
        sub = subdiagram(cert.word, s)
        ok, why = _minimal_by(ev, sub, tables, depth)
        if not ok:
            return WindingReport(False, tuple(s), why)
    return WindingReport(True)


def check_winding(cert: WindingCertificate, tables: Tables = None) -> WindingReport:
    """Verify a certificate and report the first failing subset, if any."""
    return _check(cert, tables, 0)


def verify_winding(cert: WindingCertificate, tables: Tables = None) -> bool:
    """True certifies the word geodesic. Coverage violations raise CertificateError."""
    return check_winding(cert, tables).ok


def regular_certificate(w: BraidWord, k: int, evidence: str | None = None) -> WindingCertificate:
    """All k-subsets of strands, each pair covered C(n-2, k-2) times."""
    n = w.strands
    if not 2 <= k <= n:
        raise CertificateError("need 2 <= k <= n")
    if evidence is None:
        evidence = {2: "homogeneous", 3: "b3"}.get(k, "oracle")
    subsets = tuple(combinations(range(1, n + 1), k))
    return WindingCertificate(w, subsets, comb(n - 2, k - 2), (evidence,) * len(subsets))


def k_regular_check(w: BraidWord, k: int, t: Tables = None) -> bool:
    """Is every k-strand subdiagram minimal?"""
    n = w.strands
    if not 2 <= k <= n:
        raise CertificateError("need 2 <= k <= n")
    if k == 2:
        signs: dict = {}
        at = list(range(1, n + 1))
        for x in w.letters:
            i = abs(x) - 1
            pair = frozenset((at[i], at[i + 1]))
            if signs.setdefault(pair, x > 0) != (x > 0):
                return False
            at[i], at[i + 1] = at[i + 1], at[i]
        return True
    if k == 3:
        return all(_b3_cached(subdiagram(w, s).letters) for s in combinations(range(1, n + 1), 3))
    table = _table_for(t, k)
    return all(is_geodesic(subdiagram(w, s), table) for s in combinations(range(1, n + 1), k))
