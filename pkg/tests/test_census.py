from __future__ import annotations

import json
import random
from collections import defaultdict
from itertools import product

import pytest

from conftest import ball
from geobraid.census import (
    GrowthSeries,
    alternating_count_series,
    class_growth,
    conjecture_scan,
    element_growth,
    fit_recurrence,
    geodesic_growth,
    lemma_conditions,
    moebius_polynomial,
    series_csv,
    trace_counts,
    trace_growth,
)
from geobraid.geodesy import OutOfBall, is_geodesic
from geobraid.words import BraidWord, parse_word


def _trace_classes(n: int, m: int) -> int:
    """Commutation classes of words of length m, found by closing under swaps."""
    seen = set()
    classes = 0
    for w in product(range(1, n), repeat=m):
        if w in seen:
            continue
        classes += 1
        todo = [w]
        seen.add(w)
        while todo:
            u = todo.pop()
            for i in range(m - 1):
                if abs(u[i] - u[i + 1]) >= 2:
                    v = u[:i] + (u[i + 1], u[i]) + u[i + 2:]
                    if v not in seen:
                        seen.add(v)
                        todo.append(v)
    return classes


def test_element_growth():
    assert element_growth(2, 6, ball(2, 6)).counts == (1, 2, 2, 2, 2, 2, 2)
    for n in (3, 4):
        assert element_growth(n, 3, ball(n, 3)).counts[1] == 2 * (n - 1)
    with pytest.raises(OutOfBall):
        element_growth(3, 11, ball(3, 10))


def test_b3_growth_ratio(b3):
    s = element_growth(3, 10, b3)
    for r in s.ratios()[7:]:
        assert 1.9 <= r <= 2.1


def test_geodesic_growth_methods_agree(b4):
    dp = geodesic_growth(4, 6, b4)
    dfs = geodesic_growth(4, 6, b4, method="dfs")
    assert dp.counts == dfs.counts
    elements = element_growth(4, 6, b4)
    for m, (g, e) in enumerate(zip(dp.counts, elements.counts)):
        assert e <= g <= 6 ** m
        assert g >= 3 ** m


def test_geodesic_growth_b3_values(b3):
    assert geodesic_growth(3, 10, b3).counts == (1, 4, 12, 36, 96, 248, 624, 1548, 3804, 9292, 22608)


def test_class_growth(b4):
    assert class_growth(2, 6, "positive").counts == (1,) * 7
    pos = class_growth(4, 6, "positive", b4)
    hom = class_growth(4, 6, "homogeneous", b4)
    alt = class_growth(4, 6, "alternating", b4)
    gam = element_growth(4, 6, b4)
    for m in range(7):
        assert pos.counts[m] <= hom.counts[m]
        assert alt.counts[m] <= gam.counts[m]
    assert class_growth(4, 6, "positive", count="words").counts == tuple(3 ** m for m in range(7))


def test_alternating_matches_trace_oracle(b4):
    assert list(class_growth(4, 6, "alternating", b4).counts) == alternating_count_series(4, 6)
    assert list(class_growth(3, 7, "alternating").counts) == alternating_count_series(3, 7)


def test_trace_growth_examples():
    series, mu = trace_growth(4, 8)
    assert series.counts[:5] == (1, 3, 8, 21, 55)
    assert mu.coefficients == (1, -3, 1)
    assert trace_growth(2, 6)[0].counts == (1,) * 7
    for n in (3, 4, 5):
        assert [_trace_classes(n, m) for m in range(6)] == trace_counts(n, 5)


def test_trace_brute_equals_moebius():
    for n in range(2, 9):
        series, mu = trace_growth(n, 12)
        prod = [sum(series.counts[i] * (mu.coefficients[m - i] if m - i < len(mu.coefficients) else 0)
                    for i in range(m + 1)) for m in range(13)]
        assert prod == [1] + [0] * 12


def test_trace_rate_increases_with_n():
    rates = [trace_growth(n, 12)[0].ratios()[-1] for n in (4, 6, 8, 10, 12)]
    assert rates == sorted(rates) and len(set(rates)) == len(rates)
    assert rates[-1] < 4


def test_moebius_small():
    assert moebius_polynomial(2).coefficients == (1, -1)
    assert moebius_polynomial(5).coefficients == (1, -4, 3)


def test_fit_recurrence():
    rec = fit_recurrence(GrowthSeries("trace", 4, trace_counts(4, 10)), 3)
    assert rec.coefficients == (3, -1)
    rec = fit_recurrence([1, 2, 2, 2, 2, 2, 2, 2], 2)
    assert rec.coefficients == (1,) and rec.start == 2
    rng = random.Random(0)
    assert fit_recurrence([rng.randint(0, 10**9) for _ in range(20)], 6) is None
    with pytest.raises(ValueError):
        fit_recurrence([1, 2, 3], 2)


def test_fit_recurrence_on_trace_series():
    for n in (5, 6, 7):
        series, mu = trace_growth(n, 16)
        rec = fit_recurrence(series, 4)
        assert rec is not None
        # the recurrence is read off the denominator mu(z)
        assert rec.coefficients == tuple(-c for c in mu.coefficients[1:])


def test_smbc1_b3_proved(b3):
    rep = conjecture_scan("smbc1", 3, 9, b3)
    assert rep.status == "proved-in-range" and not rep.counterexamples
    assert rep.checked > 1000


def test_growth_inequality_when_smbc1_holds(b4):
    rep = conjecture_scan("smbc1", 4, 7, b4)
    gam = geodesic_growth(4, 7, b4).counts
    if not rep.counterexamples:
        for m in range(7):
            assert gam[m + 1] >= 3 * gam[m]


def test_hbgr_positive_pattern(b4):
    rep = conjecture_scan("hbgr", 4, 5, b4, patterns=[(1, 1, 1)])
    assert rep.status == "proved-in-range"
    with pytest.raises(ValueError):
        conjecture_scan("hbgr", 4, 5, b4, patterns=[(1, 0, 1)])


def test_rset_witness_sigma1(b3):
    rep = conjecture_scan("rset-witness", 3, 6, b3)
    wit = {tuple(w["T"]): w["b"] for w in rep.witnesses}
    assert wit[(1,)] == "a"
    assert len(wit) == 9 and rep.status == "proved-in-range"
    # replay every witness
    from geobraid.geodesy import r_set

    for T, b in wit.items():
        assert r_set(parse_word(b, 3), b3).letters == set(T)


def test_smbc3_small(b3):
    rep = conjecture_scan("smbc3", 3, 5, b3, conj_bound=2)
    assert rep.status == "no-counterexample-found"


def test_unknown_scan(b3):
    with pytest.raises(ValueError):
        conjecture_scan("nope", 3, 4, b3)


def test_checkpoint_resume(tmp_path, b4):
    path = tmp_path / "scan.json"
    full = conjecture_scan("dead-end", 4, 6, b4)
    conjecture_scan("dead-end", 4, 6, b4, checkpoint=path)
    data = json.loads(path.read_text())
    assert data["done"] == [str(r) for r in range(1, 7)]
    # a rerun finds all units done and keeps the saved totals
    again = conjecture_scan("dead-end", 4, 6, b4, checkpoint=path)
    assert again.checked == full.checked and again.status == full.status


def test_lemma_conditions_agree():
    assert lemma_conditions(ball(3, 8), 8) == (True, True, True)


def test_homogeneous_words_share_of_geodesics(b4):
    h = class_growth(4, 7, "homogeneous", count="words").counts
    g = geodesic_growth(4, 7, b4).counts
    share = [a / b for a, b in zip(h, g)][2:]
    assert all(x > y for x, y in zip(share, share[1:]))


def test_csv():
    text = series_csv([GrowthSeries("trace", 4, (1, 3, 8)), GrowthSeries("positive", 4, (1, 3))])
    lines = text.strip().split("\n")
    assert lines[0] == "m,trace_n4,positive_n4"
    assert lines[3] == "2,8,"
