from __future__ import annotations

import pytest

from geobraid.generator import GeneratorSpec, construct_W
from geobraid.geodesy import is_geodesic
from geobraid.winding import (
    CertificateError,
    WindingCertificate,
    check_winding,
    k_regular_check,
    regular_certificate,
    verify_winding,
)
from geobraid.words import BraidWord, parse_word


def test_trivial_certificate(b4):
    w = parse_word("abcab", 4)
    cert = WindingCertificate(w, ((1, 2, 3, 4),), 1, ("oracle",))
    assert verify_winding(cert, b4)
    with pytest.raises(CertificateError):
        verify_winding(cert)  # oracle evidence without a table


def test_coverage_violation():
    w = parse_word("ab", 3)
    cert = WindingCertificate(w, ((1, 2), (1, 2), (1, 3)), 1, ("homogeneous",) * 3)
    with pytest.raises(CertificateError):
        verify_winding(cert)


def test_generator_output_certificate():
    out = construct_W(GeneratorSpec(5, 1, (3, 2), seed=1))
    cert = out.certificate
    assert cert.multiplicity == 3 and len(cert.subsets) == 10
    assert verify_winding(cert)


def test_failing_subset_reported():
    w = parse_word("aBAB", 3)
    rep = check_winding(regular_certificate(w, 3))
    assert not rep.ok and rep.failing_subset == (1, 2, 3)


def test_nested_certificate(b4):
    w = parse_word("abcba", 4)
    inner = regular_certificate(w, 3)
    cert = WindingCertificate(w, ((1, 2, 3, 4),), 1, (inner,))
    assert verify_winding(cert)
    deeper = WindingCertificate(w, ((1, 2, 3, 4),), 1, (cert,))
    too_deep = WindingCertificate(w, ((1, 2, 3, 4),), 1, (deeper,))
    with pytest.raises(CertificateError):
        verify_winding(too_deep)


def test_json_round_trip():
    cert = regular_certificate(parse_word("abcABC", 4), 3)
    assert WindingCertificate.from_json(cert.to_json()) == cert


def test_k_regular(b4):
    assert k_regular_check(parse_word("abab", 3), 2)
    assert not k_regular_check(parse_word("aA", 2), 2)
    for text in ("abcba", "aCaCbb"):
        two = parse_word(text, 4)
        assert k_regular_check(two, 2) and k_regular_check(two, 3)
        assert k_regular_check(two, 4, b4)
    assert not k_regular_check(parse_word("abCbaC", 4), 2)
    with pytest.raises(CertificateError):
        k_regular_check(two, 4)


def test_k_regular_implies_geodesic(b4):
    import random

    rng = random.Random(12)
    hits = 0
    for _ in range(400):
        w = BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(1, 7))))
        if k_regular_check(w, 3):
            hits += 1
            assert is_geodesic(w, b4)
    assert hits > 20
