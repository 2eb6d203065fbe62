from __future__ import annotations

import re

import pytest

from geobraid.words import (
    BraidWord,
    SignPattern,
    WordError,
    block_profile,
    classify,
    free_reduce,
    parse_word,
    permutation,
    render_word,
    shadow,
    sign_pattern,
    stats,
    subdiagram,
)
from geobraid.generator import build_w

# the figure's drawing code, row by row; its s_i^{-1} is our sigma_i
FIG1_TIKZ = (
    "s_1^{-1}-s_3^{-1}-s_5^{-1}-s_8-s_{10}-s_{13}^{-1} "
    "s_1^{-1}-s_3^{-1}-s_5^{-1}-s_9-s_{11}^{-1}-s_{14}^{-1} "
    "s_2-s_4-s_8-s_{10}-s_{12}^{-1}-s_{14}^{-1} "
    "s_1^{-1}-s_5^{-1}-s_7^{-1}-s_{10}-s_{13}^{-1} "
    "s_2-s_4-s_8-s_{10}-s_{12}^{-1}-s_{14}^{-1} "
    "s_1^{-1}-s_3^{-1}-s_5^{-1}-s_7^{-1}-s_9-s_{11}^{-1}-s_{13}^{-1} "
    "s_2-s_4-s_7^{-1}-s_{10}-s_{12}^{-1}-s_{14}^{-1}"
)


def _from_tikz(text: str, n: int) -> BraidWord:
    found = re.findall(r"s_\{?(\d+)\}?(\^\{-1\})?", text)
    return BraidWord(n, tuple(int(i) if inv else -int(i) for i, inv in found))


FIG1 = _from_tikz(FIG1_TIKZ, 15)


def _compose(letters, n):
    # transposition oracle: track who sits where
    at = list(range(1, n + 1))
    for x in letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    return {s: p for p, s in enumerate(at, 1)}


def test_parse_examples():
    assert parse_word("aBAB", 3).letters == (1, -2, -1, -2)
    assert parse_word("", 5) == BraidWord(5)
    assert parse_word("1 -3", 4).letters == (1, -3)


@pytest.mark.parametrize("text,n", [("aZ", 3), ("1 x", 3), ("c", 3), ("1 0", 3)])
def test_parse_errors(text, n):
    with pytest.raises(WordError):
        parse_word(text, n)


def test_render_round_trip():
    for text in ["aBAB", "", "abcCBA"]:
        assert render_word(parse_word(text, 4)) == text
    w = BraidWord(30, (1, -29, 3))
    assert parse_word(render_word(w), 30) == w


def test_stats():
    s = stats(parse_word("abbAAbba", 3))
    assert (s.p, s.n, s.exp, s.length) == (6, 2, 4, 8)
    s = stats(BraidWord(3))
    assert (s.p, s.n, s.exp, s.length) == (0, 0, 0, 0)
    s = stats(parse_word("aB", 3))
    assert (s.p, s.n, s.exp) == (1, 1, 0)


def test_fig1_classification():
    assert len(FIG1) == 42
    f = classify(FIG1)
    assert f.homogeneous is not None
    assert f.homogeneous.resolve(1) == (1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1)
    assert f.homogeneous.entries[5] == 0
    assert f.degenerate
    assert not shadow(FIG1).connected


def test_far_apart_pair_is_alternating_and_degenerate():
    f = classify(parse_word("aC", 4))
    assert f.alternating
    assert f.homogeneous == SignPattern((1, 0, -1))
    assert f.degenerate


def test_positive_words():
    f = classify(parse_word("abab", 3))
    assert f.positive and not f.negative
    assert classify(parse_word("aa", 2)).alternating
    assert not classify(parse_word("aba", 3)).alternating


def test_sign_pattern_none_when_mixed():
    assert sign_pattern(parse_word("abA", 3)) is None


def test_permutation():
    assert permutation(parse_word("abbAAbba", 3)).is_identity()
    assert permutation(BraidWord(4)).is_identity()
    for n in range(2, 8):
        w = BraidWord(n, tuple(range(1, n)))
        images = permutation(w).images
        oracle = _compose(w.letters, n)
        assert images == tuple(oracle[s] for s in range(1, n + 1))
        assert images[0] == n


def test_free_reduce():
    assert free_reduce(parse_word("aA", 2)) == BraidWord(2)
    assert free_reduce(parse_word("abBa", 3)) == parse_word("aa", 3)
    w = parse_word("abbAAbba", 3)
    assert free_reduce(w) == w


def test_subdiagram():
    s = parse_word("a", 3)
    assert subdiagram(s, {1, 3}) == BraidWord(2)
    assert subdiagram(s, {1, 2}) == parse_word("a", 2)
    w = build_w(6)
    for r in range(3, 7):
        assert render_word(subdiagram(w, {1, 2, r})) == "abbAAbba"
    with pytest.raises(WordError):
        subdiagram(s, set())


def test_block_profile():
    w = parse_word("abCDef", 7)
    prof = block_profile(w, (1, 1, -1, -1, 1, 1))
    assert prof.blocks == ((1, 2), (3, 4), (5, 6))
    assert prof.counts == (2, 2, 2)
    pos = parse_word("abcabc", 4)
    assert block_profile(pos, (1, 1, 1)).counts == (6,)
    assert block_profile(BraidWord(4), (1, -1, 1)).counts == (0, 0, 0)
    with pytest.raises(WordError):
        block_profile(parse_word("A", 3), (1, 1))


def test_shadow():
    sh = shadow(parse_word("aA", 2))
    assert sh.crossings == (1, 1)
    assert shadow(parse_word("ab", 3)).connected
