import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from distinct_squares import (
    build_lce,
    build_lce_backward,
    build_plcp,
    build_suffix_array,
    lce_backward,
    lce_forward,
    lcp_access,
    lcp_values,
    prepare_text,
)

texts = st.text(alphabet="abc", max_size=60)


def indexes(raw):
    t = prepare_text(raw)
    sa = build_suffix_array(t)
    return t, sa, build_plcp(t, sa)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("ababaaababa", [12, 11, 5, 6, 9, 3, 7, 1, 10, 4, 8, 2]),
        ("", [1]),
        ("abaabab", [8, 3, 6, 1, 4, 7, 2, 5]),
    ],
)
def test_suffix_array_examples(raw, expected):
    sa = build_suffix_array(prepare_text(raw))
    assert sa.to_list() == expected
    assert [sa.isa[s] for s in expected] == list(range(1, len(expected) + 1))


def test_running_example_plcp_and_lcp():
    t, sa, plcp = indexes("ababaaababa")
    assert plcp.decode().tolist() == [5, 4, 3, 2, 1, 2, 3, 2, 1, 0, 0, 0]
    assert [lcp_access(plcp, sa, i) for i in range(1, 13)] == [0, 0, 1, 2, 1, 3, 3, 5, 0, 2, 2, 4]
    assert lcp_access(plcp, sa, 8) == 5
    assert lcp_access(plcp, sa, 12) == 4
    assert len(plcp.bits) == 2 * t.n


def test_single_sentinel_plcp():
    _, sa, plcp = indexes("")
    assert plcp.decode().tolist() == [0]
    assert lcp_access(plcp, sa, 1) == 0


def test_lcp_access_rejects_bad_rank():
    _, sa, plcp = indexes("ab")
    with pytest.raises(IndexError):
        lcp_access(plcp, sa, 0)
    with pytest.raises(IndexError):
        lcp_access(plcp, sa, 4)


def test_forward_lce_examples():
    idx = build_lce(prepare_text("ababaaababa"))
    assert lce_forward(idx, 7, 1) == 5
    assert lce_forward(idx, 1, 3) == 3
    for s in range(1, 13):
        assert lce_forward(idx, s, s) == 12 - s + 1
    with pytest.raises(IndexError):
        lce_forward(idx, 0, 3)


def test_backward_lce_examples():
    idx = build_lce_backward(prepare_text("ababaaababa"))
    assert lce_backward(idx, 1, 3) == 1
    assert lce_backward(idx, 5, 4) == 0
    assert lce_backward(idx, 0, 7) == 0
    assert lce_backward(idx, 7, 0) == 0
    with pytest.raises(IndexError):
        lce_backward(idx, 12, 1)


@settings(max_examples=150, deadline=None)
@given(texts)
def test_arrays_match_naive(raw):
    t, sa, plcp = indexes(raw)
    assert sa.to_list() == naive.suffix_array(t.data)
    assert plcp.decode().tolist() == naive.plcp_array(t.data)
    assert lcp_values(plcp, sa).tolist() == naive.lcp_array(t.data)
    assert len(plcp.bits) == 2 * t.n


@settings(max_examples=100, deadline=None)
@given(texts, st.data())
def test_lce_matches_naive(raw, data):
    t = prepare_text(raw)
    fwd = build_lce(t)
    bwd = build_lce_backward(t)
    for _ in range(15):
        s = data.draw(st.integers(1, t.n))
        u = data.draw(st.integers(1, t.n))
        assert fwd.lce(s, u) == naive.common_prefix(t.data, s, u)
        s0 = data.draw(st.integers(0, t.n - 1))
        u0 = data.draw(st.integers(0, t.n - 1))
        assert bwd.lcs(s0, u0) == naive.common_suffix(t.data, s0, u0)
