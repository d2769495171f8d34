import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from distinct_squares import (
    analyze,
    build_lpf_plain,
    build_lpf_succinct,
    build_plcp,
    build_suffix_array,
    lz_factor_at,
    lz_factorize,
    prepare_text,
)

LPF_ROTATION = [0, 0, 1, 2, 4, 3, 4, 3, 2, 8, 7, 6, 5, 5, 4, 3, 2, 1, 0]


def both_lpf(raw):
    t = prepare_text(raw)
    sa = build_suffix_array(t)
    plcp = build_plcp(t, sa)
    return t, build_lpf_plain(sa, plcp), build_lpf_succinct(t, sa, plcp)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("ababaaababa", [0, 0, 3, 2, 1, 2, 5, 4, 3, 2, 1, 0]),
        ("abaaabaababaaabaaa", LPF_ROTATION),
        ("", [0]),
    ],
)
def test_lpf_examples(raw, expected):
    t, plain, succinct = both_lpf(raw)
    assert plain == expected
    assert succinct.to_list() == expected
    assert len(succinct.bits) <= 2 * t.n


def test_succinct_access():
    _, _, lpf = both_lpf("ababaaababa")
    assert lpf.access(7) == 5
    assert lpf[1] == 0
    _, _, lpf = both_lpf("abaaabaababaaabaaa")
    assert lpf.access(10) == 8


def test_lz_running_example(running):
    assert running.lz.starts == [1, 2, 3, 6, 8, 12]
    assert running.lz.factors(running.text) == [b"a", b"b", b"aba", b"aa", b"baba", b"\x00"]
    assert lz_factor_at(running.lz, 5) == (8, 4)
    assert lz_factor_at(running.lz, 3) == (3, 3)
    assert lz_factor_at(running.lz, 1) == (1, 1)
    with pytest.raises(IndexError):
        lz_factor_at(running.lz, 7)


def test_lz_lone_sentinel():
    fz = analyze("").lz
    assert fz.starts == [1]
    assert fz.z == 1


def test_lz_boundary_example():
    # frozen from the naive LPF oracle
    assert naive.lz_starts(b"abaabab\x00") == [1, 2, 3, 4, 7, 8]
    assert analyze("abaabab").lz.starts == [1, 2, 3, 4, 7, 8]


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="abc", max_size=60))
def test_lpf_matches_naive(raw):
    t, plain, succinct = both_lpf(raw)
    expected = naive.lpf_array(t.data)
    assert plain == expected
    assert succinct.to_list() == expected
    for j in range(2, t.n + 1):
        assert t.n - j >= expected[j - 1] >= expected[j - 2] - 1
    assert lz_factorize(succinct).starts == naive.lz_starts(t.data)
