import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from chowlab.codes import (
    INF,
    Code,
    CodeError,
    ExtendedCode,
    act_code,
    code_from_json,
    code_index,
    code_orbits,
    code_to_json,
    content_partition,
    enumerate_codes,
    enumerate_extended_codes,
    format_code,
    graded_counts,
    multinomial,
    parse_code,
)
from chowlab.symfunc import binomial_eulerian, eulerian

C3_TABLE = ["000", r"01\hat{1}", r"10\hat{1}", r"1\hat{1}0", r"1\hat{1}1", r"11\hat{1}"]


def latex_set(codes):
    return {format_code(c, "latex") for c in codes}


def test_c3_table():
    by_index = enumerate_codes(3)
    assert graded_counts(by_index) == [1, 4, 1]
    assert [format_code(c, "latex") for cs in by_index.values() for c in cs] == C3_TABLE


def test_extended_c3_listing():
    by_index = enumerate_extended_codes(3)
    assert graded_counts(by_index) == [1, 7, 7, 1]
    assert latex_set(by_index[-1]) == {r"\infty\infty\infty"}
    assert latex_set(by_index[0]) == {
        r"0\infty\infty", r"\infty0\infty", r"\infty\infty0", r"\infty00", r"0\infty0", r"00\infty", "000"}
    assert latex_set(by_index[1]) == {
        r"1\hat{1}\infty", r"1\infty\hat{1}", r"\infty1\hat{1}", r"01\hat{1}", r"10\hat{1}", r"1\hat{1}0", r"1\hat{1}1"}
    assert latex_set(by_index[2]) == {r"11\hat{1}"}


def test_small_enumerations():
    assert graded_counts(enumerate_codes(1)) == [1]
    assert graded_counts(enumerate_codes(4)) == [1, 11, 11, 1]
    assert graded_counts(enumerate_extended_codes(1)) == [1, 1]
    assert enumerate_extended_codes(1)[-1] == [ExtendedCode((INF,))]
    e2 = enumerate_extended_codes(2)
    assert graded_counts(e2) == [1, 3, 1]
    assert latex_set(e2[1]) == {r"1\hat{1}"}


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_are_eulerian(n):
    assert graded_counts(enumerate_codes(n)) == eulerian(n)
    assert graded_counts(enumerate_extended_codes(n)) == binomial_eulerian(n)


def test_index_examples():
    c = Code((1, 1, 3, 2, 0, 2, 3, 1), (2, 1, 1))
    assert code_index(c) == 4
    assert code_index(Code((0, 0, 0))) == 0
    assert code_index(ExtendedCode((INF, INF, INF))) == -1
    # the same example displayed with a trailing 2
    d = parse_code("1 1 3 2 0 2* 3* 1* 2")
    assert d.f == (2, 1, 1) and d.index == 4
    assert format_code(d, "latex") == r"11320\hat{2}\hat{3}\hat{1}2"


@pytest.mark.parametrize(
    "alpha,f",
    [((1, 0), (1,)), ((2, 2), (1,)), ((1, 1), (0,)), ((1, 1), (2,)), ((1, 1, 2, 2), (1,)), ((INF, 0), ())],
)
def test_invalid_codes(alpha, f):
    with pytest.raises(CodeError):
        Code(alpha, f)


def test_extended_letters_optional():
    ExtendedCode((1, 1, INF), (1,))
    ExtendedCode((0, INF, INF))
    with pytest.raises(CodeError):
        ExtendedCode((1, INF), (1,))


def test_act_code_examples():
    c = parse_code("011*")
    assert act_code((2, 1, 3), c) == parse_code("101*")
    assert act_code((1, 2, 3), c) == c
    inf3 = ExtendedCode((INF,) * 3)
    assert act_code((3, 2, 1), inf3) == inf3
    with pytest.raises(CodeError):
        act_code((1, 1, 2), c)


def test_orbit_examples():
    orbits = code_orbits(enumerate_codes(3)[1])
    assert sorted((o.size, o.content) for o in orbits) == [(1, (3,)), (3, (2, 1))]
    (single,) = code_orbits([Code((0, 0, 0))])
    assert (single.size, single.content) == (1, (3,))
    ext = code_orbits(enumerate_extended_codes(3)[0])
    assert sorted((o.size, o.content) for o in ext) == [(1, (3,)), (3, (2, 1)), (3, (2, 1))]


@pytest.mark.parametrize("n", range(1, 6))
def test_orbits_are_young_cosets(n):
    perms = list(permutations(range(1, n + 1)))
    for by_index in (enumerate_codes(n), enumerate_extended_codes(n)):
        for cs in by_index.values():
            for o in code_orbits(cs):
                orbit = {act_code(s, o.representative) for s in perms}
                assert len(orbit) == o.size == multinomial(o.content)
                assert all(x.index == o.representative.index for x in orbit)


def test_extended_forgetful_map():
    for j, cs in enumerate_extended_codes(4).items():
        for c in cs:
            if j == -1:
                assert all(x == INF for x in c.alpha)
                continue
            plain = Code(tuple(0 if x == INF else x for x in c.alpha), c.f)
            assert plain.index == c.index


codes5 = [c for cs in enumerate_extended_codes(5).values() for c in cs]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(codes5), st.sampled_from(["compact", "text"]))
def test_text_round_trip(c, style):
    assert parse_code(format_code(c, style), extended=True) == c
    assert code_from_json(code_to_json(c), extended=True) == c


def test_json_shape():
    c = parse_code("0 1 inf 0 2 2 1* inf 2*")
    assert code_to_json(c) == {"alpha": [0, 1, "inf", 0, 2, 2, 1, "inf", 2], "f": {"1": 1, "2": 2}}
    assert format_code(c, "compact") == "01z0221*z2*"
    big = Code(tuple([i for i in range(1, 11) for _ in (0, 1)]), (1,) * 10)
    assert "(10)" in format_code(big)
    assert parse_code(format_code(big)) == big


def test_content_partition():
    assert content_partition(parse_code("0 1 inf 0 2 2 1* inf 2*")) == (3, 2, 2, 2)
