from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chowlab.matroid import (
    MatroidError,
    closure,
    flats,
    from_bases,
    independent_sets,
    make_boolean,
    make_uniform,
    matroid_from_json,
    parse_matroid_spec,
    rank,
)


def all_subsets(n):
    ground = range(1, n + 1)
    return [tuple(c) for k in range(n + 1) for c in combinations(ground, k)]


def test_boolean_small():
    assert make_boolean(2).bases == ((1, 2),)
    assert len(flats(make_boolean(3))) == 8
    b1 = make_boolean(1)
    assert rank(b1, (1,)) == 1
    assert list(flats(b1)) == [(), (1,)]


def test_uniform_flats():
    u32 = make_uniform(3, 2)
    assert u32.bases == ((1, 2), (1, 3), (2, 3))
    fl = flats(u32)
    assert list(fl) == [(), (1,), (2,), (3,), (1, 2, 3)]
    assert fl.ranks == (0, 1, 1, 1, 2)
    assert len(flats(make_uniform(4, 2))) == 6
    assert make_uniform(4, 4) == make_boolean(4)


def test_from_bases():
    assert from_bases(3, [[1, 2], [1, 3], [2, 3]]) == make_uniform(3, 2)
    with pytest.raises(MatroidError, match="unequal cardinality"):
        from_bases(3, [[1, 2], [3]])
    with pytest.raises(MatroidError, match="loop"):
        from_bases(2, [[1]])
    with pytest.raises(MatroidError, match="exchange"):
        from_bases(4, [[1, 2], [3, 4]])


def test_rank_and_closure():
    assert rank(make_boolean(3), (1, 3)) == 2
    u32 = make_uniform(3, 2)
    assert rank(u32, (1, 2, 3)) == 2
    assert rank(u32, ()) == 0
    assert closure(u32, (1, 2)) == (1, 2, 3)
    for s in all_subsets(4):
        assert closure(make_boolean(4), s) == s


def test_independent_sets():
    assert independent_sets(make_uniform(3, 2)) == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    assert independent_sets(make_boolean(2)) == [(), (1,), (2,), (1, 2)]
    assert len(independent_sets(make_uniform(4, 2))) == 11


MATROIDS = [make_boolean(3), make_uniform(3, 2), make_uniform(4, 2), make_uniform(5, 3), make_uniform(6, 2)]


@pytest.mark.parametrize("m", MATROIDS, ids=str)
def test_closure_operator(m):
    subs = all_subsets(m.n)
    for s in subs:
        c = closure(m, s)
        assert set(s) <= set(c)
        assert closure(m, c) == c
        for t in subs:
            if set(s) <= set(t):
                assert set(c) <= set(closure(m, t))


@pytest.mark.parametrize("m", MATROIDS[:4], ids=str)
def test_rank_submodular(m):
    subs = all_subsets(m.n)
    for a in subs:
        for b in subs:
            u = tuple(sorted(set(a) | set(b)))
            i = tuple(sorted(set(a) & set(b)))
            assert rank(m, a) + rank(m, b) >= rank(m, u) + rank(m, i)


@pytest.mark.parametrize("m", MATROIDS, ids=str)
def test_independent_sets_downward_closed(m):
    ind = set(independent_sets(m))
    for s in ind:
        for k in range(len(s)):
            assert all(c in ind for c in combinations(s, k))
    maximal = {s for s in ind if not any(set(s) < set(t) for t in ind)}
    assert maximal == set(m.bases)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_uniform_flat_count(nr):
    n, r = nr
    fl = flats(make_uniform(n, r))
    # flats of U_{n,r}: every subset of size < r, plus the ground set
    from math import comb

    assert len(fl) == sum(comb(n, k) for k in range(r)) + 1


def test_flat_ranks_graded():
    fl = flats(make_uniform(4, 3))
    for i, j in fl.covers:
        assert fl.ranks[j] == fl.ranks[i] + 1


def test_json_and_family_strings():
    assert matroid_from_json({"family": "uniform", "n": 4, "r": 2}) == make_uniform(4, 2)
    assert matroid_from_json({"n": 2, "bases": [[2, 1]]}) == make_boolean(2)
    assert parse_matroid_spec("boolean:3") == make_boolean(3)
    assert parse_matroid_spec("uniform:3,2") == make_uniform(3, 2)
    for bad in ("boolean", "uniform:3", "cycle:4", "boolean:x"):
        with pytest.raises(MatroidError):
            parse_matroid_spec(bad)
    with pytest.raises(MatroidError):
        make_boolean(0)
