from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from chowlab.linalg import EchelonBasis, rank

matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=0, max_size=7)
)


def as_rows(mat):
    return [{j: v for j, v in enumerate(row) if v} for row in mat]


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_sympy(mat):
    expected = sympy.Matrix(mat).rank() if mat else 0
    assert rank(as_rows(mat)) == expected


def test_dependent_rows_rejected():
    b = EchelonBasis()
    assert b.add({0: 2, 3: 4})
    assert b.add({3: 1})
    assert not b.add({0: 1})
    assert not b.add({})
    assert len(b) == 2
    assert b.reduce({0: Fraction(1, 3), 3: 5}) == {}
