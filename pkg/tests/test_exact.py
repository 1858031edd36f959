from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import fractions_in_unit, leibniz_det
from volterra.exact import bareiss_determinant, nullspace, rank, solve


def square(n):
    return st.lists(st.lists(fractions_in_unit(), min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(square))
def test_bareiss_matches_leibniz(rows):
    assert bareiss_determinant(rows) == leibniz_det(rows)


def test_determinant_examples():
    assert bareiss_determinant([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]]) == F(1, 10) - F(1, 12)
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_nullspace_and_rank():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    assert rank(rows) == 1
    basis = nullspace(rows)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in rows)


def test_solve_unique_and_inconsistent():
    assert solve([[F(1), F(1)], [F(1), F(-1)]], [F(1), F(0)]) == [F(1, 2), F(1, 2)]
    assert solve([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)]) is None
    with pytest.raises(ValueError):
        solve([[F(1), F(1)]], [F(1)])
