import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from oracles import leibniz_det, pfaffian_by_matchings, skew_matrices
from volterra.core import Face, SkewMatrix, restrict
from volterra.errors import DimensionTooLarge, NotTransversal, OddOrder, OddSubset
from volterra.exact import bareiss_determinant
from volterra.pfaffian import (
    MAX_SIGNATURE_DIM,
    even_subsets,
    expected_signature_size,
    is_transversal,
    pfaffian,
    signature,
    subpfaffian,
)
from volterra.sampling import random_transversal


def test_closed_forms():
    assert pfaffian(SkewMatrix.from_upper(["-3/7"])) == F(-3, 7)
    a = SkewMatrix.from_upper(["1/2", "1/3", "1/4", "1/5", "1/6", "1/7"])
    assert pfaffian(a) == F(1, 2) * F(1, 7) - F(1, 3) * F(1, 6) + F(1, 4) * F(1, 5)


def test_worked_examples(a4_one, a4_two):
    assert pfaffian(a4_one) == 1
    assert pfaffian(a4_two) == F(-1, 2)


def test_vanishing_example_is_not_transversal():
    a = SkewMatrix.from_upper(["1/2", 1, "1/2", "1/2", "1/2", "1/2"])
    assert pfaffian(a) == 0
    assert not is_transversal(a)
    with pytest.raises(NotTransversal):
        signature(a)


@settings(max_examples=80)
@given(skew_matrices(min_m=2, max_m=6))
def test_pfaffian_matches_matching_expansion(a):
    if a.m % 2:
        with pytest.raises(OddOrder):
            pfaffian(a)
    else:
        assert pfaffian(a) == pfaffian_by_matchings(a)


@settings(max_examples=40)
@given(skew_matrices(min_m=2, max_m=5))
def test_square_is_determinant(a):
    if a.m % 2 == 0:
        assert pfaffian(a) ** 2 == leibniz_det(a.full())
    for s in even_subsets(range(a.m)):
        assert subpfaffian(a, s) ** 2 == bareiss_determinant(a.submatrix(s).full())


def test_subpfaffian_is_pfaffian_of_submatrix(a4_two):
    face = Face((0, 2), 4)
    assert subpfaffian(a4_two, face) == pfaffian(restrict(a4_two, face).matrix) == 1
    with pytest.raises(OddSubset):
        subpfaffian(a4_two, (0, 1, 2))


def test_signature_size_and_lines(a4_one):
    assert [expected_signature_size(m) for m in (1, 2, 3, 4, 5)] == [0, 1, 3, 7, 15]
    sig = signature(a4_one)
    assert len(sig) == 7
    assert sig.lines()[0] == "{1,2}: +"
    assert sig.lines()[-1] == "{1,2,3,4}: +"


def test_signature_distinguishes_worked_examples(a4_one, a4_two):
    s1, s2 = signature(a4_one), signature(a4_two)
    assert s1.entry_signs == s2.entry_signs
    assert s1.differences(s2) == [(0, 1, 2, 3)]


def test_signature_restricts_like_the_matrix():
    rng = random.Random(7)
    for m in (3, 4, 5):
        a = random_transversal(m, rng)
        sig = signature(a)
        assert len(sig) == expected_signature_size(m)
        for size in range(1, m + 1):
            for idx in itertools.combinations(range(m), size):
                face = Face(idx, m)
                assert sig.restrict(face) == signature(restrict(a, face).matrix)


def test_signature_dimension_cap():
    a = SkewMatrix.zeros(MAX_SIGNATURE_DIM + 1)
    with pytest.raises(DimensionTooLarge):
        signature(a)
