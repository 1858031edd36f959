import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings

from oracles import skew_matrices
from volterra.core import Face, SimplexPoint, SkewMatrix, apply, classify_point
from volterra.errors import EvenOrder, NotTransversal
from volterra.exact import nullspace
from volterra.fixedpoints import (
    count_in_face,
    enumerate_fixed_points,
    fixed_points_by_face,
    interior_fixed_point,
    kernel_vector,
    oracle_fixed_points,
    sorted_points,
)
from volterra.pfaffian import is_transversal
from volterra.sampling import random_transversal


def test_kernel_vector_order_three():
    a, b, c = F(1, 2), F(-1, 3), F(3, 4)
    mat = SkewMatrix.from_upper([a, b, c])
    x0 = kernel_vector(mat)
    assert x0 == [-c, b, -a]
    assert mat.matvec(x0) == [0, 0, 0]


def test_kernel_vector_spans_nullspace_order_five():
    mat = random_transversal(5, random.Random(3))
    x0 = kernel_vector(mat)
    (basis,) = nullspace(mat.full())
    ratio = x0[0] / basis[0]
    assert [ratio * v for v in basis] == x0


def test_kernel_vector_needs_odd_order(a4_one):
    with pytest.raises(EvenOrder):
        kernel_vector(a4_one)


def test_interior_fixed_point_examples(rps, transitive3):
    assert interior_fixed_point(rps) == SimplexPoint((F(1, 3),) * 3)
    assert interior_fixed_point(transitive3) is None
    a = SkewMatrix.from_upper(["1/2", "-1/4", "1"])
    x = interior_fixed_point(a)
    assert x is not None and apply(a, x) == x and sum(x) == 1


def test_rps_fixed_points(rps):
    points = sorted_points(enumerate_fixed_points(rps))
    assert [str(p.support) for p in points] == ["{1}", "{2}", "{3}", "{1,2,3}"]
    assert set(points) == oracle_fixed_points(rps)


def test_transitive_has_only_vertices(transitive3):
    points = enumerate_fixed_points(transitive3)
    assert {len(p.support) for p in points} == {1}
    assert len(points) == 3


def test_even_order_has_no_interior_point(a4_one, a4_two):
    for a in (a4_one, a4_two):
        points = enumerate_fixed_points(a)
        assert count_in_face(points, Face.full(4), interior=True) == 0
        assert points == oracle_fixed_points(a)


def test_non_transversal_rejected():
    a = SkewMatrix.from_upper([0, 1, 1])
    with pytest.raises(NotTransversal):
        enumerate_fixed_points(a)
    with pytest.raises(NotTransversal):
        oracle_fixed_points(a)


def test_count_in_face(rps):
    points = enumerate_fixed_points(rps)
    assert count_in_face(points, Face.full(3)) == 4
    assert count_in_face(points, Face((0, 1), 3)) == 2
    assert count_in_face(points, Face((0, 1), 3), interior=True) == 0


@settings(max_examples=60, deadline=None)
@given(skew_matrices(min_m=1, max_m=5, allow_zero=False))
def test_fixed_point_properties(a):
    assume(is_transversal(a))
    points = enumerate_fixed_points(a)
    assert points == oracle_fixed_points(a)
    fixed_points_by_face(points)  # at most one per face interior
    for p in points:
        x = p.point
        assert apply(a, x) == x
        assert len(p.support) % 2 == 1
        assert classify_point(x) == p.support
        ax = a.matvec(list(x))
        assert all(ax[k] == 0 for k in p.support)
    # every vertex is fixed
    assert sum(1 for p in points if len(p.support) == 1) == a.m


def test_order_three_interior_point_sign_rule():
    # interior point exists iff sign a12 = sign a23 = -sign a13
    for s12, s13, s23 in itertools.product((1, -1), repeat=3):
        a = SkewMatrix.from_upper([F(s12, 2), F(s13, 3), F(s23, 5)])
        expected = s12 == s23 == -s13
        assert (interior_fixed_point(a) is not None) == expected
        assert len(enumerate_fixed_points(a)) == (4 if expected else 3)


def test_kernel_vector_order_one():
    assert kernel_vector(SkewMatrix(1, ())) == [1]
