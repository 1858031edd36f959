from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import simplex_points, skew_matrices
from volterra.core import (
    Face,
    SimplexPoint,
    SkewMatrix,
    VolterraOperator,
    all_faces,
    apply,
    classify_point,
    embed,
    restrict,
    to_fraction,
    validate,
)
from volterra.errors import (
    DimensionMismatch,
    EntryOutOfRange,
    InvalidFace,
    InvalidPoint,
    NotSkewSymmetric,
    NotSquare,
    ParseError,
)


def test_validate_accepts_skew_grid():
    assert validate([[0, 1], [-1, 0]]) == SkewMatrix(2, (F(1),))


def test_validate_rejects_symmetric_grid():
    with pytest.raises(NotSkewSymmetric) as info:
        validate([[0, 1], [1, 0]])
    assert info.value.pair == (0, 1)


def test_validate_rejects_out_of_range():
    with pytest.raises(EntryOutOfRange):
        validate([[0, 2], [-2, 0]])


def test_validate_rejects_nonsquare_and_diagonal():
    with pytest.raises(NotSquare):
        validate([[0, 1, 2], [-1, 0, 3]])
    with pytest.raises(NotSkewSymmetric):
        validate([[1, 0], [0, 0]])


def test_boundary_entries_allowed():
    a = validate([["0", "-1"], ["1", "0"]])
    assert a[0, 1] == -1 and a[1, 0] == 1


def test_upper_storage_order():
    a = SkewMatrix.from_upper(["1/6", "2/6", "3/6", "4/6", "5/6", "1"])
    assert a.m == 4
    assert [a[i, j] for i, j in a.pairs()] == list(a.upper)
    assert a[1, 3] == F(5, 6) and a[3, 1] == F(-5, 6)
    assert validate(a.full()) == a


def test_to_fraction_forms():
    assert to_fraction("3/4") == F(3, 4)
    assert to_fraction(0.5) == F(1, 2)
    assert to_fraction(0.1) == F(3602879701896397, 36028797018963968)
    assert to_fraction(-1) == F(-1)
    with pytest.raises(ParseError):
        to_fraction("abc")
    with pytest.raises(ParseError):
        to_fraction(True)


def test_apply_hand_computed():
    rps = SkewMatrix.from_upper([1, -1, 1])
    y = apply(VolterraOperator(rps), SimplexPoint((F(1, 2), F(1, 4), F(1, 4))))
    assert y.coords == (F(1, 2), F(3, 16), F(5, 16))
    assert sum(y) == 1


def test_apply_fixes_vertices_and_barycenter_of_rps():
    V = VolterraOperator(SkewMatrix.from_upper([1, -1, 1]))
    for k in range(3):
        e = SimplexPoint.vertex(k, 3)
        assert V(e) == e
    center = SimplexPoint.barycenter(Face.full(3))
    assert V(center) == center


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply(SkewMatrix.from_upper([1]), SimplexPoint((F(1, 3),) * 3))


def test_restrict_examples(a4_two):
    ones = SkewMatrix.from_upper([1] * 6)
    assert restrict(ones, Face((0, 1, 2), 4)).matrix == SkewMatrix.from_upper([1, 1, 1])
    assert restrict(ones, Face((2,), 4)).matrix == SkewMatrix(1, ())
    assert restrict(a4_two, Face.from_labels([1, 2, 4], 4)).matrix.upper == (F(1, 2), F(1, 2), F(1))


def test_restrict_rejects_foreign_face():
    with pytest.raises(InvalidFace):
        restrict(SkewMatrix.from_upper([1]), Face((0,), 3))


def test_classify_point():
    assert classify_point(SimplexPoint.vertex(1, 3)) == Face((1,), 3)
    assert classify_point(SimplexPoint((F(1, 3),) * 3)) == Face((0, 1, 2), 3)
    assert str(classify_point(SimplexPoint((F(1, 2), 0, F(1, 2))))) == "{1,3}"


def test_face_validation():
    with pytest.raises(InvalidFace):
        Face((), 3)
    with pytest.raises(InvalidFace):
        Face((1, 0), 3)
    with pytest.raises(InvalidFace):
        Face((0, 3), 3)
    with pytest.raises(InvalidFace):
        Face.from_labels([1, 1], 3)
    assert Face.from_labels([3, 1], 3).indices == (0, 2)
    assert len(list(all_faces(4))) == 15


def test_point_validation():
    with pytest.raises(InvalidPoint):
        SimplexPoint((F(1, 2), F(1, 3)))
    with pytest.raises(InvalidPoint):
        SimplexPoint((F(3, 2), F(-1, 2)))
    assert not SimplexPoint((0.2, 0.3, 0.5)).exact
    with pytest.raises(InvalidPoint):
        SimplexPoint((0.2, 0.3, 0.6))


@given(st.data())
def test_simplex_preserved_exactly(data):
    a = data.draw(skew_matrices(max_m=5))
    x = SimplexPoint(data.draw(simplex_points(a.m)))
    y = apply(a, x)
    assert sum(y) == 1
    assert all(c >= 0 for c in y)
    assert set(classify_point(y).indices) <= set(classify_point(x).indices)


@given(st.data())
def test_interior_stays_interior_when_entries_below_one(data):
    # with |a_ij| < 1 every factor 1 + (Ax)_k is strictly positive
    a = data.draw(skew_matrices(max_m=5).filter(lambda a: all(abs(v) < 1 for v in a.upper)))
    x = SimplexPoint(data.draw(simplex_points(a.m, interior=True)))
    assert classify_point(apply(a, x)) == classify_point(x)


@given(st.data())
def test_restriction_commutes_with_application(data):
    a = data.draw(skew_matrices(min_m=2, max_m=5))
    face = data.draw(st.sampled_from(list(all_faces(a.m))))
    local = data.draw(simplex_points(len(face)))
    x = SimplexPoint(embed(local, face))
    lhs = apply(restrict(a, face), SimplexPoint(local))
    rhs = apply(a, x)
    assert tuple(rhs[k] for k in face) == lhs.coords


@given(st.data())
def test_double_restriction(data):
    a = data.draw(skew_matrices(min_m=2, max_m=6))
    alpha = data.draw(st.sampled_from(list(all_faces(a.m))))
    beta_local = data.draw(st.sampled_from(list(all_faces(len(alpha)))))
    beta = Face(tuple(alpha.indices[i] for i in beta_local), a.m)
    assert restrict(restrict(a, alpha), beta_local) == restrict(a, beta)
