"""Fixed points of transversal Volterra operators.

Two independent routes:

* :func:`enumerate_fixed_points` uses, on every odd face, the kernel vector
  built from the complementary principal subpfaffians.
* :func:`oracle_fixed_points` solves ``A_alpha x = 0, sum(x) = 1`` on every
  face by fraction-free elimination and checks transversality through
  principal minors. It never computes a pfaffian.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Face, SimplexPoint, SkewMatrix, VolterraOperator, all_faces, embed, odd_faces
from .errors import EvenOrder, InvariantViolation, NotTransversal
from .exact import bareiss_determinant, solve
from .pfaffian import SubpfaffianTable, require_transversal


@dataclass(frozen=True)
class FixedPoint:
    support: Face
    point: SimplexPoint

    def __str__(self) -> str:
        return f"support={self.support} point={self.point}"


def sorted_points(points) -> list[FixedPoint]:
    """Deterministic order: by support size, then support labels."""
    return sorted(points, key=lambda p: (len(p.support), p.support.indices))


def _matrix_of(V) -> SkewMatrix:
    return V.matrix if isinstance(V, VolterraOperator) else V


def _kernel_on(table: SubpfaffianTable, face: tuple[int, ...]) -> list[Fraction]:
    # component n (1-based) is (-1)^n * gp(face without its n-th index)
    return [
        (-1 if n % 2 == 0 else 1) * table[face[:n] + face[n + 1:]]
        for n in range(len(face))
    ]


def _normalized_if_positive(x0: list[Fraction]) -> list[Fraction] | None:
    if all(c > 0 for c in x0) or all(c < 0 for c in x0):
        total = sum(x0)
        return [c / total for c in x0]
    return None


def kernel_vector(matrix: SkewMatrix) -> list[Fraction]:
    """Spanning vector of ``ker A`` for odd transversal ``A``."""
    if matrix.m % 2 == 0:
        raise EvenOrder(f"kernel vector needs odd order, got m={matrix.m}")
    table = require_transversal(matrix)
    if matrix.m == 1:
        return [Fraction(1)]  # any nonzero scalar spans; pick the positive one
    return _kernel_on(table, tuple(range(matrix.m)))


def interior_fixed_point(matrix: SkewMatrix) -> SimplexPoint | None:
    """The fixed point in the open simplex, if there is one."""
    table = require_transversal(matrix)
    if matrix.m % 2 == 0:
        return None
    x = _normalized_if_positive(_kernel_on(table, tuple(range(matrix.m))))
    return None if x is None else SimplexPoint(tuple(x))


def enumerate_fixed_points(V: VolterraOperator | SkewMatrix) -> set[FixedPoint]:
    matrix = _matrix_of(V)
    table = require_transversal(matrix)
    found = set()
    for face in odd_faces(matrix.m):
        x = _normalized_if_positive(_kernel_on(table, face.indices))
        if x is not None:
            found.add(FixedPoint(face, SimplexPoint(embed(x, face))))
    return found


def transversal_by_minors(matrix: SkewMatrix) -> bool:
    """All even principal minors nonzero, via determinants."""
    for face in all_faces(matrix.m, range(2, matrix.m + 1, 2)):
        if bareiss_determinant(matrix.submatrix(face.indices).full()) == 0:
            return False
    return True


def oracle_fixed_points(V: VolterraOperator | SkewMatrix) -> set[FixedPoint]:
    """Fixed points from per-face exact linear solves.

    Every face is examined, including even ones, which must contribute
    nothing for a transversal operator.
    """
    matrix = _matrix_of(V)
    if not transversal_by_minors(matrix):
        raise NotTransversal("an even principal minor vanishes")
    found = set()
    for face in all_faces(matrix.m):
        sub = matrix.submatrix(face.indices).full()
        system = sub + [[Fraction(1)] * len(face)]
        rhs = [Fraction(0)] * len(face) + [Fraction(1)]
        try:
            x = solve(system, rhs)
        except ValueError as exc:
            raise InvariantViolation(f"kernel on face {face} is not one-dimensional") from exc
        if x is not None and all(c > 0 for c in x):
            found.add(FixedPoint(face, SimplexPoint(embed(x, face))))
    return found


def fixed_points_by_face(points: set[FixedPoint]) -> dict[Face, FixedPoint]:
    out: dict[Face, FixedPoint] = {}
    for p in points:
        if p.support in out:
            raise InvariantViolation(f"two fixed points in the interior of face {p.support}")
        out[p.support] = p
    return out


def count_in_face(points: set[FixedPoint], face: Face, interior: bool = False) -> int:
    """Fixed points in ``Gamma_face`` (or only its relative interior)."""
    members = set(face.indices)
    if interior:
        return sum(1 for p in points if set(p.support.indices) == members)
    return sum(1 for p in points if set(p.support.indices) <= members)
