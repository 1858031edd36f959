"""Simplex geometry, skew-symmetric matrices and the Volterra operator.

Indices are 0-based throughout the Python API. Anything shown to a user
(``str(face)``, JSON, CLI output) is 1-based.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatch,
    EntryOutOfRange,
    InvalidFace,
    InvalidPoint,
    NotSkewSymmetric,
    NotSquare,
    ParseError,
)

FLOAT_SUM_TOL = 1e-12


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction, ``"p/q"``/decimal string or float to a Fraction.

    Floats are converted exactly from their binary value.
    """
    if isinstance(value, bool):
        raise ParseError(f"boolean is not a matrix entry: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"non-finite entry: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {value!r}") from exc
    raise ParseError(f"unsupported scalar type {type(value).__name__}: {value!r}")


def format_fraction(q: Fraction) -> str:
    """``p/q`` in lowest terms; integers print without a denominator."""
    return str(Fraction(q))


def upper_index(i: int, j: int, m: int) -> int:
    """Position of entry (i, j), i < j, in row-major strict-upper storage."""
    return i * m - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Face:
    """A nonempty index set ``alpha`` of an ``m``-vertex simplex."""

    indices: tuple[int, ...]
    m: int

    def __post_init__(self):
        idx = tuple(self.indices)
        if not idx:
            raise InvalidFace("a face needs at least one vertex")
        if any(not isinstance(i, int) or isinstance(i, bool) for i in idx):
            raise InvalidFace(f"face indices must be integers: {idx!r}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise InvalidFace(f"face indices must be strictly increasing: {idx!r}")
        if idx[0] < 0 or idx[-1] >= self.m:
            raise InvalidFace(f"face {idx!r} out of bounds for m={self.m}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, indices: Iterable[int], m: int) -> "Face":
        """Build from any iterable of 0-based indices (sorted, deduplicated)."""
        return cls(tuple(sorted(set(indices))), m)

    @classmethod
    def from_labels(cls, labels: Iterable[int], m: int) -> "Face":
        """Build from 1-based labels as a user would write them."""
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise InvalidFace(f"repeated labels in {labels!r}")
        return cls.of((k - 1 for k in labels), m)

    @classmethod
    def full(cls, m: int) -> "Face":
        return cls(tuple(range(m)), m)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.indices)

    @property
    def is_proper(self) -> bool:
        return len(self.indices) < self.m

    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.m) if i not in self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    def __str__(self) -> str:
        return "{" + ",".join(str(k) for k in self.labels) + "}"


def all_faces(m: int, sizes: Iterable[int] | None = None) -> Iterator[Face]:
    """Faces of the ``m``-vertex simplex, by increasing size then lexicographically."""
    for k in sizes if sizes is not None else range(1, m + 1):
        for combo in itertools.combinations(range(m), k):
            yield Face(combo, m)


def odd_faces(m: int) -> Iterator[Face]:
    return all_faces(m, range(1, m + 1, 2))


@dataclass(frozen=True)
class SkewMatrix:
    """Skew-symmetric ``m x m`` matrix with entries in [-1, 1].

    Only the strict upper triangle is stored, row-major:
    ``a_01, a_02, ..., a_0(m-1), a_12, ...``.
    """

    m: int
    upper: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DimensionMismatch(f"dimension must be a positive integer, got {self.m!r}")
        values = tuple(to_fraction(v) for v in self.upper)
        expected = self.m * (self.m - 1) // 2
        if len(values) != expected:
            raise DimensionMismatch(f"m={self.m} needs {expected} upper entries, got {len(values)}")
        for pos, v in enumerate(values):
            if abs(v) > 1:
                i, j = self.pairs()[pos]
                raise EntryOutOfRange(f"|a_{{{i + 1}{j + 1}}}| = {abs(v)} exceeds 1")
        object.__setattr__(self, "upper", values)

    @classmethod
    def from_upper(cls, values: Sequence, m: int | None = None) -> "SkewMatrix":
        values = list(values)
        if m is None:
            m = (1 + math.isqrt(1 + 8 * len(values))) // 2
        return cls(m, tuple(values))

    @classmethod
    def zeros(cls, m: int) -> "SkewMatrix":
        return cls(m, (Fraction(0),) * (m * (m - 1) // 2))

    def pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(self.m), 2))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper[upper_index(i, j, self.m)]
        return -self.upper[upper_index(j, i, self.m)]

    def full(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.m)] for i in range(self.m)]

    def submatrix(self, indices: Sequence[int]) -> "SkewMatrix":
        idx = list(indices)
        return SkewMatrix(len(idx), tuple(self[a, b] for a, b in itertools.combinations(idx, 2)))

    def with_entry(self, i: int, j: int, value) -> "SkewMatrix":
        """Copy with a_ij (and hence a_ji) replaced."""
        if i == j:
            raise ValueError("diagonal entries are fixed at zero")
        if i > j:
            i, j, value = j, i, -to_fraction(value)
        upper = list(self.upper)
        upper[upper_index(i, j, self.m)] = value
        return SkewMatrix(self.m, tuple(upper))

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.m:
            raise DimensionMismatch(f"vector of length {len(x)} for m={self.m}")
        return [sum((self[k, i] * x[i] for i in range(self.m) if i != k), start=0 * x[0]) for k in range(self.m)]

    def __str__(self) -> str:
        return "[" + ", ".join(format_fraction(v) for v in self.upper) + "]"


def validate(grid: Sequence[Sequence]) -> SkewMatrix:
    """Check a full square grid and return its upper-triangle form."""
    rows = [list(r) for r in grid]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise NotSquare(f"expected a square grid, got row lengths {[len(r) for r in rows]}")
    vals = [[to_fraction(v) for v in r] for r in rows]
    for i in range(m):
        if vals[i][i] != 0:
            raise NotSkewSymmetric(i, i, f"diagonal entry ({i + 1},{i + 1}) is {vals[i][i]}, not 0")
        for j in range(i + 1, m):
            if vals[i][j] != -vals[j][i]:
                raise NotSkewSymmetric(i, j)
    return SkewMatrix(m, tuple(vals[i][j] for i, j in itertools.combinations(range(m), 2)))


@dataclass(frozen=True)
class SimplexPoint:
    """Point of the simplex. Exact when built from rationals, float otherwise."""

    coords: tuple

    def __post_init__(self):
        raw = tuple(self.coords)
        if not raw:
            raise InvalidPoint("empty point")
        exact = not any(isinstance(c, float) for c in raw)
        if exact:
            coords = tuple(to_fraction(c) for c in raw)
            if sum(coords) != 1:
                raise InvalidPoint(f"coordinates sum to {sum(coords)}, not 1")
        else:
            coords = tuple(float(c) for c in raw)
            if abs(math.fsum(coords) - 1.0) > FLOAT_SUM_TOL:
                raise InvalidPoint(f"coordinates sum to {math.fsum(coords)!r}, not 1")
        if any(c < 0 for c in coords):
            raise InvalidPoint(f"negative coordinate in {coords!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def vertex(cls, k: int, m: int) -> "SimplexPoint":
        return cls(tuple(Fraction(int(i == k)) for i in range(m)))

    @classmethod
    def barycenter(cls, face: Face) -> "SimplexPoint":
        share = Fraction(1, len(face))
        return cls(tuple(share if i in face else Fraction(0) for i in range(face.m)))

    @property
    def exact(self) -> bool:
        return isinstance(self.coords[0], Fraction)

    @property
    def m(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def to_float(self) -> "SimplexPoint":
        return SimplexPoint(tuple(float(c) for c in self.coords))

    def __str__(self) -> str:
        if self.exact:
            return "(" + ",".join(format_fraction(c) for c in self.coords) + ")"
        return "(" + ",".join(repr(c) for c in self.coords) + ")"


def classify_point(x: SimplexPoint) -> Face:
    """The face whose relative interior contains ``x``, i.e. ``supp(x)``."""
    return Face(tuple(k for k, c in enumerate(x) if c != 0), len(x))


support = classify_point


@dataclass(frozen=True)
class VolterraOperator:
    """``V(x)_k = x_k (1 + sum_i a_ki x_i)``."""

    matrix: SkewMatrix

    @property
    def m(self) -> int:
        return self.matrix.m

    def __call__(self, x: SimplexPoint) -> SimplexPoint:
        return apply(self, x)

    def restrict(self, face: Face) -> "VolterraOperator":
        return restrict(self, face)


def _as_operator(V) -> VolterraOperator:
    return V if isinstance(V, VolterraOperator) else VolterraOperator(V)


def apply(V: VolterraOperator | SkewMatrix, x: SimplexPoint) -> SimplexPoint:
    V = _as_operator(V)
    if not isinstance(x, SimplexPoint):
        x = SimplexPoint(tuple(x))
    if len(x) != V.m:
        raise DimensionMismatch(f"point has {len(x)} coordinates, operator has m={V.m}")
    ax = V.matrix.matvec(x.coords)
    return SimplexPoint(tuple(xk * (1 + axk) for xk, axk in zip(x.coords, ax)))


def restrict(V: VolterraOperator | SkewMatrix, face: Face) -> VolterraOperator:
    """Operator on ``Gamma_alpha``: rows and columns outside ``face`` deleted."""
    V = _as_operator(V)
    if face.m != V.m:
        raise InvalidFace(f"face {face} belongs to m={face.m}, operator has m={V.m}")
    return VolterraOperator(V.matrix.submatrix(face.indices))


def embed(local: Sequence, face: Face) -> tuple:
    """Place face-local coordinates back into the ambient ``m`` coordinates."""
    zero = 0 * local[0]
    out = [zero] * face.m
    for value, k in zip(local, face.indices):
        out[k] = value
    return tuple(out)
