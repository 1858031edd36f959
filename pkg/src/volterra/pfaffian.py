"""Pfaffians, principal subpfaffians, transversality and sign signatures.

The pfaffian of an even skew matrix is expanded along its last row and
column::

    pf(A) = sum_{i < last} (-1)^i * a_{i,last} * pf(A with i and last deleted)

(0-based ``i``). Principal subpfaffians are memoized by index tuple, so a
full signature costs one expansion per even subset.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .core import Face, SkewMatrix
from .errors import DimensionTooLarge, NotTransversal, OddOrder, OddSubset

# Full signatures enumerate 2^(m-1) subsets; larger inputs are refused.
MAX_SIGNATURE_DIM = 12


class SubpfaffianTable:
    """Memoized principal subpfaffians of one matrix."""

    def __init__(self, matrix: SkewMatrix):
        self.matrix = matrix
        self._memo: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}

    def __getitem__(self, subset: Iterable[int]) -> Fraction:
        key = tuple(subset)
        if len(key) % 2:
            raise OddSubset(f"subset of odd size {len(key)}")
        return self._get(key)

    def _get(self, key: tuple[int, ...]) -> Fraction:
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        last = key[-1]
        a = self.matrix
        total = Fraction(0)
        for pos in range(len(key) - 1):
            entry = a[key[pos], last]
            if entry:
                rest = key[:pos] + key[pos + 1:-1]
                term = entry * self._get(rest)
                total += -term if pos % 2 else term
        self._memo[key] = total
        return total


def even_subsets(indices: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Even subsets of size >= 2, by size then lexicographically."""
    idx = tuple(indices)
    for k in range(2, len(idx) + 1, 2):
        yield from itertools.combinations(idx, k)


def pfaffian(matrix: SkewMatrix) -> Fraction:
    if matrix.m % 2:
        raise OddOrder(f"pfaffian needs even order, got m={matrix.m}")
    return SubpfaffianTable(matrix)[range(matrix.m)]


def subpfaffian(matrix: SkewMatrix, subset: Face | Iterable[int]) -> Fraction:
    """Pfaffian of the principal submatrix on ``subset`` (0-based indices)."""
    key = tuple(subset.indices) if isinstance(subset, Face) else tuple(sorted(subset))
    if len(key) % 2 or not key:
        raise OddSubset(f"subpfaffian needs a nonempty even subset, got {len(key)} indices")
    return SubpfaffianTable(matrix)[key]


def _check_cap(m: int, max_dim: int | None):
    cap = MAX_SIGNATURE_DIM if max_dim is None else max_dim
    if m > cap:
        raise DimensionTooLarge(f"m={m} exceeds the full-signature cap of {cap}")


def first_vanishing(matrix: SkewMatrix, table: SubpfaffianTable | None = None,
                    max_dim: int | None = None) -> tuple[int, ...] | None:
    """Smallest even subset whose subpfaffian is zero, or None."""
    _check_cap(matrix.m, max_dim)
    table = table or SubpfaffianTable(matrix)
    for s in even_subsets(range(matrix.m)):
        if table[s] == 0:
            return s
    return None


def is_transversal(matrix: SkewMatrix, max_dim: int | None = None) -> bool:
    return first_vanishing(matrix, max_dim=max_dim) is None


def require_transversal(matrix: SkewMatrix, table: SubpfaffianTable | None = None) -> SubpfaffianTable:
    table = table or SubpfaffianTable(matrix)
    bad = first_vanishing(matrix, table)
    if bad is not None:
        labels = ",".join(str(i + 1) for i in bad)
        raise NotTransversal(f"subpfaffian on {{{labels}}} vanishes")
    return table


@dataclass(frozen=True)
class Signature:
    """Signs of all even principal subpfaffians of a transversal matrix."""

    m: int
    signs: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        object.__setattr__(self, "signs", dict(sorted(self.signs.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self.m == other.m and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.m, tuple(self.signs.items())))

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, subset) -> int:
        return self.signs[tuple(subset)]

    @property
    def entry_signs(self) -> tuple[int, ...]:
        """Signs of a_ij, i < j, in upper-triangle order."""
        return tuple(self.signs[p] for p in itertools.combinations(range(self.m), 2))

    def restrict(self, face: Face) -> "Signature":
        """Signature of the restricted matrix, relabelled to the face."""
        pos = {k: n for n, k in enumerate(face.indices)}
        return Signature(len(face), {
            tuple(pos[k] for k in s): sign
            for s, sign in self.signs.items() if all(k in pos for k in s)
        })

    def differences(self, other: "Signature") -> list[tuple[int, ...]]:
        return [s for s in self.signs if self.signs[s] != other.signs.get(s)]

    def lines(self) -> list[str]:
        return ["{" + ",".join(str(k + 1) for k in s) + "}: " + ("+" if v > 0 else "-")
                for s, v in self.signs.items()]


def expected_signature_size(m: int) -> int:
    return 2 ** (m - 1) - 1 if m >= 1 else 0


def signature(matrix: SkewMatrix, table: SubpfaffianTable | None = None,
              max_dim: int | None = None) -> Signature:
    _check_cap(matrix.m, max_dim)
    table = table or SubpfaffianTable(matrix)
    signs = {}
    for s in even_subsets(range(matrix.m)):
        value = table[s]
        if value == 0:
            labels = ",".join(str(i + 1) for i in s)
            raise NotTransversal(f"subpfaffian on {{{labels}}} vanishes")
        signs[s] = 1 if value > 0 else -1
    return Signature(matrix.m, signs)
