"""Homotopy of transversal Volterra operators.

Two transversal operators are homotopic exactly when every even principal
subpfaffian has the same sign for both (proved for m <= 4; for larger m
the decision is reported with ``criterion="signature"``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .core import Face, SkewMatrix, restrict
from .errors import (
    DimensionMismatch,
    FaceTooLarge,
    NotHomotopic,
    NotTransversal,
    UnsupportedDimension,
    WitnessSearchFailed,
)
from .fixedpoints import enumerate_fixed_points
from .pfaffian import Signature, is_transversal, require_transversal, signature

PROVEN_MAX_DIM = 4


@dataclass(frozen=True)
class HomotopyDecision:
    homotopic: bool
    criterion: str  # "proven" (m <= 4) or "signature"
    differing: tuple[tuple[int, ...], ...] = ()


def homotopy_decision(a0: SkewMatrix, a1: SkewMatrix) -> HomotopyDecision:
    if a0.m != a1.m:
        raise DimensionMismatch(f"cannot compare m={a0.m} with m={a1.m}")
    s0, s1 = signature(a0), signature(a1)
    diff = tuple(s0.differences(s1))
    return HomotopyDecision(not diff, "proven" if a0.m <= PROVEN_MAX_DIM else "signature", diff)


def are_homotopic(a0: SkewMatrix, a1: SkewMatrix) -> bool:
    return homotopy_decision(a0, a1).homotopic


@dataclass(frozen=True)
class HomotopyPath:
    """A continuous family ``lam -> A(lam)`` on [0, 1].

    ``kind="linear"`` interpolates every entry. ``kind="product"`` (m = 4)
    interpolates ``a_12, a_13, a_14`` linearly and each remaining entry as
    the ratio that makes ``a_12 a_34``, ``a_14 a_23`` and ``a_13 a_24``
    linear in ``lam``, so the 4x4 pfaffian is linear along the path.
    """

    start: SkewMatrix
    end: SkewMatrix
    kind: str = "linear"

    def __post_init__(self):
        if self.start.m != self.end.m:
            raise DimensionMismatch("path endpoints differ in dimension")
        if self.kind not in ("linear", "product"):
            raise ValueError(f"unknown path kind {self.kind!r}")
        if self.kind == "product" and self.start.m != 4:
            raise UnsupportedDimension("product interpolation is defined for m = 4 only")

    @property
    def m(self) -> int:
        return self.start.m

    @property
    def endpoints(self) -> tuple[SkewMatrix, SkewMatrix]:
        return self.start, self.end

    def __call__(self, lam) -> SkewMatrix:
        return self.evaluate(lam)

    def evaluate(self, lam) -> SkewMatrix:
        lam = Fraction(lam)
        if not 0 <= lam <= 1:
            raise ValueError(f"lambda={lam} outside [0, 1]")
        mix = [(1 - lam) * u + lam * v for u, v in zip(self.start.upper, self.end.upper)]
        if self.kind == "linear":
            return SkewMatrix(self.m, tuple(mix))
        a, b = self.start, self.end

        def ratio(num: tuple[int, int], den: tuple[int, int]) -> Fraction:
            top = (1 - lam) * a[den] * a[num] + lam * b[den] * b[num]
            return top / ((1 - lam) * a[den] + lam * b[den])

        return SkewMatrix(4, (
            mix[0], mix[1], mix[2],
            ratio((1, 2), (0, 3)),
            ratio((1, 3), (0, 2)),
            ratio((2, 3), (0, 1)),
        ))

    def samples(self, count: int) -> Iterator[tuple[Fraction, SkewMatrix]]:
        for k in range(count):
            lam = Fraction(k, count - 1) if count > 1 else Fraction(0)
            yield lam, self.evaluate(lam)


def linear_path(a0: SkewMatrix, a1: SkewMatrix) -> HomotopyPath:
    """Straight segment between any two matrices; no homotopy claimed."""
    return HomotopyPath(a0, a1, "linear")


def homotopy_path(a0: SkewMatrix, a1: SkewMatrix) -> HomotopyPath:
    if a0.m != a1.m:
        raise DimensionMismatch(f"cannot join m={a0.m} with m={a1.m}")
    if a0.m > PROVEN_MAX_DIM:
        raise UnsupportedDimension(f"explicit paths exist for m <= {PROVEN_MAX_DIM}, got m={a0.m}")
    decision = homotopy_decision(a0, a1)
    if not decision.homotopic:
        labels = ["{" + ",".join(str(i + 1) for i in s) + "}" for s in decision.differing]
        raise NotHomotopic("signs differ on " + ", ".join(labels))
    return HomotopyPath(a0, a1, "product" if a0.m == 4 else "linear")


@dataclass
class PathReport:
    passed: bool
    samples: int
    fix_count: int | None = None
    first_failure: Fraction | None = None
    reason: str = ""
    checked: list[Fraction] = field(default_factory=list)


def validate_path(path: HomotopyPath, samples: int) -> PathReport:
    """Sample at ``lam = k/(samples-1)``: transversal, constant signature, constant |Fix|."""
    if samples < 1:
        raise ValueError("samples must be positive")
    report = PathReport(passed=True, samples=samples)
    ref_sig: Signature | None = None
    for lam, a in path.samples(samples):
        report.checked.append(lam)
        try:
            sig = signature(a)
        except NotTransversal as exc:
            return _fail(report, lam, f"not transversal: {exc}")
        count = len(enumerate_fixed_points(a))
        if ref_sig is None:
            ref_sig, report.fix_count = sig, count
            if path.evaluate(0) != path.start or path.evaluate(1) != path.end:
                return _fail(report, lam, "path does not start and end at its endpoints")
            continue
        if sig != ref_sig:
            labels = ["{" + ",".join(str(i + 1) for i in s) + "}" for s in sig.differences(ref_sig)]
            return _fail(report, lam, "signature changed on " + ", ".join(labels))
        if count != report.fix_count:
            return _fail(report, lam, f"|Fix| changed from {report.fix_count} to {count}")
    return report


def _fail(report: PathReport, lam: Fraction, reason: str) -> PathReport:
    report.passed = False
    report.first_failure = lam
    report.reason = reason
    return report


# -- class counting ---------------------------------------------------------

# For m = 4 the pfaffian is t1 + t2 + t3 with
#   t1 = a12 a34, t2 = a14 a23, t3 = -a13 a24
# given as (sign factor, upper positions of the two entries).
_PF4_TERMS = ((1, (0, 5)), (1, (2, 3)), (-1, (1, 4)))
_SMALL = Fraction(1, 8)


def _term_signs(pattern: tuple[int, ...]) -> list[int]:
    return [c * pattern[p] * pattern[q] for c, (p, q) in _PF4_TERMS]


def is_forced(pattern: tuple[int, ...]) -> bool:
    """True when the entry signs alone fix the sign of the 4x4 pfaffian."""
    return len(set(_term_signs(pattern))) == 1


def entry_patterns(m: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=m * (m - 1) // 2)


def forced_pattern_count(m: int = 4) -> int:
    if m != 4:
        raise UnsupportedDimension("forced patterns are defined for m = 4")
    return sum(1 for p in entry_patterns(4) if is_forced(p))


def class_witnesses(m: int) -> list[SkewMatrix]:
    """One transversal matrix per homotopy class, m in {2, 3, 4}."""
    if m not in (2, 3, 4):
        raise UnsupportedDimension(f"class counting is implemented for m in {{2,3,4}}, got {m}")
    out = []
    for pattern in entry_patterns(m):
        if m < 4 or is_forced(pattern):
            out.append(SkewMatrix(m, tuple(Fraction(s) for s in pattern)))
            continue
        # free pattern: one witness per pfaffian sign, dominated by a term of that sign
        signs = _term_signs(pattern)
        for wanted in (1, -1):
            dominant = _PF4_TERMS[signs.index(wanted)][1]
            out.append(SkewMatrix(4, tuple(
                Fraction(s) if pos in dominant else s * _SMALL for pos, s in enumerate(pattern)
            )))
    return out


def count_classes(m: int) -> int:
    witnesses = class_witnesses(m)
    signatures = {signature(w) for w in witnesses}
    if len(signatures) != len(witnesses):
        raise WitnessSearchFailed("two witnesses share a signature")
    return len(signatures)


# -- extensions from a face -------------------------------------------------

def _magnitudes() -> Iterator[Fraction]:
    """1/2, 1/3, 2/3, 1/5, 2/5, ...: proper fractions with prime denominators."""
    p = 2
    while True:
        if all(p % d for d in range(2, int(p ** 0.5) + 1)):
            for k in range(1, p):
                yield Fraction(k, p)
        p += 1


MAX_PERTURBATIONS = 500


def _embed_face(a_face: SkewMatrix, face: Face) -> dict[tuple[int, int], Fraction]:
    return {(face.indices[i], face.indices[j]): a_face[i, j] for i, j in a_face.pairs()}


def _search_entry(upper: list[Fraction], pos: int, sign: int, m: int) -> list[Fraction]:
    """Give entry ``pos`` the sign ``sign`` and a magnitude keeping all subpfaffians nonzero."""
    for n, mag in enumerate(_magnitudes()):
        if n >= MAX_PERTURBATIONS:
            break
        trial = list(upper)
        trial[pos] = sign * mag
        if is_transversal(SkewMatrix(m, tuple(trial))):
            return trial
    raise WitnessSearchFailed(f"no admissible value for upper entry {pos} after {MAX_PERTURBATIONS} tries")


def _base_extension(a_face: SkewMatrix, face: Face, off: list[int]) -> list[Fraction]:
    """Fill off-face entries with positive magnitudes; shift the sequence until transversal."""
    fixed = _embed_face(a_face, face)
    pairs = list(itertools.combinations(range(face.m), 2))
    for shift in range(MAX_PERTURBATIONS):
        mags = itertools.islice(_magnitudes(), shift, None)
        upper = [fixed[pq] if pq in fixed else next(mags) for pq in pairs]
        if is_transversal(SkewMatrix(face.m, tuple(upper))):
            return upper
    raise WitnessSearchFailed("could not make the base extension transversal")


def extensions(a_face: SkewMatrix, m: int, count: int = 2, face: Face | None = None) -> list[SkewMatrix]:
    """Pairwise non-homotopic transversal extensions of ``a_face`` to ``m`` vertices.

    ``face`` says where the face operator sits (default: the first
    ``a_face.m`` vertices). Each extension after the first flips the signs
    of a different set of off-face entries, then re-chooses only those
    magnitudes, in a fixed order, until every subpfaffian is nonzero.
    """
    face = face or Face(tuple(range(a_face.m)), m)
    if face.m != m or len(face) != a_face.m:
        raise DimensionMismatch(f"face {face} does not fit a {a_face.m}-vertex operator in m={m}")
    if len(face) >= m:
        raise FaceTooLarge(f"face {face} is the whole simplex; nothing to extend")
    if count < 2:
        raise ValueError("count must be at least 2")
    require_transversal(a_face)
    pairs = list(itertools.combinations(range(m), 2))
    off = [n for n, (i, j) in enumerate(pairs) if not (i in face and j in face)]
    base = _base_extension(a_face, face, off)

    results = [SkewMatrix(m, tuple(base))]
    for variant in range(1, min(count, 2 ** len(off))):
        upper = list(base)
        for bit, pos in enumerate(off):
            if variant >> bit & 1:
                upper = _search_entry(upper, pos, -1 if base[pos] > 0 else 1, m)
        results.append(SkewMatrix(m, tuple(upper)))

    sigs = [signature(a) for a in results]
    if len(set(sigs)) != len(sigs):
        raise WitnessSearchFailed("extensions are not pairwise distinct in signature")
    for a in results:
        if restrict(a, face).matrix != a_face:
            raise WitnessSearchFailed("extension does not restrict to the face operator")
    return results
