"""Seeded random generators for matrices and interior starting points."""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .core import SkewMatrix
from .errors import WitnessSearchFailed
from .pfaffian import Signature, is_transversal, signature


def random_entry(rng: random.Random, max_den: int = 12, sign: int | None = None) -> Fraction:
    """Nonzero rational in [-1, 1] with denominator at most ``max_den``."""
    den = rng.randint(1, max_den)
    mag = Fraction(rng.randint(1, den), den)
    if sign is None:
        sign = rng.choice((1, -1))
    return sign * mag


def random_skew(m: int, rng: random.Random, max_den: int = 12) -> SkewMatrix:
    return SkewMatrix(m, tuple(random_entry(rng, max_den) for _ in range(m * (m - 1) // 2)))


def random_transversal(m: int, rng: random.Random, max_den: int = 12, tries: int = 1000) -> SkewMatrix:
    for _ in range(tries):
        a = random_skew(m, rng, max_den)
        if is_transversal(a):
            return a
    raise WitnessSearchFailed(f"no transversal m={m} matrix in {tries} draws")


def random_with_signature(target: Signature, rng: random.Random, max_den: int = 12,
                          tries: int = 10000) -> SkewMatrix:
    """Rejection-sample a matrix whose signature equals ``target``."""
    signs = target.entry_signs
    for _ in range(tries):
        a = SkewMatrix(target.m, tuple(random_entry(rng, max_den, s) for s in signs))
        if is_transversal(a) and signature(a) == target:
            return a
    raise WitnessSearchFailed(f"no matrix with the requested signature in {tries} draws")


def random_same_signature_pair(m: int, rng: random.Random, max_den: int = 12) -> tuple[SkewMatrix, SkewMatrix]:
    a0 = random_transversal(m, rng, max_den)
    return a0, random_with_signature(signature(a0), rng, max_den)


def random_interior_point(m: int, rng: np.random.Generator) -> np.ndarray:
    """Normalized vector of independent uniform(0, 1) draws."""
    u = rng.uniform(0.0, 1.0, size=m)
    while np.any(u == 0.0):
        u = rng.uniform(0.0, 1.0, size=m)
    return u / u.sum()
