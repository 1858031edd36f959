"""Floating-point trajectories and omega-limit estimates.

Double precision is used here only; exact arithmetic is hopeless for long
orbits because denominators square at every step.

A numerical orbit can get stuck on the boundary: near a vertex of a
heteroclinic cycle, a coordinate may underflow to 0.0 although the exact
orbit keeps it positive. :func:`estimate_omega` detects this. An apparent
limit ``y`` at which some coordinate of ``supp(x0)`` has positive growth
rate ``(A y)_k > 0`` cannot be a real limit, since that coordinate would
grow back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Face, SimplexPoint, SkewMatrix, VolterraOperator
from .errors import DimensionMismatch
from .pfaffian import require_transversal
from .sampling import random_interior_point
from .tournament import LimitPrediction, predict_limit

DEFAULT_MAX_STEPS = 100_000
DEFAULT_TOL = 1e-8
CONFIRMATION_WINDOW = 100
DRIFT_GUARD = 1e-9
DEFAULT_SEED = 20240601


def as_array(V: VolterraOperator | SkewMatrix) -> np.ndarray:
    matrix = V.matrix if isinstance(V, VolterraOperator) else V
    return np.array([[float(v) for v in row] for row in matrix.full()], dtype=float)


def _start(x0, m: int) -> np.ndarray:
    if isinstance(x0, np.ndarray):
        x0 = tuple(float(c) for c in x0)
    point = x0 if isinstance(x0, SimplexPoint) else SimplexPoint(tuple(float(c) for c in x0))
    if len(point) != m:
        raise DimensionMismatch(f"start point has {len(point)} coordinates, operator has m={m}")
    return np.array([float(c) for c in point], dtype=float)


class _Stepper:
    """One application of the operator, with drift and rounding bookkeeping."""

    def __init__(self, a: np.ndarray):
        self.a = a
        self.renormalizations = 0
        self.clamps = 0
        self.max_drift = 0.0

    def __call__(self, x: np.ndarray) -> np.ndarray:
        y = x * (1.0 + self.a @ x)
        if np.any(y < 0.0):
            # 1 + (Ax)_k >= 0 exactly; a negative value is rounding error
            self.clamps += 1
            y = np.maximum(y, 0.0)
        total = y.sum()
        drift = abs(total - 1.0)
        self.max_drift = max(self.max_drift, drift)
        if abs(total - 1.0) > DRIFT_GUARD:
            self.renormalizations += 1
            y = y / total
        return y


@dataclass
class Trajectory:
    operator: VolterraOperator
    points: np.ndarray
    renormalizations: int = 0
    clamps: int = 0
    max_step_drift: float = 0.0

    @property
    def x0(self) -> np.ndarray:
        return self.points[0]

    @property
    def final(self) -> np.ndarray:
        return self.points[-1]

    def __len__(self) -> int:
        return len(self.points)


def iterate(V: VolterraOperator | SkewMatrix, x0, steps: int) -> Trajectory:
    V = V if isinstance(V, VolterraOperator) else VolterraOperator(V)
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    step = _Stepper(as_array(V))
    points = np.empty((steps + 1, V.m))
    points[0] = _start(x0, V.m)
    for t in range(steps):
        points[t + 1] = step(points[t])
    return Trajectory(V, points, step.renormalizations, step.clamps, step.max_drift)


@dataclass
class OmegaEstimate:
    """``kind`` is ``converged-to-point``, ``face-absorbed`` or ``cycle-or-infinite``."""

    kind: str
    iterations_used: int
    final_point: np.ndarray
    limit_point: np.ndarray | None = None
    absorbing_face: Face | None = None
    stalled: bool = False
    renormalizations: int = 0
    max_step_drift: float = 0.0


def _invasion_closure(a: np.ndarray, live: set[int], candidates: set[int]) -> set[int]:
    """Add every candidate that gains against some live vertex, repeatedly."""
    live = set(live)
    grew = True
    while grew:
        grew = False
        for k in sorted(candidates - live):
            if any(a[k, j] > 0 for j in live):
                live.add(k)
                grew = True
    return live


def estimate_omega(V: VolterraOperator | SkewMatrix, x0, max_steps: int = DEFAULT_MAX_STEPS,
                   tol: float = DEFAULT_TOL, window: int = CONFIRMATION_WINDOW) -> OmegaEstimate:
    """Classify where the orbit of ``x0`` ends up.

    ``converged-to-point``: ``max|x_{t+1} - x_t| < tol`` for ``window``
    consecutive steps, and no vanished coordinate of ``supp(x0)`` would
    grow back at the limit.
    ``face-absorbed``: the orbit settles (possibly cycling) in a proper face
    of ``supp(x0)``; coordinates outside it are below ``tol`` and cannot
    re-invade from any vertex of the face.
    ``cycle-or-infinite``: anything else.
    """
    V = V if isinstance(V, VolterraOperator) else VolterraOperator(V)
    a = as_array(V)
    step = _Stepper(a)
    x = _start(x0, V.m)
    supp0 = {k for k in range(V.m) if x[k] > 0}
    quiet = 0
    t = 0
    while t < max_steps and quiet < window:
        y = step(x)
        quiet = quiet + 1 if np.max(np.abs(y - x)) < tol else 0
        x = y
        t += 1

    live = {k for k in supp0 if x[k] >= tol}
    rates = a @ x
    invaders = {k for k in supp0 - live if rates[k] > tol}
    common = dict(iterations_used=t, final_point=x, renormalizations=step.renormalizations,
                  max_step_drift=step.max_drift)
    if quiet >= window and not invaders:
        return OmegaEstimate("converged-to-point", limit_point=x.copy(),
                             absorbing_face=Face(tuple(sorted(live)), V.m), **common)
    stalled = quiet >= window
    region = _invasion_closure(a, live, supp0)
    if region != supp0:
        return OmegaEstimate("face-absorbed", absorbing_face=Face(tuple(sorted(region)), V.m),
                             stalled=stalled, **common)
    return OmegaEstimate("cycle-or-infinite", stalled=stalled, **common)


@dataclass
class PredictionReport:
    prediction: LimitPrediction
    trials: int
    agreements: int = 0
    disagreements: list[tuple[np.ndarray, np.ndarray]] = field(default_factory=list)
    max_step_drift: float = 0.0
    note: str = ""

    @property
    def rate(self) -> float | None:
        return self.agreements / self.trials if self.trials else None

    @property
    def passed(self) -> bool:
        return not self.disagreements


def check_predictions(V: VolterraOperator | SkewMatrix, trials: int, seed: int = DEFAULT_SEED,
                      tol: float = 1e-6, max_steps: int = DEFAULT_MAX_STEPS,
                      omega_tol: float = DEFAULT_TOL) -> PredictionReport:
    """Simulate from random interior starts and compare with :func:`predict_limit`.

    A vertex prediction agrees when the orbit converges to within ``tol``
    of that vertex; a face prediction agrees when every coordinate outside
    the face ends below ``tol``.
    """
    V = V if isinstance(V, VolterraOperator) else VolterraOperator(V)
    require_transversal(V.matrix)
    prediction = predict_limit(V.matrix)
    if prediction.kind == "none":
        return PredictionReport(prediction, 0, note="no prediction to check")
    rng = np.random.default_rng(seed)
    report = PredictionReport(prediction, trials)
    outside = [k for k in range(V.m) if k not in prediction.face]
    for _ in range(trials):
        x0 = random_interior_point(V.m, rng)
        est = estimate_omega(V, x0, max_steps=max_steps, tol=omega_tol)
        report.max_step_drift = max(report.max_step_drift, est.max_step_drift)
        final = est.final_point
        if prediction.kind == "vertex":
            target = np.zeros(V.m)
            target[prediction.vertex] = 1.0
            ok = est.kind == "converged-to-point" and np.max(np.abs(final - target)) < tol
        else:
            ok = all(final[k] < tol for k in outside)
        if ok:
            report.agreements += 1
        else:
            report.disagreements.append((x0, final))
    return report
