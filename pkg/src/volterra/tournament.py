"""Tournaments of sign patterns and the limit predictions they imply.

Edge ``i -> k`` means ``a_ik > 0``: player ``i`` gains against ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Face, SkewMatrix
from .errors import InvariantViolation, ZeroEntry
from .pfaffian import require_transversal


@dataclass(frozen=True)
class Tournament:
    m: int
    beats: frozenset[tuple[int, int]]

    def __post_init__(self):
        beats = frozenset(self.beats)
        for i, k in beats:
            if i == k or not (0 <= i < self.m and 0 <= k < self.m):
                raise ValueError(f"bad edge {(i, k)} for m={self.m}")
            if (k, i) in beats:
                raise ValueError(f"both orientations of {{{i + 1},{k + 1}}} present")
        if len(beats) != self.m * (self.m - 1) // 2:
            raise ValueError("a tournament orients every pair exactly once")
        object.__setattr__(self, "beats", beats)

    def successors(self, i: int) -> Iterator[int]:
        return (k for k in range(self.m) if (i, k) in self.beats)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.beats)

    def to_dot(self, name: str = "T") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {i + 1};" for i in range(self.m)]
        lines += [f"  {i + 1} -> {k + 1};" for i, k in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_tournament(matrix: SkewMatrix) -> Tournament:
    edges = set()
    for i, k in matrix.pairs():
        a = matrix[i, k]
        if a == 0:
            raise ZeroEntry(i, k)
        edges.add((i, k) if a > 0 else (k, i))
    return Tournament(matrix.m, frozenset(edges))


@dataclass(frozen=True)
class FactorTournament:
    """Strong components in source-to-sink order, with the induced edges."""

    components: tuple[Face, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def is_strong(self) -> bool:
        return len(self.components) == 1

    @property
    def source(self) -> Face:
        return self.components[0]


def _tarjan(t: Tournament) -> list[list[int]]:
    """Iterative Tarjan; components come out sinks first."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    succ = {v: list(t.successors(v)) for v in range(t.m)}
    for root in range(t.m):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            for n in range(pos, len(succ[v])):
                w = succ[v][n]
                if w not in index:
                    work.append((v, n + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


def strong_components(t: Tournament) -> FactorTournament:
    comps = [Face(tuple(c), t.m) for c in reversed(_tarjan(t))]
    where = {v: n for n, c in enumerate(comps) for v in c}
    edges = frozenset((where[i], where[k]) for i, k in t.beats if where[i] != where[k])
    # the quotient of a tournament is a transitive tournament ordered source first
    for a, b in edges:
        if a > b:
            raise InvariantViolation(f"factor edge {a}->{b} points backwards")
    n = len(comps)
    if len(edges) != n * (n - 1) // 2:
        raise InvariantViolation("factor tournament is not complete")
    return FactorTournament(tuple(comps), edges)


def has_three_cycle(t: Tournament) -> bool:
    return any(
        (j, k) in t.beats and (k, i) in t.beats
        for i, j in t.beats for k in range(t.m) if k not in (i, j)
    )


def is_transitive(t: Tournament) -> bool:
    return all(len(c) == 1 for c in strong_components(t).components)


@dataclass(frozen=True)
class LimitPrediction:
    """``kind`` is ``"vertex"``, ``"face"`` or ``"none"``."""

    kind: str
    face: Face | None = None

    @property
    def vertex(self) -> int | None:
        return self.face.indices[0] if self.kind == "vertex" else None

    def describe(self) -> str:
        if self.kind == "vertex":
            return f"every interior trajectory converges to vertex e_{self.vertex + 1}"
        if self.kind == "face":
            return f"omega-limits of interior trajectories lie in face {self.face}"
        return "none (strong tournament)"


def predict_limit(matrix: SkewMatrix) -> LimitPrediction:
    """Where interior trajectories end up, read off the tournament."""
    require_transversal(matrix)
    factor = strong_components(build_tournament(matrix))
    if all(len(c) == 1 for c in factor.components):
        return LimitPrediction("vertex", factor.source)
    if not factor.is_strong:
        return LimitPrediction("face", factor.source)
    return LimitPrediction("none")
