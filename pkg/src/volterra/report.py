"""The ``analyze`` report: every analysis of one matrix in one document."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .core import SkewMatrix, format_fraction
from .errors import InvariantViolation, ZeroEntry
from .fixedpoints import enumerate_fixed_points, oracle_fixed_points, sorted_points
from .io import decimal, matrix_to_dict, parse_matrix_file
from .pfaffian import SubpfaffianTable, first_vanishing, pfaffian, signature
from .tournament import build_tournament, predict_limit, strong_components

UNAVAILABLE_NOT_TRANSVERSAL = "unavailable: matrix is not transversal"


@dataclass
class AnalysisReport:
    matrix: dict
    transversal: bool
    pfaffian: dict | None = None
    signature: dict = field(default_factory=dict)
    fixed_points: dict = field(default_factory=dict)
    tournament: dict = field(default_factory=dict)
    prediction: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix,
            "transversal": self.transversal,
            "pfaffian": self.pfaffian,
            "signature": self.signature,
            "fixed_points": self.fixed_points,
            "tournament": self.tournament,
            "prediction": self.prediction,
            "notes": self.notes,
        }

    def lines(self) -> list[str]:
        out = [f"matrix: m={self.matrix['m']} upper=[{', '.join(self.matrix['upper'])}]",
               f"transversal: {str(self.transversal).lower()}"]
        if self.pfaffian is not None:
            out.append(f"pfaffian: {self.pfaffian['value']}")
        sig = self.signature
        if sig.get("available"):
            out.append("signature: " + " ".join(f"{s}:{v}" for s, v in sig["signs"].items()))
        else:
            out.append(f"signature: {sig.get('reason')}")
        fp = self.fixed_points
        if fp.get("available"):
            out.append(f"fixed points ({fp['count']}, oracle agrees: {str(fp['oracle_agrees']).lower()}):")
            out += [f"  support={p['support']} point={p['point']}" for p in fp["points"]]
        else:
            out.append(f"fixed points: {fp.get('reason')}")
        tour = self.tournament
        if tour.get("available"):
            out.append("tournament edges: " + " ".join(tour["edges"]))
            out.append("strong components: " + " ".join(tour["components"]))
            out.append(f"transitive: {str(tour['transitive']).lower()}  strong: {str(tour['strong']).lower()}")
        else:
            out.append(f"tournament: {tour.get('reason')}")
        out.append(f"prediction: {self.prediction.get('description', self.prediction.get('reason'))}")
        out += [f"note: {n}" for n in self.notes]
        return out


def _labels(indices) -> str:
    return "{" + ",".join(str(i + 1) for i in indices) + "}"


def analyze_matrix(matrix: SkewMatrix, float_mode: bool = False, check_oracle: bool = True) -> AnalysisReport:
    table = SubpfaffianTable(matrix)
    vanishing = first_vanishing(matrix, table)
    report = AnalysisReport(matrix=matrix_to_dict(matrix), transversal=vanishing is None)

    if matrix.m % 2 == 0:
        value = pfaffian(matrix)
        report.pfaffian = {"value": format_fraction(value)}
        if float_mode:
            report.pfaffian["decimal"] = decimal(value)

    if vanishing is not None:
        reason = f"{UNAVAILABLE_NOT_TRANSVERSAL} (subpfaffian on {_labels(vanishing)} is 0)"
        report.signature = {"available": False, "reason": reason}
        report.fixed_points = {"available": False, "reason": reason}
        report.prediction = {"available": False, "reason": reason}
        report.notes.append(f"signature, fixed points and prediction skipped: {_labels(vanishing)} vanishes")
    else:
        sig = signature(matrix, table)
        report.signature = {"available": True, "signs": {_labels(s): "+" if v > 0 else "-"
                                                         for s, v in sig.signs.items()}}
        points = enumerate_fixed_points(matrix)
        agrees = None
        if check_oracle:
            oracle = oracle_fixed_points(matrix)
            agrees = oracle == points
            if not agrees:
                raise InvariantViolation("fixedpoints: pfaffian enumeration and linear-algebra oracle disagree")
        rendered = []
        for p in sorted_points(points):
            entry = {"support": str(p.support), "point": str(p.point)}
            if float_mode:
                entry["decimal"] = [decimal(c) for c in p.point]
            rendered.append(entry)
        report.fixed_points = {"available": True, "count": len(points), "oracle_agrees": agrees,
                               "points": rendered}
        prediction = predict_limit(matrix)
        report.prediction = {"available": True, "kind": prediction.kind,
                             "face": str(prediction.face) if prediction.face else None,
                             "description": prediction.describe()}

    try:
        t = build_tournament(matrix)
    except ZeroEntry as exc:
        report.tournament = {"available": False, "reason": f"unavailable: {exc}"}
    else:
        factor = strong_components(t)
        report.tournament = {
            "available": True,
            "edges": [f"{i + 1}->{k + 1}" for i, k in t.edges()],
            "components": [str(c) for c in factor.components],
            "transitive": all(len(c) == 1 for c in factor.components),
            "strong": factor.is_strong,
        }
    return report


def analyze(path: str | Path, float_mode: bool = False, check_oracle: bool = True) -> AnalysisReport:
    return analyze_matrix(parse_matrix_file(path), float_mode=float_mode, check_oracle=check_oracle)

