"""``volterra`` command line.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
invariant violation (two independent computations disagreed).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import dynamics
from .core import Face, SimplexPoint, VolterraOperator, format_fraction, restrict
from .errors import InvariantViolation, ValidationError, VolterraError
from .fixedpoints import enumerate_fixed_points, oracle_fixed_points, sorted_points
from .homotopy import (
    class_witnesses,
    count_classes,
    extensions,
    forced_pattern_count,
    homotopy_decision,
    homotopy_path,
    linear_path,
    validate_path,
)
from .io import decimal, matrix_to_dict, parse_face_file, parse_labels, parse_matrix_file, parse_point
from .pfaffian import pfaffian, signature
from .report import analyze
from .sampling import random_interior_point
from .tournament import build_tournament, predict_limit, strong_components

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_analyze(args) -> int:
    report = analyze(args.matrix, float_mode=args.float)
    _emit(args, report.to_dict(), report.lines())
    return EXIT_OK


def cmd_pfaffian(args) -> int:
    a = parse_matrix_file(args.matrix)
    value = pfaffian(a)
    payload = {"pfaffian": format_fraction(value)}
    line = format_fraction(value)
    if args.float:
        payload["decimal"] = decimal(value)
        line += f"  ({decimal(value)})"
    _emit(args, payload, [line])
    return EXIT_OK


def cmd_signature(args) -> int:
    sig = signature(parse_matrix_file(args.matrix))
    lines = sig.lines()
    _emit(args, {"m": sig.m, "signs": dict(line.split(": ") for line in lines)}, lines)
    return EXIT_OK


def cmd_fixed_points(args) -> int:
    a = parse_matrix_file(args.matrix)
    points = sorted_points(enumerate_fixed_points(a))
    if args.check and set(points) != oracle_fixed_points(a):
        raise InvariantViolation("fixed-point enumeration disagrees with the linear-algebra oracle")
    lines, rows = [], []
    for p in points:
        line = str(p)
        row = {"support": str(p.support), "point": str(p.point)}
        if args.float:
            decimals = [decimal(c) for c in p.point]
            line += " decimal=(" + ",".join(decimals) + ")"
            row["decimal"] = decimals
        lines.append(line)
        rows.append(row)
    _emit(args, {"count": len(points), "fixed_points": rows}, lines)
    return EXIT_OK


def cmd_homotopic(args) -> int:
    a0, a1 = parse_matrix_file(args.a), parse_matrix_file(args.b)
    if args.face:
        face = Face.from_labels(parse_labels(args.face), a0.m)
        a0, a1 = restrict(a0, face).matrix, restrict(a1, face).matrix
    decision = homotopy_decision(a0, a1)
    differing = ["{" + ",".join(str(i + 1) for i in s) + "}" for s in decision.differing]
    line = f"homotopic: {str(decision.homotopic).lower()} (criterion: {decision.criterion})"
    lines = [line] + ([f"signs differ on: {' '.join(differing)}"] if differing else [])
    _emit(args, {"homotopic": decision.homotopic, "criterion": decision.criterion, "differing": differing}, lines)
    return EXIT_OK


def cmd_path(args) -> int:
    a0, a1 = parse_matrix_file(args.a), parse_matrix_file(args.b)
    path = linear_path(a0, a1) if args.linear else homotopy_path(a0, a1)
    samples = [{"lambda": format_fraction(lam), "upper": matrix_to_dict(a)["upper"]}
               for lam, a in path.samples(args.samples)]
    payload = {"kind": path.kind, "samples": samples}
    lines = [f"path kind: {path.kind}"] + [f"lambda={s['lambda']}: [{', '.join(s['upper'])}]" for s in samples]
    if args.validate:
        report = validate_path(path, args.samples)
        payload["validation"] = {
            "passed": report.passed,
            "fix_count": report.fix_count,
            "first_failure": None if report.first_failure is None else format_fraction(report.first_failure),
            "reason": report.reason,
        }
        if report.passed:
            lines.append(f"validation: pass ({args.samples} samples, |Fix| = {report.fix_count})")
        else:
            lines.append(f"validation: fail at lambda={format_fraction(report.first_failure)}: {report.reason}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classes(args) -> int:
    count = count_classes(args.m)
    payload = {"m": args.m, "classes": count}
    lines = [str(count)]
    if args.m == 4:
        payload["forced_patterns"] = forced_pattern_count(4)
    if args.witnesses:
        payload["witnesses"] = [matrix_to_dict(w)["upper"] for w in class_witnesses(args.m)]
        lines += ["[" + ", ".join(w) + "]" for w in payload["witnesses"]]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_extend(args) -> int:
    a_face, face = parse_face_file(args.face_file, args.ambient_m)
    results = extensions(a_face, args.ambient_m, args.count, face)
    written = []
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for n, a in enumerate(results, start=1):
            target = out / f"extension_{n}.json"
            target.write_text(json.dumps(matrix_to_dict(a)) + "\n", encoding="utf-8")
            written.append(str(target))
    payload = {"face": str(face), "extensions": [matrix_to_dict(a) for a in results], "written": written}
    lines = [f"face {face}: {len(results)} pairwise non-homotopic extensions to m={args.ambient_m}"]
    lines += ["[" + ", ".join(matrix_to_dict(a)["upper"]) + "]" for a in results]
    lines += [f"wrote {w}" for w in written]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tournament(args) -> int:
    a = parse_matrix_file(args.matrix)
    t = build_tournament(a)
    if args.dot:
        sys.stdout.write(t.to_dot())
        return EXIT_OK
    factor = strong_components(t)
    transitive = all(len(c) == 1 for c in factor.components)
    payload = {
        "edges": [f"{i + 1}->{k + 1}" for i, k in t.edges()],
        "components": [str(c) for c in factor.components],
        "transitive": transitive,
        "strong": factor.is_strong,
    }
    lines = ["edges: " + " ".join(payload["edges"]),
             "components: " + " ".join(payload["components"]),
             f"transitive: {str(transitive).lower()}  strong: {str(factor.is_strong).lower()}"]
    try:
        lines.append("prediction: " + predict_limit(a).describe())
    except ValidationError as exc:
        lines.append(f"prediction: unavailable ({exc})")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_simulate(args) -> int:
    a = parse_matrix_file(args.matrix)
    V = VolterraOperator(a)
    if args.x0:
        x0 = SimplexPoint(parse_point(args.x0))
    else:
        x0 = random_interior_point(a.m, np.random.default_rng(args.seed))
    traj = dynamics.iterate(V, x0, args.steps)
    header = ["step"] + [f"x_{k + 1}" for k in range(a.m)]
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            _write_csv(fh, header, traj.points)
    elif not args.json:
        _write_csv(sys.stdout, header, traj.points)
    estimate = dynamics.estimate_omega(V, x0, max_steps=max(args.steps, 1))
    payload = {
        "steps": args.steps,
        "final": [float(c) for c in traj.final],
        "renormalizations": traj.renormalizations,
        "max_step_drift": traj.max_step_drift,
        "omega": {"kind": estimate.kind,
                  "face": str(estimate.absorbing_face) if estimate.absorbing_face else None},
    }
    if args.out or args.json:
        _emit(args, payload, [
            f"wrote {len(traj)} rows to {args.out}",
            "final: (" + ",".join(f"{c:.12g}" for c in traj.final) + ")",
            f"renormalizations: {traj.renormalizations}",
            f"omega estimate: {estimate.kind}"
            + (f" face={estimate.absorbing_face}" if estimate.absorbing_face else ""),
        ])
    return EXIT_OK


def _write_csv(fh, header, points):
    w = csv.writer(fh)
    w.writerow(header)
    for t, row in enumerate(points):
        w.writerow([t] + [repr(float(c)) for c in row])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--float", action="store_true", help="add decimal renderings")
    common.add_argument("--seed", type=int, default=dynamics.DEFAULT_SEED, help="random seed")

    parser = _Parser(prog="volterra", description="Analyze Volterra quadratic stochastic operators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "run every analysis").add_argument("matrix")
    add("pfaffian", cmd_pfaffian, "exact pfaffian").add_argument("matrix")
    add("signature", cmd_signature, "signs of all even principal subpfaffians").add_argument("matrix")
    p = add("fixed-points", cmd_fixed_points, "all fixed points, exactly")
    p.add_argument("matrix")
    p.add_argument("--check", action="store_true", help="cross-check with the linear-algebra oracle")
    p = add("homotopic", cmd_homotopic, "decide homotopy of two operators")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--face", help="compare restrictions to this face, e.g. 1,2,3")
    p = add("path", cmd_path, "explicit homotopy path")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--samples", type=int, default=11)
    p.add_argument("--validate", action="store_true")
    p.add_argument("--linear", action="store_true", help="plain linear interpolation, no homotopy check")
    p = add("classes", cmd_classes, "count homotopy classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--witnesses", action="store_true")
    p = add("extend", cmd_extend, "non-homotopic extensions of a face operator")
    p.add_argument("face_file")
    p.add_argument("--ambient-m", type=int, required=True)
    p.add_argument("--count", type=int, default=2)
    p.add_argument("--out-dir")
    p = add("tournament", cmd_tournament, "tournament and strong components")
    p.add_argument("matrix")
    p.add_argument("--dot", action="store_true", help="emit Graphviz dot")
    p = add("simulate", cmd_simulate, "floating-point trajectory to CSV")
    p.add_argument("matrix")
    p.add_argument("--x0", help="comma-separated start point; random interior point if omitted")
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--out", help="CSV path (stdout if omitted)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"volterra: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValidationError, FileNotFoundError) as exc:
        print(f"volterra: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except VolterraError as exc:
        print(f"volterra: internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
