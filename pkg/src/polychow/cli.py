"""Command-line front end.

All quantities are lattice-normalized pure rationals; there are no units
anywhere. Results are printed to stdout as deterministic text (or JSON
with --json); wall-clock timing goes to stderr so identical inputs always
produce byte-identical reports.

Exit codes: 0 success, 1 input or validation error, 2 mathematical
verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time

from .errors import PolychowError, VerificationMismatch
from .geometry import (
    AffineMap,
    IntMat2,
    Polygon,
    Vec2,
    area,
    boundary_lattice_length,
    denominator_lcm,
    is_delzant,
    is_lattice,
    moment_integral,
)
from .counting import ehrhart_eval, ehrhart_poly, sum_points, sum_poly
from .chow import (
    chow_poly,
    chow_eval,
    check_scaling_law,
    check_translation_law,
    check_unimodular_law,
    coefficient_span_dim,
)
from .blowup import chop_corners, df_invariants, chow_after_blowup, verify_blowup_theorem
from .stability import (
    SymmetryGroup,
    fo_invariant,
    is_centrally_symmetric,
    is_weakly_symmetric,
    mukai_classify,
)
from .replicate import run_replication
from .serialization import (
    file_digest,
    fmt_mat,
    fmt_rational,
    fmt_scalar_poly,
    fmt_vec,
    fmt_vec_poly,
    load_cuts,
    load_group,
    load_points,
    load_polytope,
    render_report,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytope-chow",
        description=(
            "Exact invariants of convex lattice polygons: lattice point counts, "
            "point-sum and Chow-weight polynomials, corner-chop blow-up "
            "invariants, symmetry and stability tests. All numbers are exact "
            "rationals printed as p/q; nothing carries units."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if needs_file:
            p.add_argument("file", help="polytope JSON file: {\"vertices\": [[\"0\",\"0\"], ...]}")
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        p.add_argument("--text", action="store_true", help="emit the report as text (default)")
        return p

    add("info", "areas, lattice data and Delzant status of a polygon")

    p = add("ehrhart", "lattice point count at a dilation, or the counting polynomial")
    p.add_argument("--i", type=int, default=1, metavar="N", help="dilation factor (default 1)")
    p.add_argument("--poly", action="store_true", help="emit the counting polynomial instead")

    p = add("sum", "lattice point sum at a dilation, or the sum polynomial")
    p.add_argument("--i", type=int, default=1, metavar="N", help="dilation factor (default 1)")
    p.add_argument("--poly", action="store_true", help="emit the sum polynomial instead")

    p = add("chow", "Chow weight at a dilation, or its polynomial and coefficient span")
    p.add_argument("--i", type=int, default=1, metavar="N", help="dilation factor (default 1)")
    p.add_argument("--poly", action="store_true", help="emit the Chow polynomial instead")
    p.add_argument(
        "--laws",
        type=int,
        default=0,
        metavar="N",
        help="also check the translation/unimodular/scaling laws for i=1..N",
    )

    p = add("blowup", "corner-chop decomposition, blow-up invariants and Chow weight")
    p.add_argument("--cuts", required=True, metavar="FILE",
                   help="cuts JSON file: {\"cuts\": [{\"vertex\": [\"0\",\"2\"], \"depth\": \"1/2\"}]}")
    p.add_argument("--verify", action="store_true",
                   help="check the blow-up identity against direct enumeration")
    p.add_argument("--imax", type=int, default=3, metavar="N",
                   help="largest dilation for --verify (default 3)")

    p = add("fo", "averaged-point invariant and symmetry findings")
    p.add_argument("--i", type=int, default=1, metavar="N", help="largest dilation (default 1)")
    p.add_argument("--group", metavar="FILE",
                   help="symmetry generators JSON file: {\"generators\": [[[0,-1],[1,-1]]]}")

    p = add("mukai", "incidence stability test for plane point configurations")

    add("replicate", "run the embedded replication suite", needs_file=False)
    return parser


def _polygon_report(polygon: Polygon) -> dict:
    vol = area(polygon)
    moment = moment_integral(polygon)
    return {
        "vertices": [fmt_vec(v) for v in polygon.vertices],
        "area": fmt_rational(vol),
        "boundary_lattice_length": fmt_rational(boundary_lattice_length(polygon)),
        "is_lattice": is_lattice(polygon),
        "is_delzant": is_delzant(polygon),
        "denominator_lcm": denominator_lcm(polygon),
        "moment_integral": fmt_vec(moment),
        "barycenter": fmt_vec(Vec2(moment.x / vol, moment.y / vol)),
    }


def _cmd_info(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    return {"polytope": _polygon_report(polygon)}, 0


def _cmd_ehrhart(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    if args.poly:
        return {"ehrhart_poly": fmt_scalar_poly(ehrhart_poly(polygon))}, 0
    return {"i": args.i, "count": ehrhart_eval(polygon, args.i)}, 0


def _cmd_sum(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    if args.poly:
        return {"sum_poly": fmt_vec_poly(sum_poly(polygon))}, 0
    return {"i": args.i, "sum": fmt_vec(sum_points(polygon, args.i))}, 0


def _cmd_chow(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    report: dict = {}
    if args.poly:
        poly = chow_poly(polygon)
        report["chow_poly"] = {
            "linear": fmt_vec(poly.c1),
            "const": fmt_vec(poly.c0),
        }
        report["coefficient_span_dim"] = coefficient_span_dim(poly)
    else:
        report["i"] = args.i
        report["chow"] = fmt_vec(chow_eval(polygon, AffineMap.identity(), args.i))
    if args.laws > 0:
        entries = []
        shift = Vec2.of(1, 1)
        shear = IntMat2.from_rows((1, 1), (0, 1))
        for i in range(1, args.laws + 1):
            for check in (
                check_translation_law(polygon, shift, i),
                check_unimodular_law(polygon, shear, i),
                check_scaling_law(polygon, 2, i),
            ):
                entries.append(
                    {
                        "law": check.law,
                        "i": i,
                        "holds": check.holds,
                        "lhs": fmt_vec(check.lhs),
                        "rhs": fmt_vec(check.rhs),
                    }
                )
        report["laws"] = entries
    return report, 0


def _cmd_blowup(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    cuts = load_cuts(args.cuts)
    decomposition = chop_corners(polygon, cuts)
    df1, df2 = df_invariants(decomposition)
    after = chow_after_blowup(decomposition)
    report = {
        "k": decomposition.k,
        "m": list(decomposition.m),
        "M": decomposition.m_sum,
        "M_tilde": decomposition.m_square_sum,
        "A": decomposition.a_const,
        "B": decomposition.b_const,
        "frames": [fmt_mat(f) for f in decomposition.frames],
        "chopped_vertices": [fmt_vec(v) for v in decomposition.chopped.vertices],
        "chopped_scaled_delzant": decomposition.chopped_scaled_delzant,
        "DF1": fmt_vec(df1),
        "DF2": fmt_vec(df2),
        "chow_poly": {"linear": fmt_vec(after.c1), "const": fmt_vec(after.c0)},
        "coefficient_span_dim": coefficient_span_dim(after),
    }
    if not decomposition.chopped_scaled_delzant:
        print(
            "warning: the scaled chopped polygon is lattice but not Delzant; "
            "invariants still evaluate",
            file=sys.stderr,
        )
    exit_code = 0
    if args.verify:
        try:
            verification = verify_blowup_theorem(decomposition, args.imax)
            entries = verification.entries
        except VerificationMismatch as exc:
            entries = exc.report.entries if exc.report is not None else ()
            exit_code = 2
        report["verification"] = [
            {"i": i, "identity": fmt_vec(lhs), "enumerated": fmt_vec(rhs), "equal": lhs == rhs}
            for i, lhs, rhs in entries
        ]
        report["verified"] = exit_code == 0
    return report, exit_code


def _cmd_fo(args) -> tuple[dict, int]:
    polygon = load_polytope(args.file)
    report: dict = {
        "fo": [
            {"i": i, "value": fmt_vec(fo_invariant(polygon, i))}
            for i in range(1, max(args.i, 1) + 1)
        ],
        "centrally_symmetric": is_centrally_symmetric(polygon),
    }
    if is_centrally_symmetric(polygon):
        reflection = SymmetryGroup.generated_by([IntMat2(-1, 0, 0, -1)])
        report["weakly_symmetric_via_point_reflection"] = is_weakly_symmetric(
            polygon, reflection
        )
    if args.group:
        group = load_group(args.group)
        report["group_order"] = len(group)
        report["weakly_symmetric"] = is_weakly_symmetric(polygon, group)
    return report, 0


def _cmd_mukai(args) -> tuple[dict, int]:
    configuration = load_points(args.file)
    result = mukai_classify(configuration)
    witness = result.witness
    return {
        "points": len(configuration),
        "verdict": result.verdict,
        "witness": {
            "dim": witness.dim,
            "coordinates": list(witness.coordinates),
            "incident": witness.incident,
            "ratio": fmt_rational(witness.ratio),
            "bound": fmt_rational(witness.bound),
        },
    }, 0


def _cmd_replicate(args) -> tuple[dict, int]:
    results = run_replication()
    failing = [r.name for r in results if not r.passed]
    report = {
        "fixtures": [
            {
                "name": r.name,
                "status": "pass" if r.passed else "FAIL",
                "checks": len(r.checks),
                "failures": [
                    {"check": c.name, "detail": c.detail} for c in r.checks if not c.passed
                ],
            }
            for r in results
        ],
        "all_pass": not failing,
    }
    if failing:
        report["failing"] = failing
    return report, 0 if not failing else 2


_COMMANDS = {
    "info": _cmd_info,
    "ehrhart": _cmd_ehrhart,
    "sum": _cmd_sum,
    "chow": _cmd_chow,
    "blowup": _cmd_blowup,
    "fo": _cmd_fo,
    "mukai": _cmd_mukai,
    "replicate": _cmd_replicate,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    report: dict = {"command": args.command}
    if getattr(args, "file", None):
        try:
            report["input_digest"] = file_digest(args.file)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    try:
        body, exit_code = _COMMANDS[args.command](args)
    except PolychowError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report.update(body)
    sys.stdout.write(render_report(report, as_json=bool(getattr(args, "json", False))))
    elapsed_ms = (time.monotonic() - started) * 1000.0
    print(f"# duration: {elapsed_ms:.1f} ms", file=sys.stderr)
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
