"""Command-line interface.

Subcommands: construct, check, bound, lemma, sample, nullspace, report.
Exit codes: 0 all checks pass, 1 a bound violation or failed certification
was found (the report says which), 2 invalid input.  The default tolerance
1e-9 can be overridden through the CURVLIKE_TOL environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .ambient_models import AmbientKind, AmbientModel
from .errors import CurvlikeError
from .gauss_bounds import BoundMode
from .instance_io import Instance, StructureInfo, load_instance, save_instance
from .optim_lemmas import (
    ConstrainedQuadratic,
    Objective,
    brute_force_max,
    f1_max_closed,
    f2_max_closed,
    f_value,
)
from .reporting import (
    _tool_block,
    build_bound_report,
    build_check_report,
    build_instance_report,
    build_nullspace_report,
    render_report,
    run_sample,
)
from .structures import Family, FamilyParams, construct_family

DEFAULT_TOL = 1e-9
LEMMA_AGREEMENT_TOL = 1e-8


def _tolerance() -> float:
    raw = os.environ.get("CURVLIKE_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError as exc:
        raise CurvlikeError(f"CURVLIKE_TOL must be a number, got {raw!r}") from exc
    if tol <= 0:
        raise CurvlikeError(f"CURVLIKE_TOL must be positive, got {tol!r}")
    return tol


def _parse_floats(raw: str) -> np.ndarray:
    try:
        return np.array([float(part) for part in raw.split(",")])
    except ValueError as exc:
        raise CurvlikeError(f"expected comma-separated numbers, got {raw!r}") from exc


def _cmd_construct(args: argparse.Namespace, tol: float) -> int:
    family = {f.value: f for f in Family}[args.family]
    h0 = _parse_floats(args.h0) if args.h0 is not None else None
    params = FamilyParams(
        family=family,
        n=args.n,
        lam=args.lambda_,
        mu=args.mu,
        theta=args.theta,
        h0=h0,
    )
    zeta = construct_family(params)
    structure = None
    if family in (Family.SLUMBILICAL, Family.H_SLUMBILICAL) and args.theta is not None:
        structure = StructureInfo(kind="slant", theta=args.theta)
    elif family is Family.H_UMBILICAL_C_TOTALLY_REAL:
        structure = StructureInfo(kind="c_totally_real")
    save_instance(Instance(zeta=zeta, structure=structure), args.output)
    print(f"wrote {args.output}")
    return 0


def _cmd_check(args: argparse.Namespace, tol: float) -> int:
    instance = load_instance(args.file)
    doc, code = build_check_report(instance, tol, source=args.file)
    sys.stdout.write(render_report(doc, "text"))
    return code


def _cmd_bound(args: argparse.Namespace, tol: float) -> int:
    instance = load_instance(args.file)
    mode = BoundMode.GENERAL if args.mode == "general" else BoundMode.IMPROVED
    doc, code = build_bound_report(instance, mode, tol, source=args.file)
    sys.stdout.write(render_report(doc, "text"))
    return code


def _cmd_lemma(args: argparse.Namespace, tol: float) -> int:
    which = Objective.F1 if args.which == "f1" else Objective.F2
    problem = ConstrainedQuadratic(which=which, n=args.n, constraint_sum=args.sum)
    if which is Objective.F1:
        closed = f1_max_closed(args.n, args.sum)
        closed_doc = {"max": closed.max_value, "argmax": closed.argmax.tolist()}
        closed_max = closed.max_value
    else:
        family = f2_max_closed(args.n, args.sum)
        closed_doc = {
            "max": family.max_value,
            "a1": family.a1,
            "tail_sum": family.tail_sum,
            "representative": family.representative.tolist(),
        }
        closed_max = family.max_value
    oracle = brute_force_max(problem)
    agreement = abs(closed_max - oracle.max_value)
    failures = []
    if agreement > LEMMA_AGREEMENT_TOL:
        failures.append(
            f"closed form and oracle disagree by {agreement!r} "
            f"(> {LEMMA_AGREEMENT_TOL})"
        )
    doc = {
        "version": 1,
        "kind": "lemma-report",
        "tool": _tool_block(),
        "which": args.which,
        "n": args.n,
        "sum": args.sum,
        "closed_form": closed_doc,
        "oracle": {"max": oracle.max_value, "argmax": oracle.argmax.tolist()},
        "agreement": agreement,
    }
    if args.values is not None:
        point = _parse_floats(args.values)
        value = f_value(problem, point)
        feasibility = abs(float(point.sum()) - args.sum)
        feasible = feasibility <= tol
        within = value <= closed_max + tol
        doc["values"] = {
            "point": point.tolist(),
            "value": value,
            "feasibility_residual": feasibility,
            "feasible": feasible,
            "within_bound": within,
        }
        if feasible and not within:
            failures.append(
                f"feasible point value {value!r} exceeds the maximum {closed_max!r}"
            )
    doc["failures"] = failures
    sys.stdout.write(render_report(doc, "text"))
    return 1 if failures else 0


def _ambient_from_args(args: argparse.Namespace) -> AmbientModel | None:
    if args.ambient is None:
        if args.c is not None or args.theta is not None:
            raise CurvlikeError("--c/--theta require --ambient")
        return None
    kind = {k.value: k for k in AmbientKind}[args.ambient]
    c = args.c if args.c is not None else 0.0
    return AmbientModel(kind=kind, c=c, theta=args.theta)


def _cmd_sample(args: argparse.Namespace, tol: float) -> int:
    if not 0 <= args.seed < 2**64:
        raise CurvlikeError(f"seed must be an unsigned 64-bit integer, got {args.seed}")
    ambient = _ambient_from_args(args)
    doc, code = run_sample(
        n=args.n,
        bundle_dim=args.bundle,
        count=args.count,
        seed=args.seed,
        family=args.family,
        ambient=ambient,
        tol=tol,
    )
    sys.stdout.write(render_report(doc, "json"))
    return code


def _cmd_nullspace(args: argparse.Namespace, tol: float) -> int:
    instance = load_instance(args.file)
    doc, code = build_nullspace_report(instance, tol, source=args.file)
    sys.stdout.write(render_report(doc, "text"))
    return code


def _cmd_report(args: argparse.Namespace, tol: float) -> int:
    instance = load_instance(args.file)
    doc, code = build_instance_report(instance, tol, source=args.file)
    sys.stdout.write(render_report(doc, args.format))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvlike",
        description=(
            "Curvature-like tensors from bundle-valued symmetric forms: "
            "Chen-Ricci bounds, equality classification, and instance reports."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family and write it to a file")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--lambda", dest="lambda_", type=float, default=None)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--h0", type=str, default=None, help="comma-separated bundle vector")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="symmetry and Gauss-residual gate for a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bound", help="evaluate one Ricci bound on a file")
    p.add_argument("file")
    p.add_argument("--mode", required=True, choices=["general", "improved"])
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("lemma", help="closed-form quadratic maxima vs the oracle")
    p.add_argument("--which", required=True, choices=["f1", "f2"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--sum", required=True, type=float)
    p.add_argument("--values", type=str, default=None, help="comma-separated point")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("sample", help="seeded sampling campaign with bound checks")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--bundle", required=True, type=int)
    p.add_argument("--count", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--family", required=True, choices=["general", "symmetric"])
    p.add_argument("--ambient", choices=[k.value for k in AmbientKind], default=None)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("nullspace", help="orthonormal basis of the relative null space")
    p.add_argument("file")
    p.set_defaults(func=_cmd_nullspace)

    p = sub.add_parser("report", help="full diagnostic report for a file")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _tolerance()
        return args.func(args, tol)
    except CurvlikeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
