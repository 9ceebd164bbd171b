"""Report assembly and rendering for the CLI.

Reports are plain nested dicts with a fixed field order, serialized through
the deterministic writer in :mod:`curvlike.instance_io`; the text rendering
mirrors the JSON field for field.  For a fixed input (and seed, for sampling
campaigns) the emitted bytes are identical across runs.
"""

from __future__ import annotations

import numpy as np

from . import __version__
from .ambient_models import (
    AmbientKind,
    AmbientModel,
    application_bound,
    base_bound,
    mean_curvature_sq,
    ricci_offset,
)
from .errors import BundleTooSmall, ValidationError
from .gauss_bounds import (
    BoundMode,
    BoundReport,
    build_T_from_zeta,
    check_bound,
    corollary_triple,
    is_totally_symmetric,
    verify_gauss,
)
from .instance_io import Instance, dump_json, format_float, instance_sha256
from .sampling import PRNG_NAME, sample_general, sample_symmetric
from .tensor_core import (
    BundleValuedForm,
    null_space,
    pair_exchange_residual,
    trace_norm_sq,
    trace_zeta,
    validate_curvature_symmetries,
    zeta_norm_sq,
)

TOOL_NAME = "curvlike"


def _tool_block() -> dict:
    return {"name": TOOL_NAME, "version": __version__}


def _instance_block(instance: Instance, source: str) -> dict:
    return {
        "source": source,
        "sha256": instance_sha256(instance),
        "n": instance.zeta.n,
        "bundle_dim": instance.zeta.m_prime,
    }


def equality_class_to_dict(eq) -> dict:
    doc: dict = {"tag": eq.tag.value, "mu": eq.mu}
    if eq.tangent_frame is not None:
        doc["tangent_frame"] = eq.tangent_frame.tolist()
    if eq.bundle_frame is not None:
        doc["bundle_frame"] = eq.bundle_frame.tolist()
    return doc


def bound_report_to_dict(report: BoundReport) -> dict:
    return {
        "mode": report.mode.value,
        "bound_value": report.bound_value,
        "ricci_max": report.ricci_max,
        "argmax_direction": report.argmax_direction.tolist(),
        "gap": report.gap,
        "symmetry_certified": report.symmetry_certified,
        "equality_class": equality_class_to_dict(report.equality_class),
    }


def _symmetry_block(zeta: BundleValuedForm, tol: float) -> dict:
    tensor = build_T_from_zeta(zeta)
    report = validate_curvature_symmetries(tensor, tol)
    return {
        "skew_first_pair": report.skew_first_pair,
        "skew_second_pair": report.skew_second_pair,
        "first_bianchi": report.first_bianchi,
        "pair_exchange": pair_exchange_residual(tensor),
        "gauss_residual": verify_gauss(tensor, zeta),
        "passed": report.passed,
    }


def _zeta_block(zeta: BundleValuedForm, tol: float) -> dict:
    try:
        symmetric, residual = is_totally_symmetric(zeta, tol)
        residual_field: float | None = residual
    except BundleTooSmall:
        symmetric, residual_field = False, None
    kernel = null_space(zeta)
    return {
        "norm_sq": zeta_norm_sq(zeta),
        "trace": trace_zeta(zeta).tolist(),
        "trace_norm_sq": trace_norm_sq(zeta),
        "mean_curvature_sq": mean_curvature_sq(zeta),
        "totally_symmetric": symmetric,
        "total_symmetry_residual": residual_field,
        "null_space_dim": int(kernel.shape[0]),
        "null_space": kernel.tolist(),
    }


def _ambient_block(
    model: AmbientModel, zeta: BundleValuedForm, improved_certified: bool, tol: float
) -> tuple[dict, list[str]]:
    offset = ricci_offset(model, zeta.n)
    app = application_bound(model, zeta)
    base = base_bound(model, zeta)
    tensor_bound = check_bound(
        zeta,
        BoundMode.GENERAL
        if model.kind is AmbientKind.REAL_SPACE_FORM
        else BoundMode.IMPROVED,
        tol,
    )
    intrinsic_max = tensor_bound.ricci_max + offset
    certified = (
        True if model.kind is AmbientKind.REAL_SPACE_FORM else improved_certified
    )
    holds = intrinsic_max <= app + tol
    doc: dict = {"kind": model.kind.value, "c": model.c}
    if model.theta is not None:
        doc["theta"] = model.theta
    doc.update(
        {
            "ricci_offset": offset,
            "application_bound": app,
            "intrinsic_ricci_max": intrinsic_max,
            "decomposition_residual": abs(app - (base + offset)),
            "claim_certified": certified,
            "holds": holds,
        }
    )
    failures: list[str] = []
    if certified and not holds:
        failures.append(
            f"ambient bound violated: intrinsic max {intrinsic_max!r} exceeds "
            f"{app!r}"
        )
    if not certified:
        failures.append(
            "ambient claim not certified: form fails the total-symmetry hypothesis"
        )
    return doc, failures


def _corollary_block(zeta: BundleValuedForm, argmax: np.ndarray, tol: float) -> dict:
    rows = []
    directions = [("argmax", argmax)]
    basis = np.eye(zeta.n)
    directions.extend((f"e{j + 1}", basis[j]) for j in range(zeta.n))
    all_verified = True
    for label, vector in directions:
        triple = corollary_triple(zeta, vector, tol)
        all_verified = all_verified and triple.verified
        rows.append(
            {
                "direction": label,
                "equality_at_x": triple.equality_at_x,
                "trace_zero": triple.trace_zero,
                "in_null_space": triple.in_null_space,
                "verified": triple.verified,
            }
        )
    return {"rows": rows, "all_verified": all_verified}


def build_instance_report(
    instance: Instance, tol: float, source: str = "<memory>"
) -> tuple[dict, int]:
    """Full diagnostic report for one instance; returns (report, exit code)."""
    zeta = instance.zeta
    failures: list[str] = []
    symmetry = _symmetry_block(zeta, tol)
    if not symmetry["passed"]:
        failures.append("curvature symmetries failed on the built tensor")
    general = check_bound(zeta, BoundMode.GENERAL, tol)
    improved = check_bound(zeta, BoundMode.IMPROVED, tol)
    if general.gap < -tol:
        failures.append(f"general bound violated: gap {general.gap!r}")
    if improved.symmetry_certified and improved.gap < -tol:
        failures.append(f"improved bound violated: gap {improved.gap!r}")
    doc: dict = {
        "version": 1,
        "kind": "instance-report",
        "tool": _tool_block(),
        "instance": _instance_block(instance, source),
        "tolerance": tol,
        "symmetry": symmetry,
        "zeta": _zeta_block(zeta, tol),
        "bounds": {
            "general": bound_report_to_dict(general),
            "improved": bound_report_to_dict(improved),
        },
    }
    if instance.ambient is not None:
        ambient_doc, ambient_failures = _ambient_block(
            instance.ambient, zeta, improved.symmetry_certified, tol
        )
        doc["ambient"] = ambient_doc
        failures.extend(ambient_failures)
    if instance.structure is not None:
        structure_doc: dict = {"kind": instance.structure.kind}
        if instance.structure.theta is not None:
            structure_doc["theta"] = instance.structure.theta
        doc["structure"] = structure_doc
    doc["corollary"] = _corollary_block(zeta, general.argmax_direction, tol)
    if not doc["corollary"]["all_verified"]:
        failures.append("corollary truth table shows exactly two statements true")
    doc["failures"] = failures
    return doc, (1 if failures else 0)


def build_check_report(
    instance: Instance, tol: float, source: str = "<memory>"
) -> tuple[dict, int]:
    """Symmetry and Gauss-residual gate for one instance."""
    symmetry = _symmetry_block(instance.zeta, tol)
    failures = []
    if not symmetry["passed"]:
        failures.append("curvature symmetries failed on the built tensor")
    if symmetry["gauss_residual"] > tol:
        failures.append(
            f"Gauss residual {symmetry['gauss_residual']!r} exceeds tol"
        )
    doc = {
        "version": 1,
        "kind": "check-report",
        "tool": _tool_block(),
        "instance": _instance_block(instance, source),
        "tolerance": tol,
        "symmetry": symmetry,
        "failures": failures,
    }
    return doc, (1 if failures else 0)


def build_bound_report(
    instance: Instance, mode: BoundMode, tol: float, source: str = "<memory>"
) -> tuple[dict, int]:
    """Single-mode bound evaluation; exit 1 on violation or failed certification."""
    report = check_bound(instance.zeta, mode, tol)
    failures = []
    if report.gap < -tol:
        failures.append(f"{mode.value} bound violated: gap {report.gap!r}")
    if mode is BoundMode.IMPROVED and not report.symmetry_certified:
        failures.append(
            "improved bound not certified: form fails the total-symmetry hypothesis"
        )
    doc = {
        "version": 1,
        "kind": "bound-report",
        "tool": _tool_block(),
        "instance": _instance_block(instance, source),
        "tolerance": tol,
        "bound": bound_report_to_dict(report),
        "failures": failures,
    }
    return doc, (1 if failures else 0)


def build_nullspace_report(
    instance: Instance, rank_tol: float, source: str = "<memory>"
) -> tuple[dict, int]:
    kernel = null_space(instance.zeta, rank_tol)
    doc = {
        "version": 1,
        "kind": "nullspace-report",
        "tool": _tool_block(),
        "instance": _instance_block(instance, source),
        "rank_tol": rank_tol,
        "basis_dim": int(kernel.shape[0]),
        "basis": kernel.tolist(),
    }
    return doc, 0


def run_sample(
    n: int,
    bundle_dim: int,
    count: int,
    seed: int,
    family: str,
    ambient: AmbientModel | None,
    tol: float,
) -> tuple[dict, int]:
    """Seeded sampling campaign; aggregation order is fixed by instance index."""
    if family not in ("general", "symmetric"):
        raise ValidationError(f"family must be 'general' or 'symmetric', got {family!r}")
    if count < 0:
        raise ValidationError(f"count must be non-negative, got {count}")
    if family == "symmetric" and bundle_dim < n:
        raise ValidationError(
            f"symmetric sampling needs bundle_dim >= n, got {bundle_dim} < {n}"
        )
    if ambient is not None and ambient.kind is not AmbientKind.REAL_SPACE_FORM:
        if family != "symmetric":
            raise ValidationError(
                f"ambient kind {ambient.kind.value!r} requires --family symmetric"
            )
    rng = np.random.default_rng(seed)
    violations: list[dict] = []
    symmetric_count = 0
    max_gauss = 0.0
    max_symmetry = 0.0
    min_gap_general = float("inf")
    min_gap_improved = float("inf")
    min_ambient_margin = float("inf")
    for index in range(count):
        if family == "general":
            zeta = sample_general(rng, n, bundle_dim)
        else:
            zeta = sample_symmetric(rng, n, bundle_dim)
        tensor = build_T_from_zeta(zeta)
        sym = validate_curvature_symmetries(tensor, tol)
        max_symmetry = max(max_symmetry, sym.max_residual)
        max_gauss = max(max_gauss, verify_gauss(tensor, zeta))
        if not sym.passed:
            violations.append(
                {"index": index, "kind": "symmetry", "detail": sym.max_residual}
            )
        try:
            symmetric, _ = is_totally_symmetric(zeta, tol)
        except BundleTooSmall:
            symmetric = False
        if symmetric:
            symmetric_count += 1
        general = check_bound(zeta, BoundMode.GENERAL, tol)
        min_gap_general = min(min_gap_general, general.gap)
        if general.gap < -tol:
            violations.append(
                {"index": index, "kind": "general-bound", "detail": general.gap}
            )
        improved = None
        if family == "symmetric":
            improved = check_bound(zeta, BoundMode.IMPROVED, tol)
            min_gap_improved = min(min_gap_improved, improved.gap)
            if not improved.symmetry_certified:
                violations.append(
                    {"index": index, "kind": "certification", "detail": None}
                )
            elif improved.gap < -tol:
                violations.append(
                    {"index": index, "kind": "improved-bound", "detail": improved.gap}
                )
        if ambient is not None:
            offset = ricci_offset(ambient, n)
            app = application_bound(ambient, zeta)
            reference = general if ambient.kind is AmbientKind.REAL_SPACE_FORM else improved
            if reference is None:
                reference = check_bound(zeta, BoundMode.IMPROVED, tol)
            margin = app - (reference.ricci_max + offset)
            min_ambient_margin = min(min_ambient_margin, margin)
            if margin < -tol:
                violations.append(
                    {"index": index, "kind": "ambient-bound", "detail": margin}
                )
    params: dict = {
        "n": n,
        "bundle_dim": bundle_dim,
        "count": count,
        "seed": seed,
        "family": family,
    }
    if ambient is not None:
        ambient_doc: dict = {"kind": ambient.kind.value, "c": ambient.c}
        if ambient.theta is not None:
            ambient_doc["theta"] = ambient.theta
        params["ambient"] = ambient_doc
    results: dict = {
        "instances": count,
        "symmetric_count": symmetric_count,
        "max_gauss_residual": max_gauss,
        "max_symmetry_residual": max_symmetry,
        "min_gap_general": None if count == 0 else min_gap_general,
        "min_gap_improved": (
            None if family != "symmetric" or count == 0 else min_gap_improved
        ),
        "min_ambient_margin": (
            None if ambient is None or count == 0 else min_ambient_margin
        ),
        "violations": violations,
        "all_pass": not violations,
    }
    doc = {
        "version": 1,
        "kind": "sample-report",
        "tool": _tool_block(),
        "prng": PRNG_NAME,
        "tolerance": tol,
        "params": params,
        "results": results,
    }
    return doc, (0 if not violations else 1)


def _scalar_text(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, str):
        return value
    if value is None:
        return "null"
    raise TypeError(f"cannot render {type(value)!r}")


def _is_scalar(value) -> bool:
    return not isinstance(value, (dict, list, tuple, np.ndarray))


def _inline_list(values) -> str:
    return "[" + ", ".join(_scalar_text(v) for v in values) + "]"


def _render(value, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if _is_scalar(item):
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
            elif isinstance(item, (list, tuple, np.ndarray)) and all(
                _is_scalar(x) for x in item
            ):
                lines.append(f"{pad}{key}: {_inline_list(item)}")
            else:
                lines.append(f"{pad}{key}:")
                _render(item, depth + 1, lines)
    else:
        for item in value:
            if _is_scalar(item):
                lines.append(f"{pad}- {_scalar_text(item)}")
            elif isinstance(item, (list, tuple, np.ndarray)) and all(
                _is_scalar(x) for x in item
            ):
                lines.append(f"{pad}- {_inline_list(item)}")
            else:
                lines.append(f"{pad}-")
                _render(item, depth + 1, lines)


def render_text(doc: dict) -> str:
    """Line-oriented rendering that mirrors the JSON report field for field."""
    lines: list[str] = []
    _render(doc, 0, lines)
    return "\n".join(lines) + "\n"


def render_report(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(doc)
    if fmt == "text":
        return render_text(doc)
    raise ValidationError(f"format must be 'json' or 'text', got {fmt!r}")
