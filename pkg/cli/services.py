import logging
from fractions import Fraction
from typing import Any, Callable, Sequence

from config.settings import DEFAULT_BOX_BOUND
from cone.models import Cone
from cone.services import dual_cone, facet_of, is_full_dimensional, is_strictly_convex, rays
from demazure.models import Box
from demazure.services import enumerate_roots
from horo import services as horo
from horo.models import HoroReport
from linalg.models import IntegerMatrix
from linalg.services import pairing
from shared.errors import BoxTooSmall, ConsistencyError, DomainError, InputFormatError, NotToricError, RootGroupsError
from sphrank1 import services as sphrank1
from sphrank1.enums import RayRole
from sphrank1.models import ClassificationReport
from toricalg.models import AlgebraElement, WeightMonoid
from toricalg.services import (
    build_weight_monoid,
    exp_action,
    lnd_apply,
    lnd_nilpotency_index,
    make_lnd,
    moved_divisor,
    saturation_gaps,
)

from .enums import ExitCode, InputKind
from .parser import parse_text, read_source
from .rendering import ascii_grid
from .serializers import ErrorInfo, InputDescription, Report

logger = logging.getLogger(__name__)

ROLE_LABELS = dict(RayRole.choices())

EXIT_CODES: list[tuple[type[RootGroupsError], ExitCode]] = [
    (NotToricError, ExitCode.PRECONDITION),
    (BoxTooSmall, ExitCode.BOX_TOO_SMALL),
    (ConsistencyError, ExitCode.FAILURE),
    (RootGroupsError, ExitCode.INPUT_ERROR),
]


def vec(v: Sequence[int]) -> list[int]:
    return [int(x) for x in v]


def frac(x: Fraction | int) -> str:
    return str(Fraction(x))


def element_terms(f: AlgebraElement) -> list[dict[str, Any]]:
    return [{"u": vec(u), "c": frac(c)} for u, c in f.terms]


def exit_code_for(exc: RootGroupsError) -> ExitCode:
    return next(code for error_type, code in EXIT_CODES if isinstance(exc, error_type))


def resolve_box(description: InputDescription, box: int | None) -> Box:
    if box is not None:
        return Box(box)
    if description.box is not None:
        return Box(description.box)
    return Box(DEFAULT_BOX_BOUND)


def _require_kind(description: InputDescription, *kinds: InputKind):
    if description.kind not in kinds:
        raise InputFormatError(
            f"Input kind {description.kind!s} is not supported here; expected one of {', '.join(map(str, kinds))}"
        )


def _monoid(description: InputDescription) -> WeightMonoid:
    return build_weight_monoid(description.ambient_rank, description.generators)


def _coroots(description: InputDescription) -> list[list[int]]:
    if description.coroots is not None:
        return description.coroots
    if description.alpha_dual is not None:
        return [description.alpha_dual]
    return []


def _gap_warnings(monoid: WeightMonoid) -> list[str]:
    gaps = saturation_gaps(monoid)
    if not gaps:
        return []
    return [f"monoid is not saturated (missing e.g. {list(gaps[0])}); answers refer to its saturation"]


# =========================================
# COMMANDS
# =========================================
def run_dual(description: InputDescription, box: Box) -> tuple[dict[str, Any], list[str]]:
    _require_kind(description, InputKind.CONE)

    cone = Cone.generated_by(description.ambient_rank, description.generators)
    dual = dual_cone(cone)
    dual_rays = rays(dual)

    results = {
        "generators": [vec(g) for g in cone.generators],
        "full_dimensional": is_full_dimensional(cone),
        "strictly_convex": is_strictly_convex(cone),
        "dual_generators": [vec(q) for q in dual.generators],
        "dual_rays": [vec(rho) for rho in dual_rays],
        "facets": [
            {"ray": vec(rho), "generators": [vec(g) for g in facet_of(cone, rho).generators]} for rho in dual_rays
        ],
    }

    return results, []


def run_roots(
    description: InputDescription, box: Box, filter_dominant: bool = False
) -> tuple[dict[str, Any], list[str]]:
    _require_kind(description, InputKind.CONE, InputKind.TORIC_MONOID)

    warnings: list[str] = []
    if description.kind == InputKind.CONE:
        cone = Cone.generated_by(description.ambient_rank, description.generators)
        m_basis = IntegerMatrix.identity(description.ambient_rank)
    else:
        monoid = _monoid(description)
        cone, m_basis = monoid.g_cone, monoid.m_basis
        warnings += _gap_warnings(monoid)

    groups = enumerate_roots(cone, m_basis, box)

    if filter_dominant:
        coroots = _coroots(description)
        if not coroots:
            raise InputFormatError("--filter-dominant needs a [coroots] or [alpha_dual] section")
        groups = {
            rho: [e for e in roots if all(pairing(c, e) >= 0 for c in coroots)] for rho, roots in groups.items()
        }

    results: dict[str, Any] = {
        "box": box.bound,
        "lattice_basis": [vec(b) for b in m_basis.rows],
        "dominant_only": filter_dominant,
        "rays": [{"ray": vec(rho), "roots": [vec(e) for e in roots]} for rho, roots in groups.items()],
    }
    if description.ambient_rank == 2:
        results["grid"] = ascii_grid(cone, m_basis, groups, box)

    return results, warnings


def rank_one_results(report: ClassificationReport) -> dict[str, Any]:
    return {
        "kind": str(InputKind.RANK_ONE),
        "box": report.box_bound,
        "toric": {"is_toric": report.toric_check.is_toric, "diagnostics": report.toric_check.diagnostics},
        "mbar_basis": [vec(b) for b in report.mbar_basis],
        "rays": [
            {
                "ray": vec(entry.ray),
                "role": str(entry.role),
                "role_label": ROLE_LABELS[entry.role],
                "alpha_pairing": entry.alpha_pairing,
                "facet_generators": [vec(g) for g in entry.facet_generators],
            }
            for entry in report.rays
        ],
        "vertical": [vec(e) for e in report.vertical],
        "vertical_bar": [vec(e) for e in report.vertical_bar],
        "horizontal": [vec(e) for e in report.horizontal],
        "horizontal_bar": [vec(e) for e in report.horizontal_bar],
        "rho0_prime_overlap": [vec(e) for e in report.rho0p_overlap],
        "g_stable_divisors": [
            {
                "ray": vec(moving.rho),
                "seed_bar": vec(moving.seed),
                "shift": moving.shift,
                "weight": vec(moving.e),
                "weight_bar": vec(moving.e_bar),
                "ray_in_weight_cone": vec(moving.rho_in_m),
            }
            for moving in report.moving_roots
        ],
        "uniqueness_note": report.uniqueness_note,
    }


def horo_results(report: HoroReport) -> dict[str, Any]:
    return {
        "kind": str(InputKind.HOROSPHERICAL),
        "box": report.box_bound,
        "rays": [vec(rho) for rho in report.rays],
        "restricted_coroots": [vec(c) for c in report.restricted_coroots],
        "e_tilde": [vec(g) for g in report.e_tilde_generators],
        "horizontal": [vec(e) for e in report.horizontal],
        "g_saturated": report.g_saturated,
        "g_stable_divisors": [{"ray": vec(mu.rho), "weight": vec(mu.e)} for mu in report.moving_roots],
        "note": report.note,
    }


def run_classify(description: InputDescription, box: Box) -> tuple[dict[str, Any], list[str]]:
    _require_kind(description, InputKind.RANK_ONE, InputKind.HOROSPHERICAL)

    if description.kind == InputKind.RANK_ONE:
        datum = sphrank1.build_datum(
            description.ambient_rank, description.alpha, description.alpha_dual, description.generators
        )
        report = sphrank1.classification_report(datum, box)
        return rank_one_results(report), _gap_warnings(datum.gamma)

    datum = horo.build_horo_datum(description.ambient_rank, description.generators, _coroots(description))
    report = horo.classification_report(datum, box)
    return horo_results(report), _gap_warnings(datum.gamma)


def run_act(
    description: InputDescription,
    box: Box,
    root: Sequence[int],
    terms: Sequence[tuple[Sequence[int], Fraction]],
    s: Fraction,
) -> tuple[dict[str, Any], list[str]]:
    _require_kind(description, InputKind.TORIC_MONOID)

    monoid = _monoid(description)
    lnd = make_lnd(monoid, root)
    f = AlgebraElement.from_terms(terms)
    if not f:
        raise DomainError("The element to act on is zero")

    results = {
        "root": vec(lnd.root.e),
        "ray": vec(lnd.root.rho),
        "moved_divisor": vec(moved_divisor(lnd)),
        "element": element_terms(f),
        "derivative": element_terms(lnd_apply(lnd, f)),
        "nilpotency": [{"u": vec(u), "index": lnd_nilpotency_index(lnd, u)} for u in f.support],
        "s": frac(s),
        "exp": element_terms(exp_action(lnd, s, f)),
    }

    return results, _gap_warnings(monoid)


# =========================================
# REPORTS
# =========================================
def build_report(
    command: str,
    source: str,
    runner: Callable[[InputDescription, Box], tuple[dict[str, Any], list[str]]],
    box: int | None = None,
) -> Report:
    """Parse `source` and run `runner`, turning toolkit errors into an error report."""

    description = None
    try:
        description = parse_text(read_source(source), source=source)
        resolved = resolve_box(description, box)
        results, warnings = runner(description, resolved)
    except RootGroupsError as exc:
        logger.info("%s on %s failed: %s", command, source, exc.message)
        return Report(
            command=command,
            source=source,
            input=description,
            input_text=description.to_text() if description else None,
            error=ErrorInfo(type=type(exc).__name__, message=exc.message, diagnostics=exc.diagnostics),
            exit_code=int(exit_code_for(exc)),
        )

    return Report(
        command=command,
        source=source,
        input=description,
        input_text=description.to_text(),
        box=resolved.bound,
        results=results,
        warnings=warnings,
    )
