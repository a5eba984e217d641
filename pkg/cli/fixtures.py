"""
Built-in verification suite run by `verify`.

Every check loads an input file from FIXTURES_DIR and compares engine output with
values worked out by hand.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from config.settings import FIXTURES_DIR
from cone.models import Cone
from cone.services import dual_cone, rays
from demazure.models import Box
from demazure.services import enumerate_roots
from horo import services as horo
from horo.models import HoroDatum
from linalg.models import IntegerMatrix
from shared.errors import RootGroupsError
from sphrank1 import services as sphrank1
from sphrank1.models import RankOneDatum
from toricalg.models import AlgebraElement
from toricalg.services import build_weight_monoid, lnd_apply, make_lnd, moved_divisor

from .parser import parse_text
from .serializers import InputDescription

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = []


def check(name: str):
    def register(func: Callable[[], tuple[bool, str]]):
        CHECKS.append((name, func))
        return func

    return register


def load(filename: str) -> InputDescription:
    path = FIXTURES_DIR / filename
    return parse_text(path.read_text(encoding="utf-8"), source=filename)


def _cone(description: InputDescription) -> Cone:
    return Cone.generated_by(description.ambient_rank, description.generators)


def _rank_one(description: InputDescription) -> RankOneDatum:
    return sphrank1.build_datum(
        description.ambient_rank, description.alpha, description.alpha_dual, description.generators
    )


def _horo(description: InputDescription) -> HoroDatum:
    return horo.build_horo_datum(description.ambient_rank, description.generators, description.coroots or [])


# =========================================
# CONES AND ROOTS
# =========================================
@check("orthant dual rays")
def orthant_dual() -> tuple[bool, str]:
    found = rays(dual_cone(_cone(load("orthant2.txt")))).rays
    return found == ((0, 1), (1, 0)), f"rays {found}"


@check("orthant roots in box 2")
def orthant_roots() -> tuple[bool, str]:
    groups = enumerate_roots(_cone(load("orthant2.txt")), IntegerMatrix.identity(2), Box(2))
    expected = {(1, 0): [(-1, 0), (-1, 1), (-1, 2)], (0, 1): [(0, -1), (1, -1), (2, -1)]}
    return groups == expected, f"groups {groups}"


@check("extended cone dual rays")
def gbar_dual() -> tuple[bool, str]:
    found = rays(dual_cone(_cone(load("f1_gbar.txt")))).rays
    return found == ((0, 0, -1), (0, 1, 0), (1, 0, 1)), f"rays {found}"


@check("derivation on the polynomial ring")
def polynomial_derivation() -> tuple[bool, str]:
    description = load("polynomial_ring2.txt")
    lnd = make_lnd(build_weight_monoid(2, description.generators), (-1, 2))
    image = lnd_apply(lnd, AlgebraElement.monomial((3, 1)))
    passed = image == AlgebraElement.monomial((2, 3), 3) and moved_divisor(lnd) == (1, 0)
    return passed, f"image {image.terms}"


@check("dominant roots of the SO3 example")
def so3_roots() -> tuple[bool, str]:
    description = load("so3.txt")
    monoid = build_weight_monoid(2, description.generators)
    groups = enumerate_roots(monoid.g_cone, monoid.m_basis, Box(4))
    dominant = sorted(e for roots in groups.values() for e in roots if e[0] >= 0)
    expected = [(k, 2 - k) for k in range(5)]
    return dominant == expected, f"dominant roots {dominant}"


# =========================================
# RANK ONE
# =========================================
@check("rank-one fixture: ray roles")
def f1_roles() -> tuple[bool, str]:
    bar = sphrank1.build_bar(_rank_one(load("f1_rank_one.txt")))
    passed = (bar.rho0, bar.rho0p, bar.gstable_rays) == ((0, 0, -1), (1, 0, 1), ((0, 1, 0),))
    return passed, f"rho0 {bar.rho0}, rho0' {bar.rho0p}, G-stable {bar.gstable_rays}"


@check("rank-one fixture: weight sets")
def f1_weights() -> tuple[bool, str]:
    datum = _rank_one(load("f1_rank_one.txt"))
    bar = sphrank1.build_bar(datum)
    box = Box(5)
    vertical = sphrank1.vertical_weights(bar, box)
    horizontal = sphrank1.horizontal_weights(datum, bar, box)
    passed = (
        datum.alpha in vertical
        and horizontal == [(c, c, -1) for c in range(6)]
        and sphrank1.rho0p_exclusion(bar, box) == []
    )
    return passed, f"{len(vertical)} vertical, horizontal {horizontal}"


@check("rank-one fixture: moving root")
def f1_moving() -> tuple[bool, str]:
    bar = sphrank1.build_bar(_rank_one(load("f1_rank_one.txt")))
    root = sphrank1.gstable_moving_root(bar, (0, 1, 0), Box(5))
    return root.e == (0, 0, -1), f"moving root {root.e}"


@check("horospherical fixture agrees with rank one")
def f1_horospherical() -> tuple[bool, str]:
    h = _horo(load("f1_horospherical.txt"))
    datum = _rank_one(load("f1_rank_one.txt"))
    box = Box(5)
    horizontal = horo.horizontal_weight_set(h, box)
    same = horizontal == sphrank1.horizontal_weights(datum, sphrank1.build_bar(datum), box)
    witness = horo.moving_witness(h, (0, 1), box)
    passed = same and horo.g_stable_divisor_rays(h) == [(0, 1)] and witness.e == (0, 0, -1)
    return passed, f"horizontal {horizontal}, witness {witness.e}"


@check("rank-one monoid of rank one")
def rank_one_line() -> tuple[bool, str]:
    datum = _rank_one(load("rank_one_line.txt"))
    bar = sphrank1.build_bar(datum)
    vertical = sphrank1.vertical_weights(bar, Box(3))
    horizontal = sphrank1.horizontal_weights(datum, bar, Box(3))
    passed = vertical == [(1, -1), (2, 0), (3, 1)] and horizontal == [] and bar.gstable_rays == ()
    return passed, f"vertical {vertical}, horizontal {horizontal}"


@check("toric criterion rejects alpha in the span")
def not_toric() -> tuple[bool, str]:
    result = sphrank1.check_toric(_rank_one(load("not_toric.txt")))
    return (not result.is_toric and result.combination == (1, 1)), result.diagnostics


@check("G-saturated monoid has no horizontal weights")
def g_saturated() -> tuple[bool, str]:
    h = _horo(load("half_plane.txt"))
    box = Box(4)
    passed = horo.is_g_saturated(h, box) and horo.horizontal_weight_set(h, box) == []
    return passed, "saturated" if passed else "not saturated or weights found"


def run_checks() -> list[CheckResult]:
    results = []
    for name, func in CHECKS:
        try:
            passed, detail = func()
        except RootGroupsError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc.message}"
        logger.debug("check %r: %s", name, passed)
        results.append(CheckResult(name=name, passed=passed, detail=detail))

    return results
