import logging
from typing import Sequence

from cone.models import Cone
from cone.services import dual_cone, facet_of, is_full_dimensional, rays, same_cone
from demazure.models import Box, DemazureRoot
from demazure.services import enumerate_roots, root_oracle
from linalg.models import IntegerMatrix, Sublattice, Vector
from linalg.services import add, in_rational_span, pairing, rational_combination, scale
from shared.errors import (
    BoxTooSmall,
    ConsistencyError,
    DimensionError,
    DomainError,
    NotToricError,
    StructureError,
    TheoremViolation,
)
from toricalg.models import WeightMonoid
from toricalg.services import build_weight_monoid, make_lnd, moved_divisor, saturation_gaps

from .enums import RayRole
from .models import BarStructure, ClassificationReport, MovingRoot, RankOneDatum, RayEntry, ToricCheck

logger = logging.getLogger(__name__)

UNIQUENESS_NOTE = "Each B-root subgroup on X is uniquely determined by its weight."


def build_datum(
    ambient_rank: int, alpha: Sequence[int], alpha_dual: Sequence[int], generators: Sequence[Sequence[int]]
) -> RankOneDatum:
    return RankOneDatum(
        ambient_rank=ambient_rank,
        alpha=tuple(alpha),
        alpha_dual=tuple(alpha_dual),
        gamma=build_weight_monoid(ambient_rank, generators),
    )


def validate_root_datum(datum: RankOneDatum):
    n = datum.ambient_rank
    for name, vector in (("alpha", datum.alpha), ("alpha_dual", datum.alpha_dual)):
        if len(vector) != n:
            raise DimensionError(f"{name} {vector!r} does not live in rank {n}")

    if pairing(datum.alpha_dual, datum.alpha) != 2:
        raise DomainError(
            f"Malformed root datum: <alpha_dual, alpha> = {pairing(datum.alpha_dual, datum.alpha)}, expected 2",
            diagnostics={"alpha": list(datum.alpha), "alpha_dual": list(datum.alpha_dual)},
        )

    negative = [g for g in datum.gamma.generators if pairing(datum.alpha_dual, g) < 0]
    if negative:
        raise DomainError(
            f"Generators {negative!r} are not dominant",
            diagnostics={"not_dominant": [list(g) for g in negative]},
        )


def check_toric(datum: RankOneDatum) -> ToricCheck:
    """X is toric under T iff α is not in the rational span of Γ."""

    validate_root_datum(datum)

    generators = datum.gamma.generators
    if not in_rational_span(datum.alpha, generators):
        return ToricCheck(is_toric=True, diagnostics="alpha is not in the rational span of the weight monoid")

    combination = rational_combination(datum.alpha, generators)
    if combination is None:
        raise ConsistencyError(f"alpha {datum.alpha!r} is in the span of {generators!r} but no combination was found")

    terms = " + ".join(f"{c}*{g}" for c, g in zip(combination, generators) if c)
    return ToricCheck(is_toric=False, combination=combination, diagnostics=f"alpha = {terms}")


def weyl_reflect(datum: RankOneDatum, lam: Sequence[int]) -> Vector:
    d = int(pairing(datum.alpha_dual, lam))
    return tuple(a - d * b for a, b in zip(lam, datum.alpha))


# =========================================
# BAR STRUCTURE
# =========================================
def build_bar(datum: RankOneDatum) -> BarStructure:
    check = check_toric(datum)
    if not check.is_toric:
        raise NotToricError(
            f"X is not toric under T: {check.diagnostics}",
            diagnostics={
                "combination": [str(c) for c in check.combination or ()],
                "generators": [list(g) for g in datum.gamma.generators],
            },
        )

    n = datum.ambient_rank
    gamma = datum.gamma
    mbar = Sublattice(IntegerMatrix.from_rows([*gamma.m_basis.rows, datum.alpha], col_count=n))

    ambient_generators = [*gamma.generators, *(weyl_reflect(datum, g) for g in gamma.generators)]
    gbar_ambient = Cone.generated_by(n, ambient_generators)
    gbar = Cone.generated_by(mbar.rank, [mbar.coordinates(g) for g in ambient_generators])
    if not is_full_dimensional(gbar):
        raise StructureError(
            "w(𝒢) = 𝒢: the reflection fixes every generator and Ḡ is not full-dimensional",
            diagnostics={"generators": [list(g) for g in gamma.generators]},
        )

    ebar = rays(dual_cone(gbar))
    alpha_bar = (0,) * (mbar.rank - 1) + (1,)
    values = {rho: int(pairing(rho, alpha_bar)) for rho in ebar}

    negative = [rho for rho, value in values.items() if value < 0]
    positive = [rho for rho, value in values.items() if value > 0]
    if len(negative) != 1 or len(positive) != 1 or values[negative[0]] != -1 or values[positive[0]] != 1:
        logger.error("Rays %r pair with alpha as %r", ebar.rays, values)
        raise ConsistencyError(
            "Rays of the extended dual cone do not split as rho0 / rho0' / alpha-orthogonal",
            diagnostics={"rays": [{"ray": list(rho), "alpha": value} for rho, value in values.items()]},
        )

    bar = BarStructure(
        datum=datum,
        mbar=mbar,
        gbar=gbar,
        gbar_ambient=gbar_ambient,
        ebar_rays=ebar,
        rho0=negative[0],
        rho0p=positive[0],
        gstable_rays=tuple(rho for rho in ebar if values[rho] == 0),
    )
    _verify_bar(bar)

    return bar


def _verify_bar(bar: BarStructure):
    gamma = bar.datum.gamma
    local = [bar.to_bar(g) for g in gamma.generators]
    g_local = Cone.generated_by(bar.rank, local)
    w_local = Cone.generated_by(bar.rank, [bar.reflect_bar(x) for x in local])

    if not same_cone(facet_of(bar.gbar, bar.rho0), g_local):
        raise ConsistencyError(f"Facet of rho0 {bar.rho0!r} is not the weight cone")
    if not same_cone(facet_of(bar.gbar, bar.rho0p), w_local):
        raise ConsistencyError(f"Facet of rho0' {bar.rho0p!r} is not the reflected weight cone")

    oracle = root_oracle(bar.gbar, IntegerMatrix.identity(bar.rank))
    if oracle.classify(bar.alpha_bar) != DemazureRoot(e=bar.alpha_bar, rho=bar.rho0):
        raise ConsistencyError("alpha is not a root of rho0")

    for rho in bar.gstable_rays:
        generators = set(facet_of(bar.gbar, rho).generators)
        if {bar.reflect_bar(x) for x in generators} != generators:
            raise ConsistencyError(f"Facet of the G-stable ray {rho!r} is not stable under the reflection")


def bar_weight_monoid(bar: BarStructure) -> WeightMonoid:
    """Weight monoid of X as a toric variety, in M̄-coordinates: λ - iα for 0 <= i <= d_λ."""

    generators = []
    for lam in bar.datum.gamma.generators:
        x = bar.to_bar(lam)
        d = int(pairing(bar.datum.alpha_dual, lam))
        generators.extend(add(x, scale(-i, bar.alpha_bar)) for i in range(d + 1))

    return build_weight_monoid(bar.rank, generators)


# =========================================
# WEIGHT SETS
# =========================================
def vertical_weights(bar: BarStructure, box: Box) -> list[Vector]:
    weights = enumerate_roots(bar.gbar_ambient, bar.mbar_basis, box)[bar.rho0]

    if bar.datum.alpha in box and bar.datum.alpha not in weights:
        raise ConsistencyError(f"alpha {bar.datum.alpha!r} is missing from the vertical weights")

    return weights


def horizontal_weights(datum: RankOneDatum, bar: BarStructure, box: Box) -> list[Vector]:
    gamma = datum.gamma
    groups = enumerate_roots(gamma.g_cone, gamma.m_basis, box)
    weights = sorted(e for group in groups.values() for e in group if pairing(datum.alpha_dual, e) >= 0)

    oracle = root_oracle(bar.gbar_ambient, bar.mbar_basis)
    for e in weights:
        root = oracle.classify(e)
        if root is None or pairing(bar.rho0, bar.to_bar(e)) != 0 or pairing(root.rho, bar.alpha_bar) != 0:
            logger.error("Horizontal weight %r fails the extended-cone criterion", e)
            raise ConsistencyError(f"Horizontal weight {e!r} does not extend to a root orthogonal to alpha")

    return weights


def rho0p_exclusion(bar: BarStructure, box: Box) -> list[Vector]:
    """Roots of rho0' that are vertical or horizontal weights; always empty."""

    rho0p_roots = set(enumerate_roots(bar.gbar_ambient, bar.mbar_basis, box)[bar.rho0p])
    weights = set(vertical_weights(bar, box)) | set(horizontal_weights(bar.datum, bar, box))

    overlap = sorted(rho0p_roots & weights)
    if overlap:
        raise TheoremViolation(
            f"Roots of rho0' {overlap!r} occur as weights of B-root subgroups",
            diagnostics={"overlap": [list(e) for e in overlap]},
        )

    return overlap


# =========================================
# G-STABLE DIVISORS
# =========================================
def find_moving_root(bar: BarStructure, rho: Sequence[int], box: Box, seed: Sequence[int] | None = None) -> MovingRoot:
    rho = tuple(rho)
    if rho not in bar.gstable_rays:
        raise DomainError(
            f"{rho!r} is not a G-stable ray",
            diagnostics={"gstable_rays": [list(r) for r in bar.gstable_rays]},
        )

    identity = IntegerMatrix.identity(bar.rank)
    if seed is None:
        candidates = enumerate_roots(bar.gbar, identity, box)[rho]
        if not candidates:
            raise BoxTooSmall(f"No root of {rho!r} with coordinates bounded by {box.bound}")
        seed = candidates[0]
    else:
        seed = tuple(seed)
        root = root_oracle(bar.gbar, identity).classify(seed)
        if root is None or root.rho != rho:
            raise DomainError(f"Seed {seed!r} is not a root of {rho!r}")

    shift = int(pairing(bar.rho0, seed))
    e_bar = add(seed, scale(shift, bar.alpha_bar))
    e = bar.to_ambient(e_bar)
    logger.info("Moving root for %r: seed %r, shift %d, weight %r", rho, seed, shift, e)

    gamma = bar.datum.gamma
    in_m = root_oracle(gamma.g_cone, gamma.m_basis).classify(e)
    checks = {
        "orthogonal to rho0": pairing(bar.rho0, e_bar) == 0,
        "root of the extended cone": root_oracle(bar.gbar, identity).classify(e_bar) == DemazureRoot(e_bar, rho),
        "root of the weight cone": in_m is not None,
        "dominant": pairing(bar.datum.alpha_dual, e) >= 0,
    }
    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        raise ConsistencyError(f"Moving root {e!r} for {rho!r} fails: {', '.join(failed)}")

    if moved_divisor(make_lnd(bar_weight_monoid(bar), e_bar)) != rho:
        raise ConsistencyError(f"Toric derivation along {e_bar!r} does not move the divisor of {rho!r}")

    return MovingRoot(rho=rho, seed=seed, shift=shift, e=e, e_bar=e_bar, rho_in_m=in_m.rho)


def gstable_moving_root(
    bar: BarStructure, rho: Sequence[int], box: Box, seed: Sequence[int] | None = None
) -> DemazureRoot:
    moving = find_moving_root(bar, rho, box, seed=seed)
    return DemazureRoot(e=moving.e, rho=moving.rho)


def classification_report(datum: RankOneDatum, box: Box) -> ClassificationReport:
    check = check_toric(datum)
    bar = build_bar(datum)

    entries = tuple(
        RayEntry(
            ray=rho,
            role=bar.role(rho),
            alpha_pairing=int(pairing(rho, bar.alpha_bar)),
            facet_generators=facet_of(bar.gbar, rho).generators,
        )
        for rho in bar.ebar_rays
    )
    vertical = tuple(vertical_weights(bar, box))
    horizontal = tuple(horizontal_weights(datum, bar, box))

    report = ClassificationReport(
        box_bound=box.bound,
        toric_check=check,
        mbar_basis=bar.mbar_basis.rows,
        rays=entries,
        vertical=vertical,
        vertical_bar=tuple(bar.to_bar(e) for e in vertical),
        horizontal=horizontal,
        horizontal_bar=tuple(bar.to_bar(e) for e in horizontal),
        rho0p_overlap=tuple(rho0p_exclusion(bar, box)),
        moving_roots=tuple(find_moving_root(bar, rho, box) for rho in bar.gstable_rays),
        saturation_gaps=saturation_gaps(datum.gamma),
        uniqueness_note=UNIQUENESS_NOTE,
    )
    logger.info(
        "Classified rank-one datum: %d rays, %d G-stable",
        len(entries),
        sum(entry.role == RayRole.G_STABLE for entry in entries),
    )

    return report
