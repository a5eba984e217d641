import logging
from typing import Iterable, Sequence

from cone.services import contains, dual_cone
from demazure.models import Box, DemazureRoot
from demazure.services import enumerate_roots, root_oracle, subcone_witness
from linalg.models import Vector
from linalg.services import add, pairing, scale
from shared.errors import BoxTooSmall, ConsistencyError, DimensionError, DomainError, TheoremViolation
from toricalg.services import build_weight_monoid, monoid_membership, saturation_gaps

from .models import HoroDatum, HoroReport, ShadowElement

logger = logging.getLogger(__name__)

UPPER_BOUND_NOTE = (
    "For horospherical X the horizontal weights are exactly the dominant Demazure roots; "
    "for other spherical X this set is an upper bound."
)


def build_horo_datum(
    ambient_rank: int, generators: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]]
) -> HoroDatum:
    for coroot in coroots:
        if len(coroot) != ambient_rank:
            raise DimensionError(f"Coroot {tuple(coroot)!r} does not live in rank {ambient_rank}")

    datum = HoroDatum(
        ambient_rank=ambient_rank,
        gamma=build_weight_monoid(ambient_rank, generators),
        dominant_coroots=tuple(tuple(c) for c in coroots),
    )

    negative = [g for g in datum.gamma.generators if not is_dominant(datum, g)]
    if negative:
        raise DomainError(
            f"Generators {negative!r} are not dominant",
            diagnostics={"not_dominant": [list(g) for g in negative]},
        )

    return datum


def is_dominant(h: HoroDatum, lam: Sequence[int]) -> bool:
    return all(pairing(c, lam) >= 0 for c in h.dominant_coroots)


def orbit_weight_membership(h: HoroDatum, lam: Sequence[int]) -> bool:
    """λ ∈ ZΓ ∩ Λ⁺, checked per point."""

    return lam in h.gamma.lattice and is_dominant(h, lam)


def is_g_saturated(h: HoroDatum, box: Box) -> bool:
    """Every in-box point of ZΓ ∩ Λ⁺ lies in Γ; complete only within the box."""

    return all(
        monoid_membership(h.gamma, point)
        for point in box.points(h.ambient_rank)
        if orbit_weight_membership(h, point)
    )


def horizontal_weight_set(h: HoroDatum, box: Box) -> list[Vector]:
    gamma = h.gamma
    groups = enumerate_roots(gamma.g_cone, gamma.m_basis, box)
    weights = sorted(e for group in groups.values() for e in group if is_dominant(h, e))

    if weights and is_g_saturated(h, box):
        raise TheoremViolation(
            f"G-saturated monoid has horizontal weights {weights!r}",
            diagnostics={"weights": [list(e) for e in weights]},
        )

    return weights


def _ray_weight(h: HoroDatum, rho: Sequence[int], lam: Sequence[int]) -> int:
    return int(pairing(rho, h.gamma.lattice.lattice_coordinates(lam)))


def horo_lnd_apply(h: HoroDatum, mu: DemazureRoot, f: ShadowElement) -> ShadowElement:
    gamma = h.gamma
    if root_oracle(gamma.g_cone, gamma.m_basis).classify(mu.e) != mu or not is_dominant(h, mu.e):
        raise DomainError(f"{mu!r} is not a horizontal weight with its ray")

    for lam in f.support:
        if not orbit_weight_membership(h, lam):
            raise DomainError(f"{lam!r} is not a dominant weight of ZΓ")

    return ShadowElement.from_terms(
        (add(lam, mu.e), c * k) for lam, c in f.terms if (k := _ray_weight(h, mu.rho, lam)) != 0
    )


def g_stable_divisor_rays(h: HoroDatum) -> list[Vector]:
    oracle = root_oracle(h.gamma.g_cone, h.gamma.m_basis)
    return [rho for rho in oracle.rays if not contains(h.e_tilde, rho)]


def _moves_divisor(h: HoroDatum, mu: DemazureRoot) -> bool:
    """Some generator in the ideal of the divisor is carried out of it by iterating ∂_μ."""

    for u in h.gamma.generators:
        weight = _ray_weight(h, mu.rho, u)
        if weight <= 0:
            continue

        f = ShadowElement.monomial(u)
        for _ in range(weight):
            f = horo_lnd_apply(h, mu, f)
        if any(_ray_weight(h, mu.rho, lam) == 0 for lam in f.support):
            return True

    return False


def _verify_moving(h: HoroDatum, mu: DemazureRoot):
    gamma = h.gamma
    pairings = root_oracle(gamma.g_cone, gamma.m_basis).pairings(mu.e) or ()
    rays = root_oracle(gamma.g_cone, gamma.m_basis).rays

    checks = {
        "pairs to -1 with its ray": dict(zip(rays, pairings)).get(mu.rho) == -1,
        "non-negative on other rays": all(v >= 0 for rho, v in zip(rays, pairings) if rho != mu.rho),
        "dominant": is_dominant(h, mu.e),
        "moves the divisor": _moves_divisor(h, mu),
    }
    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        logger.error("Witness %r fails %r", mu, failed)
        raise ConsistencyError(f"Moving witness {mu!r} fails: {', '.join(failed)}")


def moving_witness(h: HoroDatum, rho: Sequence[int], box: Box, exclude: Iterable[Sequence[int]] = ()) -> DemazureRoot:
    rho = tuple(rho)
    if rho not in g_stable_divisor_rays(h):
        raise DomainError(f"{rho!r} is not a G-stable divisor ray")

    excluded = {tuple(e) for e in exclude}
    gamma = h.gamma
    roots = [e for e in enumerate_roots(gamma.g_cone, gamma.m_basis, box)[rho] if e not in excluded]

    dominant = [e for e in roots if is_dominant(h, e)]
    if dominant:
        mu = DemazureRoot(e=dominant[0], rho=rho)
    elif roots:
        oracle = root_oracle(gamma.g_cone, gamma.m_basis)
        x0 = oracle.lattice.lattice_coordinates(roots[0])
        g_tilde = dual_cone(h.e_tilde)
        v, k0 = subcone_witness(oracle.local_cone, g_tilde, rho, DemazureRoot(e=x0, rho=rho))
        mu = DemazureRoot(e=oracle.lattice.point(add(x0, scale(k0, v))), rho=rho)
        logger.info("No dominant root of %r in box %d; translated %r to %r", rho, box.bound, roots[0], mu.e)
        if mu.e not in box or mu.e in excluded:
            raise BoxTooSmall(
                f"No dominant root of {rho!r} with coordinates bounded by {box.bound}",
                diagnostics={"witness": list(mu.e), "required_bound": max(map(abs, mu.e))},
            )
    else:
        raise BoxTooSmall(f"No root of {rho!r} with coordinates bounded by {box.bound}")

    _verify_moving(h, mu)

    return mu


def classification_report(h: HoroDatum, box: Box) -> HoroReport:
    oracle = root_oracle(h.gamma.g_cone, h.gamma.m_basis)
    g_stable = g_stable_divisor_rays(h)

    return HoroReport(
        box_bound=box.bound,
        restricted_coroots=h.restricted_coroots,
        e_tilde_generators=h.e_tilde.generators,
        rays=oracle.rays,
        g_stable_rays=tuple(g_stable),
        horizontal=tuple(horizontal_weight_set(h, box)),
        g_saturated=is_g_saturated(h, box),
        moving_roots=tuple(moving_witness(h, rho, box) for rho in g_stable),
        saturation_gaps=saturation_gaps(h.gamma),
        note=UPPER_BOUND_NOTE,
    )
