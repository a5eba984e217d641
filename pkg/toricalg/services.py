import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from config.settings import SATURATION_CHECK_LIMIT
from cone.services import contains
from demazure.models import Box
from demazure.services import classify_root, root_oracle, root_pairings
from linalg.models import Vector
from linalg.services import add, pairing
from shared.errors import ConsistencyError, DimensionError, DomainError

from .models import AlgebraElement, Coefficient, ToricLND, WeightMonoid

logger = logging.getLogger(__name__)


# =========================================
# WEIGHT MONOIDS
# =========================================
def monoid_membership(w: WeightMonoid, u: Sequence[int]) -> bool:
    """u ∈ M ∩ 𝒢, i.e. membership in the saturation of Γ."""

    if len(u) != w.ambient_rank:
        raise DimensionError(f"Vector {tuple(u)!r} does not live in rank {w.ambient_rank}")

    return u in w.lattice and contains(w.g_cone, u)


@lru_cache(maxsize=256)
def saturation_gaps(w: WeightMonoid) -> tuple[Vector, ...]:
    """Points of 𝒢 ∩ M that are not sums of generators, within the check box.

    The box is spanned by pairwise sums of generators (capped by SATURATION_CHECK_LIMIT);
    sums are explored up to twice that bound.
    """

    bound = max((abs(a + b) for g in w.generators for h in w.generators for a, b in zip(g, h)), default=0)
    bound = min(bound, SATURATION_CHECK_LIMIT)
    reach = 2 * bound

    zero = (0,) * w.ambient_rank
    reached = {zero}
    queue = deque([zero])
    while queue:
        point = queue.popleft()
        for generator in w.generators:
            candidate = add(point, generator)
            if candidate not in reached and all(abs(x) <= reach for x in candidate):
                reached.add(candidate)
                queue.append(candidate)

    return tuple(
        point
        for point in Box(bound).points(w.ambient_rank)
        if point not in reached and monoid_membership(w, point)
    )


def build_weight_monoid(ambient_rank: int, generators: Sequence[Sequence[int]]) -> WeightMonoid:
    monoid = WeightMonoid.of(ambient_rank, generators)

    gaps = saturation_gaps(monoid)
    if gaps:
        logger.warning(
            "Monoid generated by %r is not saturated (e.g. %r); cone-level answers refer to its saturation",
            monoid.generators,
            gaps[0],
        )

    return monoid


# =========================================
# LOCALLY NILPOTENT DERIVATIONS
# =========================================
def make_lnd(w: WeightMonoid, e: Sequence[int]) -> ToricLND:
    root = classify_root(w.g_cone, w.m_basis, e)
    if root is None:
        pairings = root_pairings(w.g_cone, w.m_basis, e)
        raise DomainError(
            f"{tuple(e)!r} is not a Demazure root of the monoid generated by {w.generators!r}",
            diagnostics={
                "e": list(e),
                "in_lattice": pairings is not None,
                "pairings": [{"ray": list(rho), "value": value} for rho, value in (pairings or {}).items()],
            },
        )

    return ToricLND(monoid=w, root=root)


def _require_monoid(w: WeightMonoid, u: Sequence[int]):
    if not monoid_membership(w, u):
        raise DomainError(f"{tuple(u)!r} is not in the weight monoid generated by {w.generators!r}")


def root_weight(d: ToricLND, u: Sequence[int]) -> int:
    """<rho, u> for u ∈ M."""

    x = d.monoid.lattice.lattice_coordinates(u)
    if x is None:
        raise DomainError(f"{tuple(u)!r} is not in M")

    return int(pairing(d.root.rho, x))


def lnd_apply(d: ToricLND, f: AlgebraElement) -> AlgebraElement:
    for u in f.support:
        _require_monoid(d.monoid, u)

    result = AlgebraElement.from_terms(
        (add(u, d.root.e), c * k) for u, c in f.terms if (k := root_weight(d, u)) != 0
    )

    for u in result.support:
        if not monoid_membership(d.monoid, u):
            logger.error("Derivation along %r left the monoid at %r", d.root.e, u)
            raise ConsistencyError(f"∂ of {f!r} has support point {u!r} outside the monoid")

    return result


def lnd_nilpotency_index(d: ToricLND, u: Sequence[int]) -> int:
    _require_monoid(d.monoid, u)

    f = AlgebraElement.monomial(u)
    index = 0
    while f:
        f = lnd_apply(d, f)
        index += 1

    expected = root_weight(d, u) + 1
    if index != expected:
        raise ConsistencyError(f"Nilpotency index of {tuple(u)!r} is {index}, expected {expected}")

    return index


def exp_action(d: ToricLND, s: Coefficient, f: AlgebraElement) -> AlgebraElement:
    """exp(s·∂)(f) = Σ s^k/k! ∂^k(f); the sum is finite."""

    s = Fraction(s)
    for u in f.support:
        _require_monoid(d.monoid, u)

    result, term, k = f, f, 0
    while term:
        k += 1
        term = lnd_apply(d, term) * (s / k)
        result = result + term

    return result


def kernel_membership(d: ToricLND, u: Sequence[int]) -> bool:
    _require_monoid(d.monoid, u)
    return root_weight(d, u) == 0


def divisor_ideal_membership(w: WeightMonoid, rho: Sequence[int], u: Sequence[int]) -> bool:
    _require_monoid(w, u)

    oracle = root_oracle(w.g_cone, w.m_basis)
    if tuple(rho) not in oracle.rays:
        raise DomainError(f"{tuple(rho)!r} is not a ray of the dual cone", diagnostics={"rays": list(oracle.rays)})

    return pairing(rho, oracle.lattice.lattice_coordinates(u)) > 0


def equivalent(d1: ToricLND, d2: ToricLND) -> bool:
    """Same root subgroup up to conjugation: equal kernels, i.e. equal rays."""

    if d1.monoid != d2.monoid:
        raise DomainError("Cannot compare derivations of different monoids")

    same_ray = d1.root.rho == d2.root.rho
    same_kernel = all(kernel_membership(d1, u) == kernel_membership(d2, u) for u in d1.monoid.generators)

    if same_ray != same_kernel:
        logger.error("Rays %r, %r disagree with kernels on generators", d1.root.rho, d2.root.rho)
        raise ConsistencyError(f"Kernel comparison disagrees with rays {d1.root.rho!r} and {d2.root.rho!r}")

    return same_ray


def moved_divisor(d: ToricLND) -> Vector:
    rho = d.root.rho

    for u in d.monoid.generators:
        if not divisor_ideal_membership(d.monoid, rho, u):
            continue
        image = exp_action(d, 1, AlgebraElement.monomial(u))
        if any(not divisor_ideal_membership(d.monoid, rho, v) for v in image.support):
            return rho

    logger.error("No generator witnesses that %r moves the divisor of %r", d.root.e, rho)
    raise ConsistencyError(f"Derivation along {d.root.e!r} keeps the ideal of {rho!r} stable")
