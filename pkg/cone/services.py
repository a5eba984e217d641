from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from linalg.models import Vector
from linalg.services import negate, pairing, rank
from shared.errors import DimensionError, DomainError, StructureError

from .description import Description, describe
from .models import Cone, RaySet


def describe_dual(c: Cone) -> Description:
    """Lineality and rays of the dual cone (memoized per cone value)."""

    return describe(c.ambient_rank, c.generators)


@lru_cache(maxsize=4096)
def dual_cone(c: Cone) -> Cone:
    description = describe_dual(c)
    generators = [*description.rays, *description.lineality, *(negate(line) for line in description.lineality)]

    return Cone.generated_by(c.ambient_rank, generators)


def contains(c: Cone, v: Sequence[int | Fraction]) -> bool:
    if len(v) != c.ambient_rank:
        raise DimensionError(f"Vector {tuple(v)!r} does not live in rank {c.ambient_rank}")

    return all(pairing(q, v) >= 0 for q in dual_cone(c).generators)


def same_cone(a: Cone, b: Cone) -> bool:
    if a.ambient_rank != b.ambient_rank:
        return False

    return all(contains(a, g) for g in b.generators) and all(contains(b, g) for g in a.generators)


def is_full_dimensional(c: Cone) -> bool:
    return rank(c.generators) == c.ambient_rank


def is_strictly_convex(c: Cone) -> bool:
    return not any(contains(c, negate(g)) for g in c.generators)


@lru_cache(maxsize=4096)
def rays(c: Cone) -> RaySet:
    if not is_strictly_convex(c):
        raise StructureError(
            f"Cone generated by {c.generators!r} contains a line; its rays are not defined",
            diagnostics={"generators": [list(g) for g in c.generators]},
        )

    # c is the dual of its dual, described by the same double description
    description = describe(c.ambient_rank, dual_cone(c).generators)
    return RaySet.of(description.rays)


def facet_of(c: Cone, rho: Sequence[int]) -> Cone:
    rho = tuple(rho)
    if len(rho) != c.ambient_rank:
        raise DimensionError(f"Form {rho!r} does not live in rank {c.ambient_rank}")

    try:
        dual_rays = rays(dual_cone(c))
    except StructureError as exc:
        raise DomainError(f"Cone {c.generators!r} is not full-dimensional; facets are undefined") from exc

    if rho not in dual_rays:
        raise DomainError(
            f"{rho!r} is not a ray of the dual cone", diagnostics={"dual_rays": [list(r) for r in dual_rays]}
        )

    return Cone.generated_by(c.ambient_rank, [g for g in c.generators if pairing(rho, g) == 0])


def dual_rays(c: Cone) -> tuple[Vector, ...]:
    """Rays of the dual of a full-dimensional cone."""

    if not is_full_dimensional(c):
        raise StructureError(
            f"Cone generated by {c.generators!r} is not full-dimensional in rank {c.ambient_rank}",
            diagnostics={"generators": [list(g) for g in c.generators]},
        )

    return rays(dual_cone(c)).rays
