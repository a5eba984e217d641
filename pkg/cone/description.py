"""
Incremental double description of {q : <q, g> >= 0 for every g}.

The solution set is kept as lineality + cone(rays). Each inequality either
consumes one lineality direction or splits the current rays into z/p/n parts
(positive, zero, negative pairing) and combines adjacent p/n pairs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix

from linalg.models import Vector
from linalg.services import integral_primitive, primitive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Description:
    ambient_rank: int
    lineality: tuple[Vector, ...]
    rays: tuple[Vector, ...]


@dataclass
class _Ray:
    vector: Vector
    zeros: frozenset[int]


def _dot(a: Vector, b: Vector) -> int:
    return sum(x * y for x, y in zip(a, b))


def _combine(a: Vector, a_value: int, b: Vector, b_value: int) -> Vector:
    """Primitive a_value·b - b_value·a, which pairs to zero with the current inequality."""

    return primitive([a_value * y - b_value * x for x, y in zip(a, b)])


def _is_adjacent(first: _Ray, second: _Ray, rays: list[_Ray]) -> bool:
    common = first.zeros & second.zeros
    return not any(r is not first and r is not second and common <= r.zeros for r in rays)


def _canonical(ambient_rank: int, lineality: list[Vector], rays: list[_Ray]) -> Description:
    if not lineality:
        return Description(ambient_rank, (), tuple(sorted({r.vector for r in rays})))

    reduced, pivots = Matrix(lineality).rref()
    basis = [tuple(Fraction(int(x.p), int(x.q)) for x in reduced.row(i)) for i in range(len(pivots))]

    canonical_rays = set()
    for ray in rays:
        vector = [Fraction(x) for x in ray.vector]
        for row, pivot in zip(basis, pivots):
            factor = vector[pivot]
            if factor:
                vector = [x - factor * y for x, y in zip(vector, row)]
        canonical_rays.add(integral_primitive(vector))

    return Description(
        ambient_rank=ambient_rank,
        lineality=tuple(sorted(integral_primitive(row) for row in basis)),
        rays=tuple(sorted(canonical_rays)),
    )


@lru_cache(maxsize=4096)
def describe(ambient_rank: int, inequalities: tuple[Vector, ...]) -> Description:
    lineality = [tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)]
    rays: list[_Ray] = []

    for k, inequality in enumerate(inequalities):
        values = [_dot(inequality, line) for line in lineality]
        index = next((i for i, value in enumerate(values) if value != 0), None)

        if index is not None:
            pivot = lineality.pop(index)
            pivot_value = values.pop(index)
            if pivot_value < 0:
                pivot, pivot_value = tuple(-x for x in pivot), -pivot_value

            lineality = [
                _combine(pivot, pivot_value, line, value) if value else line for line, value in zip(lineality, values)
            ]
            for ray in rays:
                value = _dot(inequality, ray.vector)
                if value:
                    ray.vector = _combine(pivot, pivot_value, ray.vector, value)
                ray.zeros = ray.zeros | {k}

            rays.append(_Ray(vector=pivot, zeros=frozenset(range(k))))
            continue

        positive, zero, negative = [], [], []
        for ray in rays:
            value = _dot(inequality, ray.vector)
            if value > 0:
                positive.append((ray, value))
            elif value < 0:
                negative.append((ray, value))
            else:
                zero.append(ray)

        updated = [ray for ray, _ in positive]
        updated.extend(_Ray(vector=ray.vector, zeros=ray.zeros | {k}) for ray in zero)

        for p, p_value in positive:
            for n, n_value in negative:
                if _is_adjacent(p, n, rays):
                    updated.append(
                        _Ray(vector=_combine(p.vector, p_value, n.vector, n_value), zeros=(p.zeros & n.zeros) | {k})
                    )

        rays = updated

    description = _canonical(ambient_rank, lineality, rays)
    logger.debug(
        "Described %d inequalities in rank %d: %d lineality directions, %d rays",
        len(inequalities),
        ambient_rank,
        len(description.lineality),
        len(description.rays),
    )

    return description
