from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from linalg.models import Vector
from linalg.services import integral_primitive
from shared.errors import DimensionError


@dataclass(frozen=True)
class Cone:
    """Convex cone generated over Q≥0 by lattice points of Z^ambient_rank.

    Build through `Cone.generated_by` so that generators are primitive, deduplicated
    and lexicographically sorted; two equal generator sets compare equal.
    """

    ambient_rank: int
    generators: tuple[Vector, ...]

    def __post_init__(self):
        for generator in self.generators:
            if len(generator) != self.ambient_rank:
                raise DimensionError(
                    f"Generator {generator!r} has length {len(generator)}, expected {self.ambient_rank}"
                )

    @classmethod
    def generated_by(cls, ambient_rank: int, generators: Iterable[Sequence[int | Fraction]]) -> "Cone":
        normalized = set()
        for generator in generators:
            if len(generator) != ambient_rank:
                raise DimensionError(
                    f"Generator {tuple(generator)!r} has length {len(generator)}, expected {ambient_rank}"
                )
            if any(generator):
                normalized.add(integral_primitive(generator))

        return cls(ambient_rank=ambient_rank, generators=tuple(sorted(normalized)))

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class RaySet:
    rays: tuple[Vector, ...]

    @classmethod
    def of(cls, rays: Iterable[Vector]) -> "RaySet":
        return cls(rays=tuple(sorted(set(rays))))

    def __iter__(self):
        return iter(self.rays)

    def __len__(self) -> int:
        return len(self.rays)

    def __contains__(self, ray: Sequence[int]) -> bool:
        return tuple(ray) in self.rays
