import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from cone.models import Cone
from linalg.models import Sublattice, Vector
from linalg.services import pairing
from shared.errors import DimensionError, DomainError


@dataclass(frozen=True)
class DemazureRoot:
    """A root e together with its distinguished dual ray rho, <rho, e> = -1."""

    e: Vector
    rho: Vector


@dataclass(frozen=True)
class Box:
    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise DomainError(f"Box bound must be non-negative, got {self.bound!r}")

    def points(self, rank: int) -> Iterator[Vector]:
        """Lattice points with sup-norm at most `bound`, in lexicographic order."""

        return itertools.product(range(-self.bound, self.bound + 1), repeat=rank)

    def __contains__(self, v: Sequence[int]) -> bool:
        return all(abs(x) <= self.bound for x in v)


@dataclass(frozen=True)
class RootOracle:
    """Membership test for the Demazure roots of a cone 𝒢 ⊂ M_Q.

    `lattice` fixes the basis of M; `local_cone` is 𝒢 in that basis and `rays` are the
    rays of its dual, written in the dual basis.
    """

    lattice: Sublattice
    local_cone: Cone
    rays: tuple[Vector, ...]

    @property
    def ambient_rank(self) -> int:
        return self.lattice.ambient_rank

    def pairings(self, e: Sequence[int]) -> tuple[int, ...] | None:
        if len(e) != self.ambient_rank:
            raise DimensionError(f"Vector {tuple(e)!r} does not live in rank {self.ambient_rank}")

        x = self.lattice.lattice_coordinates(e)
        if x is None:
            return None

        return tuple(int(pairing(rho, x)) for rho in self.rays)

    def classify(self, e: Sequence[int]) -> DemazureRoot | None:
        values = self.pairings(e)
        if values is None:
            return None

        negative = [i for i, value in enumerate(values) if value < 0]
        if len(negative) != 1 or values[negative[0]] != -1:
            return None

        return DemazureRoot(e=tuple(e), rho=self.rays[negative[0]])
