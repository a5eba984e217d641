from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from cone.models import Cone, RaySet
from linalg.models import IntegerMatrix, RationalVector, Sublattice, Vector
from linalg.services import pairing
from toricalg.models import WeightMonoid

from .enums import RayRole


@dataclass(frozen=True)
class RankOneDatum:
    """Root datum of a group of semisimple rank one plus the weight monoid of X.

    All vectors are in coordinates of the character lattice 𝔛(T).
    """

    ambient_rank: int
    alpha: Vector
    alpha_dual: Vector
    gamma: WeightMonoid


@dataclass(frozen=True)
class ToricCheck:
    is_toric: bool
    combination: RationalVector | None = None
    diagnostics: str = ""


@dataclass(frozen=True)
class BarStructure:
    """M̄ = M ⊕ Zα with the cone Ḡ = cone(𝒢 ∪ w𝒢), in M̄-coordinates.

    The basis of M̄ is the basis of M followed by α, so α has coordinates (0, ..., 0, 1).
    """

    datum: RankOneDatum
    mbar: Sublattice
    gbar: Cone
    gbar_ambient: Cone
    ebar_rays: RaySet
    rho0: Vector
    rho0p: Vector
    gstable_rays: tuple[Vector, ...] = field(default=())

    @property
    def mbar_basis(self) -> IntegerMatrix:
        return self.mbar.basis

    @property
    def rank(self) -> int:
        return self.mbar.rank

    @cached_property
    def alpha_bar(self) -> Vector:
        return (0,) * (self.rank - 1) + (1,)

    @cached_property
    def alpha_dual_bar(self) -> Vector:
        return self.mbar.restrict_form(self.datum.alpha_dual)

    def to_bar(self, e: Sequence[int]) -> Vector | None:
        return self.mbar.lattice_coordinates(e)

    def to_ambient(self, x: Sequence[int]) -> Vector:
        return self.mbar.point(x)

    def reflect_bar(self, x: Sequence[int]) -> Vector:
        d = int(pairing(self.alpha_dual_bar, x))
        return tuple(a - d * b for a, b in zip(x, self.alpha_bar))

    def role(self, rho: Sequence[int]) -> RayRole:
        rho = tuple(rho)
        if rho == self.rho0:
            return RayRole.RHO0
        if rho == self.rho0p:
            return RayRole.RHO0_PRIME
        return RayRole.G_STABLE


@dataclass(frozen=True)
class RayEntry:
    ray: Vector
    role: RayRole
    alpha_pairing: int
    facet_generators: tuple[Vector, ...]


@dataclass(frozen=True)
class MovingRoot:
    """Root moving a G-stable divisor: e = e' + q·α with q = <rho0, e'>."""

    rho: Vector
    seed: Vector
    shift: int
    e: Vector
    e_bar: Vector
    rho_in_m: Vector


@dataclass(frozen=True)
class ClassificationReport:
    box_bound: int
    toric_check: ToricCheck
    mbar_basis: tuple[Vector, ...]
    rays: tuple[RayEntry, ...]
    vertical: tuple[Vector, ...]
    vertical_bar: tuple[Vector, ...]
    horizontal: tuple[Vector, ...]
    horizontal_bar: tuple[Vector, ...]
    rho0p_overlap: tuple[Vector, ...]
    moving_roots: tuple[MovingRoot, ...]
    saturation_gaps: tuple[Vector, ...]
    uniqueness_note: str
