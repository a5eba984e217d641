from dataclasses import dataclass
from functools import cached_property

from cone.models import Cone
from demazure.models import DemazureRoot
from linalg.models import Vector
from toricalg.models import AlgebraElement, WeightMonoid


@dataclass(frozen=True)
class HoroDatum:
    ambient_rank: int
    gamma: WeightMonoid
    dominant_coroots: tuple[Vector, ...]

    @cached_property
    def restricted_coroots(self) -> tuple[Vector, ...]:
        """Dual simple roots restricted to M, in the dual basis of M."""

        return tuple(self.gamma.lattice.restrict_form(c) for c in self.dominant_coroots)

    @cached_property
    def e_tilde(self) -> Cone:
        return Cone.generated_by(self.gamma.lattice.rank, self.restricted_coroots)


@dataclass(frozen=True)
class ShadowElement(AlgebraElement):
    """Element Σ c_λ·f_λ of K[X]^U; f_λ·f_μ = f_{λ+μ}."""


@dataclass(frozen=True)
class HoroReport:
    box_bound: int
    restricted_coroots: tuple[Vector, ...]
    e_tilde_generators: tuple[Vector, ...]
    rays: tuple[Vector, ...]
    g_stable_rays: tuple[Vector, ...]
    horizontal: tuple[Vector, ...]
    g_saturated: bool
    moving_roots: tuple[DemazureRoot, ...]
    saturation_gaps: tuple[Vector, ...]
    note: str
