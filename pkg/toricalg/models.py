from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from cone.models import Cone
from demazure.models import DemazureRoot
from linalg.models import IntegerMatrix, Sublattice, Vector
from linalg.services import lattice_basis
from shared.errors import DimensionError

Coefficient = int | Fraction


@dataclass(frozen=True)
class WeightMonoid:
    """Monoid Γ generated by lattice points; M = ZΓ and 𝒢 = Q≥0Γ are derived lazily."""

    ambient_rank: int
    generators: tuple[Vector, ...]

    @classmethod
    def of(cls, ambient_rank: int, generators: Iterable[Sequence[int]]) -> "WeightMonoid":
        _generators = set()
        for generator in generators:
            if len(generator) != ambient_rank:
                raise DimensionError(
                    f"Generator {tuple(generator)!r} has length {len(generator)}, expected {ambient_rank}"
                )
            if any(generator):
                _generators.add(tuple(int(x) for x in generator))

        return cls(ambient_rank=ambient_rank, generators=tuple(sorted(_generators)))

    @cached_property
    def m_basis(self) -> IntegerMatrix:
        return lattice_basis(self.generators, self.ambient_rank)

    @cached_property
    def lattice(self) -> Sublattice:
        return Sublattice(self.m_basis)

    @cached_property
    def g_cone(self) -> Cone:
        return Cone.generated_by(self.ambient_rank, self.generators)


@dataclass(frozen=True)
class AlgebraElement:
    """Finite sum Σ c_u·χ^u with exact coefficients, terms sorted by exponent."""

    terms: tuple[tuple[Vector, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[int], Coefficient]]):
        collected: dict[Vector, Fraction] = {}
        for u, c in terms:
            key = tuple(int(x) for x in u)
            collected[key] = collected.get(key, Fraction(0)) + Fraction(c)

        return cls(terms=tuple(sorted((u, c) for u, c in collected.items() if c != 0)))

    @classmethod
    def monomial(cls, u: Sequence[int], c: Coefficient = 1):
        return cls.from_terms([(u, c)])

    @property
    def support(self) -> tuple[Vector, ...]:
        return tuple(u for u, _ in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        return type(self).from_terms([*self.terms, *other.terms])

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return type(self).from_terms(
                (tuple(a + b for a, b in zip(u, v)), c * d) for u, c in self.terms for v, d in other.terms
            )
        return type(self).from_terms((u, c * other) for u, c in self.terms)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ToricLND:
    """Homogeneous LND ∂_e of an affine semigroup algebra, built by `toricalg.services.make_lnd`."""

    monoid: WeightMonoid
    root: DemazureRoot
