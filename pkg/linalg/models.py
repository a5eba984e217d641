from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from sympy import Matrix

from shared.errors import DimensionError, DomainError

Vector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[Vector, ...]
    col_count: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.col_count:
                raise DimensionError(f"Row {row!r} has length {len(row)}, expected {self.col_count}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], col_count: int | None = None) -> "IntegerMatrix":
        _rows = tuple(tuple(int(x) for x in row) for row in rows)

        if col_count is None:
            if not _rows:
                raise DimensionError("col_count is required for a matrix without rows")
            col_count = len(_rows[0])

        return cls(rows=_rows, col_count=col_count)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(rows=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), col_count=n)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def nonzero_rows(self) -> tuple[Vector, ...]:
        return tuple(row for row in self.rows if any(row))

    def to_sympy(self) -> Matrix:
        if not self.rows:
            return Matrix.zeros(0, self.col_count)
        return Matrix(self.rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.col_count != other.row_count:
            raise DimensionError(
                f"Cannot multiply {self.row_count}x{self.col_count} by {other.row_count}x{other.col_count}"
            )

        columns = list(zip(*other.rows)) if other.rows else [() for _ in range(other.col_count)]
        rows = (tuple(sum(a * b for a, b in zip(row, column)) for column in columns) for row in self.rows)

        return IntegerMatrix.from_rows(rows, col_count=other.col_count)


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class Sublattice:
    """A lattice given by independent integer basis rows inside Z^n.

    Coordinates are computed through a rational left inverse of the basis,
    built once from a set of pivot columns.
    """

    basis: IntegerMatrix

    def __post_init__(self):
        # fail fast on dependent rows
        self._projection

    @cached_property
    def _projection(self) -> tuple[tuple[int, ...], tuple[RationalVector, ...]]:
        k = self.basis.row_count
        if k == 0:
            return (), ()

        matrix = self.basis.to_sympy()
        _, pivots = matrix.rref()
        if len(pivots) != k:
            raise DomainError(f"Basis rows {self.basis.rows!r} are not linearly independent")

        inverse = matrix.extract(list(range(k)), list(pivots)).inv()
        rows = tuple(tuple(_fraction(inverse[i, j]) for j in range(k)) for i in range(k))

        return tuple(pivots), rows

    @property
    def rank(self) -> int:
        return self.basis.row_count

    @property
    def ambient_rank(self) -> int:
        return self.basis.col_count

    def coordinates(self, v: Sequence[int | Fraction]) -> RationalVector | None:
        """Rational coordinates of v in the basis, or None when v is outside its span."""

        if len(v) != self.ambient_rank:
            raise DimensionError(f"Vector {tuple(v)!r} has length {len(v)}, expected {self.ambient_rank}")

        pivots, inverse = self._projection
        k = self.rank
        coords = tuple(sum((v[pivots[j]] * inverse[j][i] for j in range(k)), Fraction(0)) for i in range(k))

        if self.rational_point(coords) != tuple(Fraction(x) for x in v):
            return None

        return coords

    def lattice_coordinates(self, v: Sequence[int]) -> Vector | None:
        coords = self.coordinates(v)
        if coords is None or any(x.denominator != 1 for x in coords):
            return None
        return tuple(int(x) for x in coords)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.lattice_coordinates(v) is not None

    def rational_point(self, coords: Sequence[int | Fraction]) -> RationalVector:
        if len(coords) != self.rank:
            raise DimensionError(f"Coordinates {tuple(coords)!r} have length {len(coords)}, expected {self.rank}")

        return tuple(
            sum((Fraction(x) * row[i] for x, row in zip(coords, self.basis.rows)), Fraction(0))
            for i in range(self.ambient_rank)
        )

    def point(self, coords: Sequence[int]) -> Vector:
        return tuple(int(x) for x in self.rational_point(coords))

    def restrict_form(self, q: Sequence[int]) -> Vector:
        """The linear form q on Z^n written in the dual basis of this lattice."""

        if len(q) != self.ambient_rank:
            raise DimensionError(f"Form {tuple(q)!r} has length {len(q)}, expected {self.ambient_rank}")

        return tuple(sum(a * b for a, b in zip(q, row)) for row in self.basis.rows)
