import math
from fractions import Fraction
from typing import Sequence

from sympy import Matrix

from shared.errors import DimensionError, DomainError

from .models import IntegerMatrix, RationalVector, Sublattice, Vector

Scalar = int | Fraction


def pairing(q: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    """Natural pairing of a form with a vector written in mutually dual bases."""

    if len(q) != len(v):
        raise DimensionError(f"Cannot pair {tuple(q)!r} with {tuple(v)!r}: lengths {len(q)} and {len(v)}")

    return Fraction(sum(a * b for a, b in zip(q, v)))


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"Cannot add {tuple(u)!r} and {tuple(v)!r}")
    return tuple(a + b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * a for a in v)


def negate(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def primitive(v: Sequence[int]) -> Vector:
    divisor = math.gcd(*v)
    if divisor == 0:
        raise DomainError(f"Zero vector {tuple(v)!r} has no primitive direction")

    return tuple(a // divisor for a in v)


def integral_primitive(v: Sequence[Scalar]) -> Vector:
    """Primitive lattice vector on the ray through a nonzero rational vector."""

    common = math.lcm(*(Fraction(a).denominator for a in v)) if v else 1
    return primitive([int(Fraction(a) * common) for a in v])


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    if not rows:
        return 0
    return Matrix([list(row) for row in rows]).rank()


def hnf(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    H is upper triangular with positive pivots and entries above each pivot reduced
    into [0, pivot); U is unimodular with U·m = H.
    """

    rows = [list(row) for row in m.rows]
    u = [list(row) for row in IntegerMatrix.identity(m.row_count).rows]
    n_rows = len(rows)

    def swap(i: int, j: int):
        rows[i], rows[j] = rows[j], rows[i]
        u[i], u[j] = u[j], u[i]

    def subtract(target: int, source: int, factor: int):
        rows[target] = [a - factor * b for a, b in zip(rows[target], rows[source])]
        u[target] = [a - factor * b for a, b in zip(u[target], u[source])]

    pivot_row = 0
    for col in range(m.col_count):
        if pivot_row == n_rows:
            break

        # euclid on the column below pivot_row
        while True:
            nonzero = [i for i in range(pivot_row, n_rows) if rows[i][col] != 0]
            if not nonzero:
                break

            swap(pivot_row, min(nonzero, key=lambda i: abs(rows[i][col])))
            pivot = rows[pivot_row][col]

            for i in range(pivot_row + 1, n_rows):
                if rows[i][col] != 0:
                    subtract(i, pivot_row, rows[i][col] // pivot)

            if all(rows[i][col] == 0 for i in range(pivot_row + 1, n_rows)):
                break

        if rows[pivot_row][col] == 0:
            continue

        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
            u[pivot_row] = [-a for a in u[pivot_row]]

        pivot = rows[pivot_row][col]
        for i in range(pivot_row):
            subtract(i, pivot_row, rows[i][col] // pivot)

        pivot_row += 1

    return IntegerMatrix.from_rows(rows, m.col_count), IntegerMatrix.from_rows(u, m.row_count)


def lattice_basis(generators: Sequence[Sequence[int]], ambient_rank: int) -> IntegerMatrix:
    """Canonical basis of the lattice spanned by `generators` (nonzero HNF rows)."""

    h, _ = hnf(IntegerMatrix.from_rows(generators, col_count=ambient_rank))
    return IntegerMatrix.from_rows(h.nonzero_rows(), col_count=ambient_rank)


def in_sublattice(v: Sequence[int], basis: IntegerMatrix) -> bool:
    if len(v) != basis.col_count:
        raise DimensionError(f"Vector {tuple(v)!r} does not live in rank {basis.col_count}")

    h, _ = hnf(basis)
    rest = list(v)

    for row in h.nonzero_rows():
        col = next(i for i, a in enumerate(row) if a != 0)
        if rest[col] % row[col]:
            return False
        factor = rest[col] // row[col]
        rest = [a - factor * b for a, b in zip(rest, row)]

    return not any(rest)


def in_rational_span(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    if not gens:
        return not any(v)

    for gen in gens:
        if len(gen) != len(v):
            raise DimensionError(f"Generator {tuple(gen)!r} does not match {tuple(v)!r}")

    return rank([*gens, v]) == rank(gens)


def rational_combination(v: Sequence[int], gens: Sequence[Sequence[int]]) -> RationalVector | None:
    """Coefficients x with Σ xᵢ·genᵢ = v, supported on an independent subset of gens."""

    if not gens:
        return () if not any(v) else None

    _, independent = Matrix([list(gen) for gen in gens]).T.rref()
    lattice = Sublattice(IntegerMatrix.from_rows([gens[i] for i in independent], col_count=len(v)))

    coords = lattice.coordinates(v)
    if coords is None:
        return None

    result = [Fraction(0)] * len(gens)
    for i, x in zip(independent, coords):
        result[i] = x

    return tuple(result)
