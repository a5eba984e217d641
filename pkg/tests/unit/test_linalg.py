import unittest
from fractions import Fraction

import pytest
from sympy import Matrix

from linalg.models import IntegerMatrix, Sublattice
from linalg.services import (
    hnf,
    in_rational_span,
    in_sublattice,
    integral_primitive,
    lattice_basis,
    pairing,
    primitive,
    rank,
    rational_combination,
)
from shared.errors import DimensionError, DomainError


class HermiteNormalFormTestCase(unittest.TestCase):
    def test_hnf_of_square_matrix(self):
        # setup input data
        m = IntegerMatrix.from_rows([(2, 4), (1, 3)])

        # action
        h, u = hnf(m)

        # evaulate
        self.assertEqual(h.rows, ((1, 1), (0, 2)))
        self.assertEqual((u @ m).rows, h.rows)

    def test_hnf_drops_dependent_rows(self):
        h, u = hnf(IntegerMatrix.from_rows([(1, 2), (2, 4)]))

        self.assertEqual(h.nonzero_rows(), ((1, 2),))
        self.assertEqual((u @ IntegerMatrix.from_rows([(1, 2), (2, 4)])).rows, h.rows)

    def test_hnf_of_generating_set_with_dependent_row(self):
        # setup input data
        m = IntegerMatrix.from_rows([(2, 0), (0, 2), (1, 1)])

        # action
        h, u = hnf(m)

        # evaulate
        self.assertEqual(h.rows, ((1, 1), (0, 2), (0, 0)))
        self.assertEqual((u @ m).rows, h.rows)
        self.assertEqual(abs(Matrix(u.rows).det()), 1)
        self.assertEqual(lattice_basis(m.rows, 2).rows, ((1, 1), (0, 2)))

    def test_lattice_basis_of_so3_monoid(self):
        basis = lattice_basis([(1, -1), (0, -2)], 2)

        self.assertEqual(basis.rows, ((1, 1), (0, 2)))


def test_pairing():
    assert pairing((1, 2), (3, 4)) == 11
    assert pairing((Fraction(1, 2), 1), (1, 1)) == Fraction(3, 2)


def test_pairing_dimension_mismatch():
    with pytest.raises(DimensionError):
        pairing((1, 2), (1, 2, 3))


@pytest.mark.parametrize(
    "v, expected",
    [
        ((4, -6), (2, -3)),
        ((0, 5), (0, 1)),
        ((-3,), (-1,)),
    ],
)
def test_primitive(v, expected):
    assert primitive(v) == expected


def test_primitive_of_zero():
    with pytest.raises(DomainError):
        primitive((0, 0))


def test_integral_primitive_clears_denominators():
    assert integral_primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


def test_rank():
    assert rank([(1, 1), (2, 2)]) == 1
    assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert rank([]) == 0


@pytest.mark.parametrize(
    "v, expected",
    [
        ((1, 1), True),
        ((0, 2), True),
        ((1, -3), True),
        ((1, 0), False),
        ((1, 2), False),
    ],
)
def test_in_sublattice(v, expected):
    basis = IntegerMatrix.from_rows([(1, 1), (0, 2)])

    assert in_sublattice(v, basis) is expected


def test_in_rational_span():
    assert in_rational_span((2, 2), [(1, 1)])
    assert not in_rational_span((1, 0), [(1, 1)])
    assert in_rational_span((0, 0), [])


def test_rational_combination():
    # setup input data
    generators = [(1, 1), (1, -1)]

    # action
    combination = rational_combination((2, 0), generators)

    # evaulate
    assert combination == (1, 1)
    assert rational_combination((1, 0), [(0, 1)]) is None


def test_rational_combination_skips_dependent_generators():
    combination = rational_combination((3, 3, 0), [(1, 1, 0), (2, 2, 0), (0, 0, 1)])

    assert combination == (3, 0, 0)


def test_sublattice_coordinates():
    lattice = Sublattice(IntegerMatrix.from_rows([(1, 1), (0, 2)]))

    assert lattice.coordinates((1, 3)) == (1, 1)
    assert lattice.coordinates((1, 2)) == (1, Fraction(1, 2))
    assert lattice.lattice_coordinates((1, 2)) is None
    assert (1, 3) in lattice
    assert lattice.point((1, -1)) == (1, -1)
    assert lattice.restrict_form((1, 0)) == (1, 0)


def test_sublattice_outside_span():
    lattice = Sublattice(IntegerMatrix.from_rows([(1, 0, 0)]))

    assert lattice.coordinates((0, 1, 0)) is None
    assert lattice.rank == 1
    assert lattice.ambient_rank == 3


def test_sublattice_dependent_basis():
    with pytest.raises(DomainError):
        Sublattice(IntegerMatrix.from_rows([(1, 1), (2, 2)]))


def test_integer_matrix_row_length():
    with pytest.raises(DimensionError):
        IntegerMatrix(rows=((1, 2), (1,)), col_count=2)


def test_integer_matrix_product():
    a = IntegerMatrix.from_rows([(1, 2), (0, 1)])
    b = IntegerMatrix.from_rows([(1, 0), (3, 1)])

    assert (a @ b).rows == ((7, 2), (3, 1))
    assert (IntegerMatrix.identity(2) @ a) == a
