import logging
from fractions import Fraction

import pytest

from shared.errors import DimensionError, DomainError
from toricalg.models import AlgebraElement, WeightMonoid
from toricalg.services import (
    build_weight_monoid,
    divisor_ideal_membership,
    equivalent,
    exp_action,
    kernel_membership,
    lnd_apply,
    lnd_nilpotency_index,
    make_lnd,
    monoid_membership,
    moved_divisor,
    root_weight,
    saturation_gaps,
)


# =========================================
# ALGEBRA ELEMENTS
# =========================================
def test_algebra_element_collects_terms():
    f = AlgebraElement.from_terms([((1, 0), 2), ((0, 1), 1), ((1, 0), -2)])

    assert f.terms == (((0, 1), Fraction(1)),)
    assert f.support == ((0, 1),)


def test_algebra_element_arithmetic():
    x = AlgebraElement.monomial((1, 0))
    y = AlgebraElement.monomial((0, 1))

    assert (x + y) * (x - y) == AlgebraElement.from_terms([((2, 0), 1), ((0, 2), -1)])
    assert 3 * x == AlgebraElement.monomial((1, 0), 3)
    assert not (x - x)


# =========================================
# WEIGHT MONOIDS
# =========================================
def test_weight_monoid_of():
    monoid = WeightMonoid.of(2, [(0, 1), (1, 0), (0, 0), (1, 0)])

    assert monoid.generators == ((0, 1), (1, 0))
    assert monoid.m_basis.rows == ((1, 0), (0, 1))


def test_weight_monoid_dimension():
    with pytest.raises(DimensionError):
        WeightMonoid.of(2, [(1, 0, 0)])


@pytest.mark.parametrize(
    "u, expected",
    [
        ((1, -1), True),
        ((1, -3), True),
        ((0, -2), True),
        ((1, -2), False),
        ((1, 1), False),
    ],
)
def test_monoid_membership_so3(so3_monoid, u, expected):
    assert monoid_membership(so3_monoid, u) is expected


def test_saturated_monoid_has_no_gaps(polynomial_ring, so3_monoid):
    assert saturation_gaps(polynomial_ring) == ()
    assert saturation_gaps(so3_monoid) == ()


def test_saturation_gaps(caplog):
    # setup input data
    caplog.set_level(logging.WARNING)

    # action
    monoid = build_weight_monoid(1, [(2,), (3,)])

    # evaulate
    assert saturation_gaps(monoid) == ((1,),)
    assert "not saturated" in caplog.text


# =========================================
# DERIVATIONS
# =========================================
def test_make_lnd(polynomial_ring):
    lnd = make_lnd(polynomial_ring, (-1, 2))

    assert lnd.root.rho == (1, 0)
    assert root_weight(lnd, (3, 1)) == 3


def test_make_lnd_rejects_non_roots(polynomial_ring):
    with pytest.raises(DomainError) as exc_info:
        make_lnd(polynomial_ring, (1, 1))

    assert exc_info.value.diagnostics["in_lattice"] is True
    assert {"ray": [1, 0], "value": 1} in exc_info.value.diagnostics["pairings"]


def test_lnd_apply(polynomial_ring):
    # setup input data
    lnd = make_lnd(polynomial_ring, (-1, 2))

    # action
    image = lnd_apply(lnd, AlgebraElement.monomial((3, 1)))

    # evaulate
    assert image == AlgebraElement.monomial((2, 3), 3)
    assert lnd_apply(lnd, AlgebraElement.monomial((0, 4))) == AlgebraElement()


def test_lnd_apply_outside_monoid(polynomial_ring):
    lnd = make_lnd(polynomial_ring, (-1, 0))

    with pytest.raises(DomainError):
        lnd_apply(lnd, AlgebraElement.monomial((-1, 0)))


def test_nilpotency_index(polynomial_ring):
    lnd = make_lnd(polynomial_ring, (-1, 2))

    assert lnd_nilpotency_index(lnd, (3, 1)) == 4
    assert lnd_nilpotency_index(lnd, (0, 1)) == 1


def test_exp_action_is_a_substitution(polynomial_ring):
    # x1 -> x1 + x2^2 applied to x1^3 x2
    lnd = make_lnd(polynomial_ring, (-1, 2))

    image = exp_action(lnd, 1, AlgebraElement.monomial((3, 1)))

    assert image == AlgebraElement.from_terms([((3, 1), 1), ((2, 3), 3), ((1, 5), 3), ((0, 7), 1)])


def test_exp_action_with_parameter(polynomial_ring):
    lnd = make_lnd(polynomial_ring, (-1, 0))

    image = exp_action(lnd, Fraction(2, 3), AlgebraElement.monomial((1, 0)))

    assert image == AlgebraElement.from_terms([((1, 0), 1), ((0, 0), Fraction(2, 3))])


def test_kernel_and_divisor_ideal(polynomial_ring):
    lnd = make_lnd(polynomial_ring, (-1, 2))

    assert kernel_membership(lnd, (0, 5))
    assert not kernel_membership(lnd, (1, 0))
    assert divisor_ideal_membership(polynomial_ring, (1, 0), (1, 1))
    assert not divisor_ideal_membership(polynomial_ring, (1, 0), (0, 1))


def test_divisor_ideal_of_non_ray(polynomial_ring):
    with pytest.raises(DomainError):
        divisor_ideal_membership(polynomial_ring, (1, 1), (1, 0))


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ((-1, 0), (-1, 3), True),
        ((-1, 0), (0, -1), False),
        ((2, -1), (0, -1), True),
    ],
)
def test_equivalent(polynomial_ring, first, second, expected):
    d1 = make_lnd(polynomial_ring, first)
    d2 = make_lnd(polynomial_ring, second)

    assert equivalent(d1, d2) is expected


def test_equivalent_needs_same_monoid(polynomial_ring, so3_monoid):
    with pytest.raises(DomainError):
        equivalent(make_lnd(polynomial_ring, (-1, 0)), make_lnd(so3_monoid, (0, 2)))


@pytest.mark.parametrize(
    "e, expected",
    [
        ((-1, 2), (1, 0)),
        ((3, -1), (0, 1)),
    ],
)
def test_moved_divisor(polynomial_ring, e, expected):
    assert moved_divisor(make_lnd(polynomial_ring, e)) == expected


def test_so3_derivation(so3_monoid):
    lnd = make_lnd(so3_monoid, (0, 2))

    assert lnd.root.rho == (-1, -1)
    assert lnd_apply(lnd, AlgebraElement.monomial((0, -2))) == AlgebraElement.monomial((0, 0))
    assert moved_divisor(lnd) == (-1, -1)
