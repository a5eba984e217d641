import pytest

from demazure.models import Box, DemazureRoot
from shared.errors import BoxTooSmall, DomainError, NotToricError
from sphrank1 import services as sphrank1
from sphrank1.enums import RayRole


def test_ray_role_choices():
    assert RayRole.choices() == [("rho0", "Rho0"), ("rho0_prime", "Rho0 prime"), ("g_stable", "G stable")]


def test_weyl_reflect(f1_datum):
    assert sphrank1.weyl_reflect(f1_datum, (1, 1, 0)) == (-1, 1, 0)
    assert sphrank1.weyl_reflect(f1_datum, (0, 0, 1)) == (0, 0, 1)
    assert sphrank1.weyl_reflect(f1_datum, (2, 0, 0)) == (-2, 0, 0)


# =========================================
# ROOT DATA
# =========================================
def test_malformed_root_datum():
    datum = sphrank1.build_datum(2, (1, 0), (1, 0), [(1, 1)])

    with pytest.raises(DomainError):
        sphrank1.check_toric(datum)


def test_non_dominant_generators():
    datum = sphrank1.build_datum(2, (2, 0), (1, 0), [(-1, 1)])

    with pytest.raises(DomainError) as exc_info:
        sphrank1.validate_root_datum(datum)

    assert exc_info.value.diagnostics == {"not_dominant": [[-1, 1]]}


def test_toric_criterion(f1_datum):
    result = sphrank1.check_toric(f1_datum)

    assert result.is_toric
    assert result.combination is None


@pytest.mark.parametrize(
    "generators, is_toric",
    [
        ([(1, 1), (1, -1)], False),
        ([(1, 1)], True),
        ([(2, 2), (1, 1)], True),
    ],
)
def test_toric_criterion_is_the_rational_span_test(mocker, generators, is_toric):
    # setup input data
    datum = sphrank1.build_datum(2, (2, 0), (1, 0), generators)
    span = mocker.spy(sphrank1, "in_rational_span")

    # action
    result = sphrank1.check_toric(datum)

    # evaulate
    span.assert_called_once_with(datum.alpha, datum.gamma.generators)
    assert result.is_toric is is_toric


def test_not_toric():
    # setup input data
    datum = sphrank1.build_datum(2, (2, 0), (1, 0), [(1, 1), (1, -1)])

    # action
    result = sphrank1.check_toric(datum)

    # evaulate
    assert not result.is_toric
    assert result.combination == (1, 1)
    assert result.diagnostics == "alpha = 1*(1, -1) + 1*(1, 1)"

    with pytest.raises(NotToricError):
        sphrank1.build_bar(datum)


# =========================================
# BAR STRUCTURE
# =========================================
def test_bar_structure(f1_bar):
    assert f1_bar.mbar_basis.rows == ((1, 1, 0), (0, 0, 1), (2, 0, 0))
    assert f1_bar.gbar.generators == ((0, 1, 0), (1, 0, -1), (1, 0, 0))
    assert f1_bar.ebar_rays.rays == ((0, 0, -1), (0, 1, 0), (1, 0, 1))


def test_bar_roles(f1_bar):
    assert f1_bar.rho0 == (0, 0, -1)
    assert f1_bar.rho0p == (1, 0, 1)
    assert f1_bar.gstable_rays == ((0, 1, 0),)
    assert f1_bar.role((0, 1, 0)) == RayRole.G_STABLE
    assert f1_bar.role((1, 0, 1)) == RayRole.RHO0_PRIME


def test_bar_coordinates(f1_bar):
    assert f1_bar.alpha_bar == (0, 0, 1)
    assert f1_bar.alpha_dual_bar == (1, 0, 2)
    assert f1_bar.to_bar((2, 0, 0)) == (0, 0, 1)
    assert f1_bar.to_ambient((1, 0, -1)) == (-1, 1, 0)
    assert f1_bar.reflect_bar((1, 0, 0)) == (1, 0, -1)


def test_bar_weight_monoid(f1_bar):
    monoid = sphrank1.bar_weight_monoid(f1_bar)

    assert monoid.generators == ((0, 1, 0), (1, 0, -1), (1, 0, 0))
    assert monoid.m_basis.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


# =========================================
# WEIGHT SETS
# =========================================
def test_vertical_weights(f1_datum, f1_bar):
    vertical = sphrank1.vertical_weights(f1_bar, Box(5))

    assert f1_datum.alpha in vertical
    assert len(vertical) == 30
    assert all(f1_bar.to_bar(e)[2] == 1 for e in vertical)


def test_horizontal_weights(f1_datum, f1_bar):
    horizontal = sphrank1.horizontal_weights(f1_datum, f1_bar, Box(5))

    assert horizontal == [(c, c, -1) for c in range(6)]


def test_rho0p_exclusion(f1_bar):
    assert sphrank1.rho0p_exclusion(f1_bar, Box(5)) == []


def test_rank_one_monoid_of_rank_one(line_datum):
    bar = sphrank1.build_bar(line_datum)

    assert bar.gstable_rays == ()
    assert sphrank1.vertical_weights(bar, Box(3)) == [(1, -1), (2, 0), (3, 1)]
    assert sphrank1.horizontal_weights(line_datum, bar, Box(3)) == []


# =========================================
# G-STABLE DIVISORS
# =========================================
def test_gstable_moving_root(f1_bar):
    assert sphrank1.gstable_moving_root(f1_bar, (0, 1, 0), Box(5)) == DemazureRoot(e=(0, 0, -1), rho=(0, 1, 0))


def test_find_moving_root_with_seed(f1_bar):
    # action
    moving = sphrank1.find_moving_root(f1_bar, (0, 1, 0), Box(5), seed=(1, -1, -1))

    # evaulate
    assert moving.shift == 1
    assert moving.e_bar == (1, -1, 0)
    assert moving.e == (1, 1, -1)
    assert moving.rho_in_m == (0, 1)


def test_find_moving_root_bad_seed(f1_bar):
    with pytest.raises(DomainError):
        sphrank1.find_moving_root(f1_bar, (0, 1, 0), Box(5), seed=(0, 0, -1))


def test_find_moving_root_not_gstable(f1_bar):
    with pytest.raises(DomainError):
        sphrank1.find_moving_root(f1_bar, (0, 0, -1), Box(5))


def test_find_moving_root_box_too_small(f1_bar):
    with pytest.raises(BoxTooSmall):
        sphrank1.find_moving_root(f1_bar, (0, 1, 0), Box(0))


def test_classification_report(f1_datum):
    # action
    report = sphrank1.classification_report(f1_datum, Box(5))

    # evaulate
    roles = {entry.ray: entry.role for entry in report.rays}
    assert roles == {(0, 0, -1): RayRole.RHO0, (1, 0, 1): RayRole.RHO0_PRIME, (0, 1, 0): RayRole.G_STABLE}
    assert report.horizontal_bar[0] == (0, -1, 0)
    assert [moving.e for moving in report.moving_roots] == [(0, 0, -1)]
    assert report.rho0p_overlap == ()
    assert report.saturation_gaps == ()
