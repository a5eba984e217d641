"""Roots and derivations of the affine space K^n = Spec K[x1, ..., xn]."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cone.models import Cone
from demazure.models import Box
from demazure.services import enumerate_roots
from linalg.models import IntegerMatrix
from toricalg.models import AlgebraElement
from toricalg.services import build_weight_monoid, lnd_apply, make_lnd, moved_divisor


def unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def roots_of_coordinate(n: int, i: int, bound: int) -> list[tuple[int, ...]]:
    """(c1, ..., -1, ..., cn) with -1 at place i and 0 <= cj <= bound."""

    ranges = [range(-1, 0) if j == i else range(bound + 1) for j in range(n)]
    return sorted(itertools.product(*ranges))


@pytest.mark.parametrize("n", [2, 3])
def test_roots_of_affine_space(n):
    # setup input data
    orthant = Cone.generated_by(n, [unit(n, i) for i in range(n)])

    # action
    groups = enumerate_roots(orthant, IntegerMatrix.identity(n), Box(3))

    # evaulate
    assert groups == {unit(n, i): roots_of_coordinate(n, i, 3) for i in range(n)}


@st.composite
def monomial_and_root(draw):
    n = draw(st.sampled_from([2, 3]))
    i = draw(st.integers(min_value=0, max_value=n - 1))
    e = draw(st.sampled_from(roots_of_coordinate(n, i, 3)))
    u = draw(st.tuples(*[st.integers(min_value=0, max_value=4)] * n))
    return n, i, e, u


@given(monomial_and_root())
@settings(max_examples=20, deadline=None)
def test_derivation_closed_form(case):
    # d_e = x^c * d/dx_i, with c the root with -1 replaced by 0
    n, i, e, u = case
    lnd = make_lnd(build_weight_monoid(n, [unit(n, j) for j in range(n)]), e)

    image = lnd_apply(lnd, AlgebraElement.monomial(u))

    expected = AlgebraElement.monomial(tuple(a + b for a, b in zip(u, e)), u[i]) if u[i] else AlgebraElement()
    assert image == expected
    assert moved_divisor(lnd) == unit(n, i)
