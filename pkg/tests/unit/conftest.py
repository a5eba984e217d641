import pytest

from cone.models import Cone
from horo import services as horo
from horo.models import HoroDatum
from sphrank1 import services as sphrank1
from sphrank1.models import BarStructure, RankOneDatum
from toricalg.models import WeightMonoid
from toricalg.services import build_weight_monoid


@pytest.fixture
def orthant() -> Cone:
    return Cone.generated_by(2, [(1, 0), (0, 1)])


@pytest.fixture
def half_plane() -> Cone:
    return Cone.generated_by(2, [(1, 0), (0, 1), (0, -1)])


@pytest.fixture
def polynomial_ring() -> WeightMonoid:
    return build_weight_monoid(2, [(1, 0), (0, 1)])


@pytest.fixture
def so3_monoid() -> WeightMonoid:
    # coordinates (a, b) mean a*alpha + b*chi
    return build_weight_monoid(2, [(1, -1), (0, -2)])


@pytest.fixture
def f1_datum() -> RankOneDatum:
    return sphrank1.build_datum(3, (2, 0, 0), (1, 0, 0), [(1, 1, 0), (0, 0, 1)])


@pytest.fixture
def f1_bar(f1_datum) -> BarStructure:
    return sphrank1.build_bar(f1_datum)


@pytest.fixture
def line_datum() -> RankOneDatum:
    return sphrank1.build_datum(2, (2, 0), (1, 0), [(1, 1)])


@pytest.fixture
def f1_horo() -> HoroDatum:
    return horo.build_horo_datum(3, [(1, 1, 0), (0, 0, 1)], [(1, 0, 0)])


@pytest.fixture
def saturated_horo() -> HoroDatum:
    return horo.build_horo_datum(2, [(1, 0), (0, 1), (0, -1)], [(1, 0)])
