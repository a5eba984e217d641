import pytest
from typer.testing import CliRunner

from config.settings import FIXTURES_DIR


@pytest.fixture(autouse=True)
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def fixture_path():
    def build(name: str) -> str:
        return str(FIXTURES_DIR / name)

    return build


@pytest.fixture
def mock_classification(mocker):
    return mocker.patch("sphrank1.services.classification_report")
