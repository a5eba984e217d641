import logging

import pytest

from config import configure_logging, settings


@pytest.fixture
def restore_logging():
    yield
    configure_logging()


def test_configure_logging_default_level(restore_logging):
    configure_logging()

    assert logging.getLogger().level == logging.getLevelName(settings.LOG_LEVEL)


def test_configure_logging_override(restore_logging):
    configure_logging("debug")

    assert logging.getLogger().level == logging.DEBUG
    assert settings.LOGGING["root"]["level"] == settings.LOG_LEVEL
