import logging.config

from . import settings


def configure_logging(level: str | None = None) -> None:
    """Apply `settings.LOGGING`, optionally overriding the root level."""

    config = {**settings.LOGGING, "root": {**settings.LOGGING["root"]}}
    if level is not None:
        config["root"]["level"] = level.upper()

    logging.config.dictConfig(config)
