#!/usr/bin/env python
"""Command-line entry point for running the toolkit from a source checkout."""


def main():
    try:
        from cli.views import app
    except ImportError as exc:
        raise ImportError(
            "Couldn't import the toolkit dependencies. Are they installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    app()


if __name__ == "__main__":
    main()
