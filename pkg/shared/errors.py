from typing import Any


class RootGroupsError(Exception):
    """Base class for every error raised by the toolkit.

    `diagnostics` is a JSON-friendly dict copied verbatim into CLI error reports.
    """

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.diagnostics = diagnostics or {}


class DimensionError(RootGroupsError, ValueError):
    pass


class DomainError(RootGroupsError, ValueError):
    pass


class InputFormatError(DomainError):
    pass


class StructureError(RootGroupsError):
    pass


class NotToricError(RootGroupsError):
    pass


class BoxTooSmall(RootGroupsError):
    pass


class ConsistencyError(RootGroupsError):
    pass


class TheoremViolation(ConsistencyError):
    pass
