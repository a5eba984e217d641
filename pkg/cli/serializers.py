from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import TOOL_NAME, TOOL_VERSION

from .enums import InputKind


class InputDescription(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: InputKind
    ambient_rank: int = Field(ge=1)
    generators: list[list[int]] = Field(default_factory=list)
    alpha: list[int] | None = None
    alpha_dual: list[int] | None = None
    coroots: list[list[int]] | None = None
    box: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_vectors(self) -> "InputDescription":
        vectors = [("generator", v) for v in self.generators]
        vectors += [("coroot", v) for v in self.coroots or []]
        vectors += [(name, v) for name, v in (("alpha", self.alpha), ("alpha_dual", self.alpha_dual)) if v is not None]

        for name, vector in vectors:
            if len(vector) != self.ambient_rank:
                raise ValueError(f"{name} {vector} has length {len(vector)}, expected rank {self.ambient_rank}")

        if self.kind == InputKind.RANK_ONE and (self.alpha is None or self.alpha_dual is None):
            raise ValueError("rank-one input requires [alpha] and [alpha_dual] sections")

        return self

    def to_text(self) -> str:
        """Canonical text form; parsing it gives back an equal description."""

        lines = [f"kind: {self.kind}", f"rank: {self.ambient_rank}"]
        if self.box is not None:
            lines.append(f"box: {self.box}")

        sections = [("generators", self.generators)]
        singles = (("alpha", self.alpha), ("alpha_dual", self.alpha_dual))
        sections += [(name, [v]) for name, v in singles if v is not None]
        if self.coroots is not None:
            sections.append(("coroots", self.coroots))

        for name, rows in sections:
            lines.append(f"[{name}]")
            lines.extend(" ".join(str(x) for x in row) for row in rows)

        return "\n".join(lines) + "\n"


class ErrorInfo(BaseModel):
    type: str
    message: str
    diagnostics: dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    tool: str = TOOL_NAME
    version: str = TOOL_VERSION
    command: str
    source: str
    input: InputDescription | None = None
    input_text: str | None = None
    box: int | None = None
    results: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    error: ErrorInfo | None = None
    exit_code: int = 0
