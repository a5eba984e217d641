from typing import Any

from cone.models import Cone
from cone.services import contains
from demazure.models import Box
from linalg.models import IntegerMatrix, Sublattice, Vector

from .serializers import Report


def ascii_grid(cone: Cone, m_basis: IntegerMatrix, groups: dict[Vector, list[Vector]], box: Box) -> list[str]:
    """Picture of a rank-2 box, top row first.

    o origin, k a root of the k-th ray, * a root of a ray past the 9th, + a point of 𝒢 ∩ M, . anything else
    """

    lattice = Sublattice(m_basis)
    marks = {}
    for index, rho in enumerate(groups, start=1):
        for e in groups[rho]:
            marks[e] = str(index) if index < 10 else "*"

    rows = []
    for y in range(box.bound, -box.bound - 1, -1):
        row = []
        for x in range(-box.bound, box.bound + 1):
            point = (x, y)
            if point in marks:
                row.append(marks[point])
            elif point == (0, 0):
                row.append("o")
            elif point in lattice and contains(cone, point):
                row.append("+")
            else:
                row.append(".")
        rows.append(" ".join(row))

    return rows


def _format(value: Any) -> str:
    if isinstance(value, list) and value and all(isinstance(x, int) for x in value):
        return "(" + ", ".join(map(str, value)) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(_format(x) for x in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_format(v)}" for k, v in value.items()) + "}"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_text(report: Report) -> str:
    lines = [f"# {report.command} {report.source}"]

    if report.error is not None:
        lines.append(f"❌ {report.error.type}: {report.error.message}")
        lines.extend(f"  {key}: {_format(value)}" for key, value in report.error.diagnostics.items())
        return "\n".join(lines)

    if report.box is not None:
        lines.append(f"box: {report.box}")

    for key, value in report.results.items():
        if key == "grid":
            lines.append("grid:")
            lines.extend(f"  {row}" for row in value)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend(f"  - {_format(item)}" for item in value)
        else:
            lines.append(f"{key}: {_format(value)}")

    lines.extend(f"⚠️ warning: {warning}" for warning in report.warnings)

    return "\n".join(lines)
