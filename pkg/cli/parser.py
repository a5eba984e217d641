"""
Line-oriented input format.

    kind: rank-one
    rank: 3
    box: 5              # optional
    preset: sl2xt2      # optional, fills alpha / alpha_dual / coroots
    [generators]
    1 1 0
    0 0 1
    [alpha]
    2 0 0
    [alpha_dual]
    1 0 0

`#` starts a comment; blank lines are ignored.
"""

import re
import sys
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from config.settings import PRESETS_DIR
from shared.errors import InputFormatError

from .enums import InputKind
from .serializers import InputDescription

KEYS = ("kind", "rank", "box", "preset")
SECTIONS = ("generators", "alpha", "alpha_dual", "coroots")
SINGLE_ROW_SECTIONS = ("alpha", "alpha_dual")

SECTION_PATTERN = re.compile(r"^\[(?P<name>[a-z_]+)\]$")
KEY_PATTERN = re.compile(r"^(?P<key>[a-z_]+)\s*:\s*(?P<value>\S+)$")


def parse_vector(text: str, where: str = "") -> list[int]:
    try:
        return [int(token) for token in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputFormatError(f"{where}expected integers, got {text!r}") from exc


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"Expected a rational number, got {text!r}") from exc


def parse_term(text: str) -> tuple[list[int], Fraction]:
    """'3 1' or '3 1:2/3' -> exponent and coefficient."""

    exponent, _, coefficient = text.partition(":")
    return parse_vector(exponent), parse_fraction(coefficient) if coefficient else Fraction(1)


def _scan(text: str, source: str) -> tuple[dict[str, str], dict[str, list[list[int]]]]:
    keys: dict[str, str] = {}
    sections: dict[str, list[list[int]]] = {}
    current = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{number}: "

        if match := SECTION_PATTERN.match(line):
            current = match["name"]
            if current not in SECTIONS:
                raise InputFormatError(f"{where}unknown section [{current}]")
            if current in sections:
                raise InputFormatError(f"{where}duplicate section [{current}]")
            sections[current] = []
            continue

        if match := KEY_PATTERN.match(line):
            if current is not None:
                raise InputFormatError(f"{where}key {match['key']!r} after a section started")
            if match["key"] not in KEYS:
                raise InputFormatError(f"{where}unknown key {match['key']!r}")
            keys[match["key"]] = match["value"]
            continue

        if current is None:
            raise InputFormatError(f"{where}vector outside of a section: {line!r}")
        sections[current].append(parse_vector(line, where))

    for name in SINGLE_ROW_SECTIONS:
        if name in sections and len(sections[name]) != 1:
            raise InputFormatError(f"{source}: section [{name}] must hold exactly one vector")

    return keys, sections


def load_preset(name: str) -> tuple[int, dict[str, list[list[int]]]]:
    path = PRESETS_DIR / f"{name}.txt"
    if not path.is_file():
        known = sorted(p.stem for p in PRESETS_DIR.glob("*.txt"))
        raise InputFormatError(f"Unknown preset {name!r}", diagnostics={"presets": known})

    keys, sections = _scan(path.read_text(encoding="utf-8"), source=path.name)
    return int(keys["rank"]), sections


def parse_text(text: str, source: str = "<input>") -> InputDescription:
    keys, sections = _scan(text, source)

    for key in ("kind", "rank"):
        if key not in keys:
            raise InputFormatError(f"{source}: missing key {key!r}")

    kinds = dict(InputKind.choices())
    if keys["kind"] not in kinds:
        raise InputFormatError(f"{source}: unknown kind {keys['kind']!r}", diagnostics={"kinds": kinds})

    try:
        rank = int(keys["rank"])
        box = int(keys["box"]) if "box" in keys else None
    except ValueError as exc:
        raise InputFormatError(f"{source}: rank and box must be integers") from exc

    if "preset" in keys:
        preset_rank, preset = load_preset(keys["preset"])
        if preset_rank != rank:
            raise InputFormatError(f"{source}: preset {keys['preset']!r} has rank {preset_rank}, input has {rank}")
        for name, rows in preset.items():
            sections.setdefault(name, rows)

    payload = {
        "kind": keys["kind"],
        "ambient_rank": rank,
        "generators": sections.get("generators", []),
        "alpha": sections["alpha"][0] if "alpha" in sections else None,
        "alpha_dual": sections["alpha_dual"][0] if "alpha_dual" in sections else None,
        "coroots": sections.get("coroots"),
        "box": box,
    }

    try:
        return InputDescription(**payload)
    except ValidationError as exc:
        raise InputFormatError(
            f"{source}: invalid input description",
            diagnostics={"errors": [error["msg"] for error in exc.errors()]},
        ) from exc


def read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()

    path = Path(source)
    if not path.is_file():
        raise InputFormatError(f"Input file {source!r} does not exist")

    return path.read_text(encoding="utf-8")


def list_presets() -> list[str]:
    return sorted(p.stem for p in PRESETS_DIR.glob("*.txt"))
