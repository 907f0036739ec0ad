"""
Arrangement text files.

    # comment
    ambient_dim = 3
    field_order = 3
    labels = x y z L0.0
    1, 0, 0
    0, 1, 0
    0, 0, 1
    (1, 1, 1)

Header keys may appear in any order before or between coefficient rows;
``field_order`` defaults to 1 and ``ambient_dim`` to the length of the first
row.  One hyperplane per row, coordinates separated by commas, each in the
cyclo literal syntax.  The writer emits ``Arrangement.canonical_text``, which
keeps the hyperplane order (the last hyperplane is X_d) and prints every
coefficient in canonical form, so the content hash is stable.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .arrangement import Arrangement, Hyperplane
from .cyclo import parse_cyclo
from .errors import ArrangementFormatError

PathLike = Union[str, Path]


def _parse_int(value: str, key: str, line_number: int) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise ArrangementFormatError(f"{key} must be an integer, got {value!r}", line_number) from exc


def parse_arrangement(text: str) -> Arrangement:
    ambient_dim = None
    field_order = 1
    labels: list[str] | None = None
    rows: list[tuple[int, list[str]]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = (part.strip() for part in line.partition("="))
            if key == "ambient_dim":
                ambient_dim = _parse_int(value, key, line_number)
            elif key == "field_order":
                field_order = _parse_int(value, key, line_number)
                if field_order < 1:
                    raise ArrangementFormatError(f"field_order must be positive, got {field_order}", line_number)
            elif key == "labels":
                labels = value.split()
            else:
                raise ArrangementFormatError(f"unknown header key {key!r}", line_number)
            continue
        body = line
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        rows.append((line_number, [part.strip() for part in body.split(",")]))

    if not rows:
        raise ArrangementFormatError("no hyperplanes found")
    if ambient_dim is None:
        ambient_dim = len(rows[0][1])
    if labels is not None and len(labels) != len(rows):
        raise ArrangementFormatError(f"{len(labels)} labels given for {len(rows)} hyperplanes")

    hyperplanes = []
    for index, (line_number, parts) in enumerate(rows):
        if len(parts) != ambient_dim:
            raise ArrangementFormatError(
                f"expected {ambient_dim} coordinates, found {len(parts)}", line_number
            )
        try:
            normal = tuple(parse_cyclo(part, field_order) for part in parts)
            hyperplanes.append(Hyperplane(normal, labels[index] if labels else ""))
        except ValueError as exc:
            raise ArrangementFormatError(str(exc), line_number) from exc

    try:
        return Arrangement(ambient_dim, field_order, tuple(hyperplanes))
    except ValueError as exc:
        raise ArrangementFormatError(str(exc)) from exc


def load_arrangement(path: PathLike) -> Arrangement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArrangementFormatError(f"cannot read {path}: {exc}") from exc
    return parse_arrangement(text)


def dump_arrangement(arrangement: Arrangement, path: PathLike) -> str:
    text = arrangement.canonical_text
    Path(path).write_text(text, encoding="utf-8")
    return text
