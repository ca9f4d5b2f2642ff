"""Reading and writing segmentation files.

Two on-disk forms are accepted:

* JSON: ``{"n": 10, "changepoints": [3, 8]}`` or ``{"labels": [0, 0, 1, ...]}``
  (``n`` is optional with labels, and must match their count if given).
* Plain text: first line is ``n``, second line holds space-separated
  change-points and may be empty or missing.

Change-points are interior, 1-based indices; ``0`` and ``n`` are never listed.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import ChangePointError, ChangePointSet, from_labels, new_change_point_set


class SegmentationFileError(ValueError):
    """The file could not be read or does not describe a valid segmentation."""


def _parse_int(token: str, field: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SegmentationFileError(f"{field}: not an integer: {token!r}") from None


def _int_list(value, field: str) -> list:
    if not isinstance(value, list):
        raise SegmentationFileError(f"{field}: expected a list of integers")
    for idx, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, int):
            raise SegmentationFileError(f"{field}[{idx}]: expected an integer, got {v!r}")
    return value


def _from_json(obj, normalize: bool) -> ChangePointSet:
    if not isinstance(obj, dict):
        raise SegmentationFileError("expected a JSON object")
    has_cp = "changepoints" in obj
    has_labels = "labels" in obj
    if has_cp == has_labels:
        raise SegmentationFileError("exactly one of 'changepoints' or 'labels' is required")
    n = obj.get("n")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
        raise SegmentationFileError(f"n: expected an integer, got {n!r}")
    if has_labels:
        labels = _int_list(obj["labels"], "labels")
        if n is not None and n != len(labels):
            raise SegmentationFileError(f"n: {n} does not match {len(labels)} labels")
        return from_labels(labels)
    if n is None:
        raise SegmentationFileError("n: required alongside 'changepoints'")
    return new_change_point_set(n, _int_list(obj["changepoints"], "changepoints"), normalize)


def _from_text(text: str, normalize: bool) -> ChangePointSet:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise SegmentationFileError("n: missing on line 1")
    n = _parse_int(lines[0].strip(), "n")
    rest = [ln for ln in lines[1:] if ln.strip()]
    if len(rest) > 1:
        raise SegmentationFileError("changepoints: expected a single line after n")
    tokens = rest[0].split() if rest else []
    points = [_parse_int(tok, f"changepoints[{idx}]") for idx, tok in enumerate(tokens)]
    return new_change_point_set(n, points, normalize)


def parse_segmentation(text: str, normalize: bool = False) -> ChangePointSet:
    """Parse file contents in either supported format."""
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise SegmentationFileError(f"invalid JSON: {exc}") from None
            return _from_json(obj, normalize)
        return _from_text(text, normalize)
    except ChangePointError as exc:
        raise SegmentationFileError(str(exc)) from None


def read_segmentation(path: Union[str, Path], normalize: bool = False) -> ChangePointSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SegmentationFileError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_segmentation(text, normalize)
    except SegmentationFileError as exc:
        raise SegmentationFileError(f"{path}: {exc}") from None


def dumps_segmentation(c: ChangePointSet) -> str:
    return json.dumps({"n": c.n, "changepoints": list(c.points)})


def write_segmentation(c: ChangePointSet, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_segmentation(c) + "\n", encoding="utf-8")
