import json

import pytest

from randcpd.core import ChangePointSet
from randcpd.segfile import (
    SegmentationFileError,
    dumps_segmentation,
    parse_segmentation,
    read_segmentation,
    write_segmentation,
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ('{"n": 10, "changepoints": [3, 8]}', ChangePointSet(10, (3, 8))),
        ('{"n": 10, "changepoints": []}', ChangePointSet(10)),
        ('{"labels": [0, 0, 0, 1, 1, 1, 1, 1, 2, 2]}', ChangePointSet(10, (3, 8))),
        ('{"n": 3, "labels": [5, 5, 5]}', ChangePointSet(3)),
        ("10\n3 8\n", ChangePointSet(10, (3, 8))),
        ("10\n\n", ChangePointSet(10)),
        ("10", ChangePointSet(10)),
        ("  12 \n 1   11 \n", ChangePointSet(12, (1, 11))),
    ],
)
def test_parse(text, expected):
    assert parse_segmentation(text) == expected


@pytest.mark.parametrize(
    "text,field",
    [
        ('{"changepoints": [3]}', "n:"),
        ('{"n": 10}', "exactly one"),
        ('{"n": 10, "changepoints": [3], "labels": [0]}', "exactly one"),
        ('{"n": 10, "changepoints": [3, "x"]}', r"changepoints\[1\]"),
        ('{"n": "10", "changepoints": []}', "n:"),
        ('{"n": 4, "labels": [0, 0, 1]}', "n:"),
        ('{"labels": [0, 1, 0]}', "contiguous"),
        ('{"n": 10, "changepoints": [8, 3]}', r"points\[1\]"),
        ('{"n": 10, "changepoints": [10]}', "outside"),
        ('{"n": 1, "changepoints": []}', "n:"),
        ("{broken", "invalid JSON"),
        ("[1, 2]", "n:"),
        ("", "n:"),
        ("ten\n3\n", "n:"),
        ("10\n3 x\n", r"changepoints\[1\]"),
        ("10\n3\n4\n", "single line"),
    ],
)
def test_parse_errors_name_field(text, field):
    with pytest.raises(SegmentationFileError, match=field):
        parse_segmentation(text)


def test_normalize():
    assert parse_segmentation("10\n8 3 3\n", normalize=True) == ChangePointSet(10, (3, 8))
    with pytest.raises(SegmentationFileError):
        parse_segmentation("10\n8 3 3\n")


def test_round_trip(tmp_path):
    c = ChangePointSet(20, (1, 7, 19))
    path = tmp_path / "seg.json"
    write_segmentation(c, path)
    assert read_segmentation(path) == c
    assert json.loads(dumps_segmentation(c)) == {"n": 20, "changepoints": [1, 7, 19]}


def test_missing_file(tmp_path):
    with pytest.raises(SegmentationFileError, match="nope.json"):
        read_segmentation(tmp_path / "nope.json")
