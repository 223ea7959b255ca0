"""Canonical JSON text: number formatting and compact dumps."""

from __future__ import annotations

import math

import pytest

from geoforge.jsontext import dumps, format_number, loads


def test_float_formatting():
    assert format_number(0.0) == "0"
    assert format_number(-0.0) == "0"
    assert format_number(0.5) == "0.5"
    assert format_number(0.1) == "0.1"
    assert format_number(-2.25) == "-2.25"
    assert format_number(1e-9) == "1e-09"
    assert format_number(123456.75) == "123456.75"
    assert format_number(1.0) == "1"
    assert format_number(1e6) == "1000000"


def test_int_formatting():
    assert format_number(0) == "0"
    assert format_number(-17) == "-17"
    assert format_number(12345678901234567890) == "12345678901234567890"


def test_twelve_significant_digits():
    assert format_number(0.1234567890123456) == "0.123456789012"
    assert format_number(987654.3210987654) == "987654.321099"


def test_rejects_bools_and_nonfinite():
    with pytest.raises(TypeError):
        format_number(True)
    with pytest.raises(ValueError):
        format_number(math.nan)
    with pytest.raises(ValueError):
        format_number(math.inf)


def test_dumps_compact_and_ordered():
    doc = {"b": [1, 2.5, None], "a": {"x": -0.0, "ok": True, "no": False}, "s": 'q"u'}
    text = dumps(doc)
    assert text == '{"b":[1,2.5,null],"a":{"x":0,"ok":true,"no":false},"s":"q\\"u"}'
    assert loads(text) == {"b": [1, 2.5, None], "a": {"x": 0, "ok": True, "no": False}, "s": 'q"u'}


def test_dumps_rejects_unsupported_types():
    with pytest.raises(TypeError):
        dumps({"x": {1, 2}})


def test_parse_then_dump_is_stable_for_short_decimals():
    text = '{"points":[[0.123456,0.5],[1e-05,123456.789012]]}'
    assert dumps(loads(text)) == text
