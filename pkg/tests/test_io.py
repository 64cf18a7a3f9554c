from fractions import Fraction

import pytest

import lexfan as lf
from lexfan import InputError
from lexfan import io as lio
from oracles import chain_complex, seg_cell


def test_parse_rational_forms():
    assert lio.parse_rational("3/4") == Fraction(3, 4)
    assert lio.parse_rational("-1/2") == Fraction(-1, 2)
    assert lio.parse_rational(7) == Fraction(7)
    assert lio.parse_rational("7") == Fraction(7)
    for bad in ("1/0", "0.5", "a", True, None, [1]):
        with pytest.raises(InputError):
            lio.parse_rational(bad)


def test_format_rational_canonical():
    assert lio.format_rational(Fraction(2, 4)) == "1/2"
    assert lio.format_rational(Fraction(-3)) == "-3/1"
    assert lio.format_rational(0) == "0/1"


def test_polyhedron_roundtrip(segment):
    doc = lio.polyhedron_to_json(segment)
    again = lio.polyhedron_from_json(doc)
    assert again.key == segment.key
    assert lio.polyhedron_to_json(again) == doc


def test_complex_roundtrip():
    c = chain_complex()
    doc = lio.complex_to_json(c)
    again = lio.complex_from_json(doc)
    assert [p.key for p in again.cells] == [p.key for p in c.cells]
    assert lio.complex_to_json(again) == doc


def test_fan_roundtrip(chain_fan):
    doc = lio.fan_to_json(chain_fan)
    again = lio.fan_from_json(doc)
    assert [c.key for c in again.cones] == [c.key for c in chain_fan.cones]
    assert lio.fan_to_json(again) == doc


def test_laurent_roundtrip():
    doc = {"terms": [{"u": [1], "val": ["0/1", "-1/1"]}, {"u": [0], "val": [2, "1/3"]}]}
    f = lio.laurent_from_json(doc, n=1, k=2)
    emitted = lio.laurent_to_json(f)
    assert emitted == {
        "terms": [
            {"u": [0], "val": ["2/1", "1/3"]},
            {"u": [1], "val": ["0/1", "-1/1"]},
        ]
    }
    assert lio.laurent_to_json(lio.laurent_from_json(emitted)) == emitted


def test_emission_deterministic(chain_fan):
    a = lio.dumps(lio.fan_to_json(chain_fan))
    b = lio.dumps(lio.fan_to_json(lf.cone_over_complex(chain_complex())))
    assert a == b


def test_detect_kind():
    assert lio.detect_kind({"halfspaces": []}) == "polyhedron"
    assert lio.detect_kind({"cells": []}) == "complex"
    assert lio.detect_kind({"cones": []}) == "fan"
    assert lio.detect_kind({"terms": []}) == "laurent"
    with pytest.raises(InputError):
        lio.detect_kind({"what": 1})
    with pytest.raises(InputError):
        lio.detect_kind([1, 2])


def test_field_precise_errors():
    with pytest.raises(InputError) as exc:
        lio.polyhedron_from_json(
            {"n": 1, "k": 2, "halfspaces": [{"u": [1], "gamma": ["x", "0"]}]}
        )
    assert "halfspaces[0].gamma[0]" in str(exc.value)
    with pytest.raises(InputError) as exc:
        lio.polyhedron_from_json({"n": 2, "k": 1, "halfspaces": [{"u": [1], "gamma": [0]}]})
    assert "halfspaces[0].u" in str(exc.value)
    with pytest.raises(InputError) as exc:
        lio.complex_from_json({"n": 1, "k": 1, "cells": [[{"u": [1]}]]})
    assert "cells[0][0].gamma" in str(exc.value)


def test_shape_errors():
    with pytest.raises(InputError):
        lio.polyhedron_from_json({"n": "x", "k": 1, "halfspaces": []})
    with pytest.raises(InputError):
        lio.polyhedron_from_json({"n": -1, "k": 1, "halfspaces": []})


def test_fiber_report_docs(chain_fan):
    rep = lf.fiber_report(chain_fan)
    doc = lio.fiber_report_to_json(rep)
    assert [lv["component_count"] for lv in doc["levels"]] == [3, 2, 1]
    assert doc["generic_complete"] is True
    text = lio.fiber_report_to_text(rep)
    assert "level 0: 3 component(s)" in text
    assert "generic fan: 3 cones, complete" in text
