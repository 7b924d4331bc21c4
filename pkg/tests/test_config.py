"""Six-tangent-line configurations, validity reports, invariants, IO."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummerlab.config import (
    INF, DEFAULT_BASE, DEFAULT_BASE_POINT, CYCLIC_SELECTION, THETA,
    SexticConfiguration, build_config, config_from_lines, nodes, validate,
    label, DivisorClass, humbert_invariant, canonical_json,
    config_to_json, config_to_text, config_from_json, config_from_text,
)
from kummerlab.plane import Point, Line, incident
from kummerlab.errors import (
    DuplicateParameter, ConcurrentLines, TangencyFailure, NegativeInvariant,
    ParseError,
)


# ----------------------------------------------------------------- labels

def test_label_normalizes():
    assert label((5, 1)) == frozenset({1, 5})
    assert label((2, 3)) == label((3, 2))


def test_label_rejects_bad_pairs():
    with pytest.raises(ValueError):
        label((1, 1))
    with pytest.raises(ValueError):
        label((0, 2))
    with pytest.raises(ValueError):
        label((1, 7))


# ------------------------------------------------------------ construction

def test_preset_has_fifteen_distinct_nodes(preset):
    nd = nodes(preset)
    assert len(nd) == 15
    assert len(set(nd.values())) == 15
    for key, pt in nd.items():
        on = [i for i in range(1, 7) if incident(pt, preset.line(i))]
        assert sorted(on) == sorted(key)
    assert preset.report.all_pass


def test_node_accessors_agree(preset):
    assert preset.node(5, 1) == preset.node((1, 5))
    sel = preset.selection_nodes(CYCLIC_SELECTION)
    assert sel == [preset.node(i, j) for i, j in CYCLIC_SELECTION]


def test_duplicate_parameter_rejected():
    with pytest.raises(DuplicateParameter):
        build_config([0, 1, -1, 2, -2, 0])
    with pytest.raises(DuplicateParameter):
        build_config([INF, 1, -1, 2, -2, (3, 0)])  # (3:0) is the same as INF


def test_six_parameters_required():
    with pytest.raises(ValueError):
        build_config([0, 1, -1, 2, -2])


def test_infinite_parameter_gives_tangent_at_infinity():
    cfg = build_config([INF, 1, -1, 2, -2, 3])
    assert cfg.line(1) == Line(1, 0, 0)  # tangent to y^2 = xz at (0:0:1)
    assert cfg.report.all_pass


def test_lines_are_tangent_to_base(preset):
    from kummerlab.plane import tangency_residual
    for l in preset.lines:
        assert tangency_residual(preset.base, l) == 0


def test_config_from_lines_round_trip(preset):
    rebuilt = config_from_lines(preset.lines)
    assert rebuilt.base == preset.base
    assert rebuilt.lines == preset.lines
    assert nodes(rebuilt) == nodes(preset)


def test_config_from_lines_rejects_non_tangent(preset):
    lines = list(preset.lines)
    lines[5] = Line(1, 1, 1)  # secant to the base conic
    with pytest.raises(TangencyFailure):
        config_from_lines(lines)


def test_validity_report_flags_broken_tangency(preset):
    lines = list(preset.lines)
    lines[2] = Line(1, 1, 1)
    cfg = SexticConfiguration(preset.base, lines)
    assert not cfg.report.all_pass
    names = [n for n, _ in cfg.report.failures()]
    assert "tangency" in names


# ---------------------------------------------------------------- invariant

def test_divisor_class_requires_even_self_intersection():
    with pytest.raises(ValueError):
        DivisorClass(1, 1)


def test_invariant_reference_values():
    assert humbert_invariant(THETA) == 0
    assert humbert_invariant(DivisorClass(1, 0)) == 1
    assert humbert_invariant(DivisorClass(3, 2)) == 5


def test_invariant_negative_rejected():
    with pytest.raises(NegativeInvariant):
        humbert_invariant(DivisorClass(1, 2))


@settings(max_examples=200, deadline=None, derandomize=True)
@given(st.integers(-12, 12), st.integers(-12, 12))
def test_invariant_zero_exactly_on_theta_multiples(a, k):
    b = 2 * k
    if a * a - 2 * b < 0:
        with pytest.raises(NegativeInvariant):
            humbert_invariant(DivisorClass(a, b))
        return
    delta = humbert_invariant(DivisorClass(a, b))
    is_theta_multiple = a % 2 == 0 and b == (a // 2) ** 2 * 2
    assert (delta == 0) == is_theta_multiple


# --------------------------------------------------------------------- IO

def test_canonical_json_ignores_key_order():
    a = canonical_json({"b": 1, "a": [2, 3]})
    b = canonical_json({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert ": " not in a


def test_json_round_trip_is_byte_identical(preset):
    text = config_to_text(preset)
    again = config_from_text(text)
    assert config_to_text(again) == text
    assert again.base == preset.base
    assert again.lines == preset.lines
    assert again.params == preset.params


def test_round_trip_without_params(preset):
    rebuilt = config_from_lines(preset.lines)
    text = config_to_text(rebuilt)
    again = config_from_text(text)
    assert config_to_text(again) == text
    assert again.params is None


def test_parse_rejects_tampered_node(preset):
    obj = config_to_json(preset)
    key = sorted(obj["nodes"])[0]
    obj["nodes"][key] = ["1/1", "1/1", "1/1"]
    with pytest.raises(ParseError):
        config_from_json(obj)


def test_parse_rejects_malformed_text():
    with pytest.raises(ParseError):
        config_from_text("{not json")
    with pytest.raises(ParseError):
        config_from_text(json.dumps({"base": [], "lines": [], "nodes": {}}))


# ------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                min_size=6, max_size=6, unique=True))
def test_distinct_parameters_always_build(params):
    cfg = build_config(params)
    assert cfg.report.all_pass
    nd = nodes(cfg)
    assert len(set(nd.values())) == 15
    for key, pt in nd.items():
        assert all(incident(pt, cfg.line(i)) for i in key)
