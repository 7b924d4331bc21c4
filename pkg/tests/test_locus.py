"""Residual fitting, parameter families, scans, and root certificates."""

from fractions import Fraction

import pytest

from kummerlab.config import (
    CYCLIC_SELECTION, build_config, config_from_lines,
)
from kummerlab.locus import (
    humbert5_residual, check_selection, remaining_line_index,
    ConfigFamily, scan_family, isolate_root, RootCertificate,
    preset_config, sign_change_family, steady_sign_family, PRESET_PARAMS,
)
from kummerlab.plane import Point, Line, Conic, incident
from kummerlab.scalars import QuadExt, sign
from kummerlab.errors import (
    SelectionTouchesLine, DegenerateSelection, EmptyFamily, NoSignChange,
    DegenerateInside, DuplicateParameter,
)

R129 = QuadExt(0, 1, 129)

TANGENT_FAMILY = (-3, -1, 0, 4, Fraction(-1, 2), None)


# ----------------------------------------------------------- selections

def test_check_selection_validates():
    assert len(check_selection(CYCLIC_SELECTION)) == 5
    with pytest.raises(ValueError):
        check_selection(((1, 2), (2, 3), (3, 4), (4, 5)))
    with pytest.raises(ValueError):
        check_selection(((1, 2), (2, 1), (3, 4), (4, 5), (5, 1)))


def test_remaining_line_index():
    assert remaining_line_index(CYCLIC_SELECTION) == 6
    with pytest.raises(ValueError):
        remaining_line_index(((1, 2), (3, 4), (5, 6), (1, 3), (2, 4)))


# ------------------------------------------------------------- residual

def test_preset_residual_frozen(preset_residual):
    assert preset_residual.residual == 167184
    assert preset_residual.conic == Conic(4, -8, 1, -4, 5, -6)


def test_preset_fitted_conic_interpolates(preset, preset_residual):
    for lab in CYCLIC_SELECTION:
        assert preset_residual.conic.contains(preset.node(*lab))


def test_preset_meets_are_conjugate_over_129(preset, preset_residual):
    meets = preset_residual.meets
    assert [m for _, m in meets] == [1, 1]
    plus = Point(1, Fraction(-7, 4) + Fraction(1, 4) * R129,
                 Fraction(-39, 2) + Fraction(3, 2) * R129)
    minus = Point(1, Fraction(-7, 4) - Fraction(1, 4) * R129,
                  Fraction(-39, 2) - Fraction(3, 2) * R129)
    assert [p for p, _ in meets] == [plus, minus]
    line = preset.line(6)
    for p, _ in meets:
        assert incident(p, line)
        assert preset_residual.conic.contains(p)


def test_selection_touching_line_rejected(preset):
    # node {1,2} lies on line 1, so testing against line 1 is ill-posed
    with pytest.raises(SelectionTouchesLine) as err:
        humbert5_residual(preset, CYCLIC_SELECTION, line_index=1)
    assert err.value.payload["line"] == 1


def test_collinear_selection_rejected(preset):
    sel = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3))  # four nodes on line 1
    with pytest.raises(DegenerateSelection):
        humbert5_residual(preset, sel, line_index=6)


def test_exact_tangency_configuration(tangent_config):
    res = humbert5_residual(tangent_config, CYCLIC_SELECTION)
    assert res.residual == 0
    assert res.meets == [(Point(3, -7, 8), 2)]


def test_residual_zero_set_is_projectively_invariant(preset, tangent_config):
    A = [[1, 2, 0], [0, 1, 3], [1, 0, 1]]  # unimodular-ish, det 7

    def moved(cfg):
        lines = [Line(*(sum(l.coords[r] * A[r][c] for r in range(3))
                        for c in range(3))) for l in cfg.lines]
        return config_from_lines(lines)

    assert humbert5_residual(moved(preset), CYCLIC_SELECTION).residual != 0
    assert humbert5_residual(moved(tangent_config), CYCLIC_SELECTION).residual == 0


# -------------------------------------------------------------- families

def test_family_needs_exactly_one_hole():
    with pytest.raises(ValueError):
        ConfigFamily((0, 1, -1, 2, -2, 3), 0, 1)
    with pytest.raises(ValueError):
        ConfigFamily((None, 1, -1, 2, -2, None), 0, 1)


def test_family_interval_must_be_nonempty():
    with pytest.raises(EmptyFamily):
        ConfigFamily((0, 1, -1, 2, -2, None), 2, 2)


def test_family_member_fills_slot():
    fam = sign_change_family()
    assert fam.vary_slot == 6
    cfg = fam.member(Fraction(3, 2))
    assert cfg.params[5] == (Fraction(3, 2), 1)
    assert cfg.params[:5] == tuple((Fraction(p), Fraction(1)) for p in PRESET_PARAMS[:5])


def test_scan_sign_change_family():
    samples = scan_family(sign_change_family(), CYCLIC_SELECTION, grid=16)
    assert len(samples) == 16
    assert all(s.status == "ok" for s in samples)
    signs = {s.sign for s in samples}
    assert signs == {1, -1}
    # parameters are the uniform grid in order
    assert samples[0].parameter == Fraction(5, 4)
    assert samples[-1].parameter == Fraction(7, 4)


def test_scan_steady_family_has_constant_sign():
    samples = scan_family(steady_sign_family(), CYCLIC_SELECTION, grid=16)
    assert all(s.status == "ok" and s.sign == 1 for s in samples)


def test_scan_flags_roots_and_gaps():
    fam = ConfigFamily(TANGENT_FAMILY, -5, -3)
    samples = scan_family(fam, CYCLIC_SELECTION, grid=9)
    by_param = {s.parameter: s for s in samples}
    assert by_param[Fraction(-4)].status == "root"
    assert by_param[Fraction(-3)].status == "gap"
    assert by_param[Fraction(-3)].gap_reason == "DuplicateParameter"
    assert by_param[Fraction(-3)].sign is None
    others = [s for s in samples if s.parameter not in (-4, -3)]
    assert all(s.status == "ok" for s in others)


def test_scan_needs_two_samples():
    with pytest.raises(EmptyFamily):
        scan_family(sign_change_family(), CYCLIC_SELECTION, grid=1)


# ------------------------------------------------------------ certificates

def test_isolate_bracket_certificate():
    fam = ConfigFamily(TANGENT_FAMILY, -5, -3)
    cert = isolate_root(fam, CYCLIC_SELECTION, (-5, Fraction(-7, 2)))
    assert cert.kind == "bracket"
    assert cert.width <= Fraction(1, 10 ** 6)
    assert cert.a < -4 < cert.b
    assert cert.sign_a * cert.sign_b == -1
    assert cert.verify(fam)
    obj = cert.to_json()
    assert obj["kind"] == "bracket"
    assert set(obj) >= {"a", "b", "sign_a", "sign_b", "width", "selection", "line"}


def test_isolate_exact_certificate():
    fam = ConfigFamily(TANGENT_FAMILY, -5, -3)
    cert = isolate_root(fam, CYCLIC_SELECTION, (-4, Fraction(-7, 2)))
    assert cert.kind == "exact"
    assert cert.root == -4
    assert cert.width == 0
    assert cert.verify(fam)
    assert cert.to_json()["root"] == "-4/1"


def test_isolate_rejects_flat_bracket():
    with pytest.raises(NoSignChange):
        isolate_root(steady_sign_family(), CYCLIC_SELECTION,
                     (Fraction(5, 2), Fraction(7, 2)))


def test_isolate_validates_inputs():
    fam = sign_change_family()
    with pytest.raises(ValueError):
        isolate_root(fam, CYCLIC_SELECTION, (Fraction(5, 4), Fraction(7, 4)), tol=0)
    with pytest.raises(ValueError):
        isolate_root(fam, CYCLIC_SELECTION, (Fraction(7, 4), Fraction(5, 4)))


def test_isolate_reports_degeneracy_inside():
    # midpoint of (1/2, 3/2) repeats a fixed slot of the template
    fam = ConfigFamily((0, 1, -1, 2, -2, None), Fraction(1, 4), Fraction(7, 4))
    with pytest.raises(DegenerateInside) as err:
        isolate_root(fam, CYCLIC_SELECTION, (Fraction(1, 2), Fraction(3, 2)))
    assert err.value.payload["reason"] == "DuplicateParameter"


def test_certificate_survives_json_and_reverification():
    fam = sign_change_family()
    cert = isolate_root(fam, CYCLIC_SELECTION, (Fraction(5, 4), Fraction(7, 4)),
                        tol=Fraction(1, 1000))
    assert cert.kind == "bracket"
    assert cert.verify(fam)
    rebuilt = RootCertificate("bracket", CYCLIC_SELECTION, cert.line_index,
                              a=cert.a, b=cert.b,
                              sign_a=cert.sign_a, sign_b=cert.sign_b)
    assert rebuilt.verify(fam)
    # a tampered certificate fails re-verification
    flipped = RootCertificate("bracket", CYCLIC_SELECTION, cert.line_index,
                              a=cert.a, b=cert.b,
                              sign_a=cert.sign_b, sign_b=cert.sign_a)
    assert not flipped.verify(fam)
