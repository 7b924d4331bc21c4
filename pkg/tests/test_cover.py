"""Double covers of a parametrized conic branched along the six lines."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummerlab.cover import (
    pullback_sextic, RootDescriptor, analyze_cover, normalization_model,
)
from kummerlab.forms import BinaryForm, form_t, form_u
from kummerlab.plane import RationalMap, parametrize_conic, parameter_of_point
from kummerlab.locus import humbert5_residual
from kummerlab.config import CYCLIC_SELECTION
from kummerlab.scalars import QuadExt
from kummerlab.errors import CurveInsideSextic, OddDegree, SplitCover, ZeroForm

T = form_t()
U = form_u()


# ------------------------------------------------------- structural cases

def test_analyze_rejects_zero_and_odd_degree():
    with pytest.raises(ZeroForm):
        analyze_cover(BinaryForm(2, [0, 0, 0]))
    with pytest.raises(OddDegree):
        analyze_cover(T * T * T)


def test_all_even_multiplicities_split():
    an = analyze_cover((T * (T + U)) ** 2)
    assert an.split
    assert an.branch_points == []
    assert an.node_count == 2
    assert an.genus_normalization == 0
    assert an.reduced.degree == 0
    assert not an.flags


def test_odd_multiplicity_prevents_splitting():
    an = analyze_cover(T ** 3 * (T + U) ** 3)
    assert not an.split
    assert an.branch_count == 2
    assert an.node_count == 0  # odd multiplicity claims the whole locus
    assert an.genus_normalization == 0
    assert an.reduced == T * (T + U)


def test_four_branch_points_give_genus_one():
    an = analyze_cover(T * (T + U) * (T + 2 * U) * (T + 3 * U))
    assert not an.split
    assert an.branch_count == 4
    assert an.genus_normalization == 1
    assert an.flags == ["NotRationalCurve"]


def test_descriptor_at_infinity():
    an = analyze_cover(U * U * T * (T + U))
    inf = [d for d in an.node_params if d.at_infinity]
    assert len(inf) == 1
    assert inf[0].parameter == (Fraction(1), Fraction(0))


def test_irrational_conjugate_roots_reported_as_factor():
    an = analyze_cover((T * T - 2 * U * U) * T * U ** 3)
    quad = [d for d in an.branch_points if not d.is_rational]
    assert len(quad) == 1
    assert quad[0].parameter is None
    assert quad[0].factor.degree == 2
    obj = an.to_json()
    kinds = {("parameter" in d, "factor" in d) for d in obj["branch_points"]}
    assert kinds == {(True, False), (False, True)}


def test_unit_square_part_is_stripped_from_reduced():
    # 9 is a square: the reduced model keeps only the squarefree core
    an = analyze_cover(9 * T * (T + U) ** 3)
    assert an.reduced == T * (T + U)
    an2 = analyze_cover(18 * T * (T + U) ** 3)
    assert an2.reduced == 2 * T * (T + U)


def test_normalization_model_requires_non_split():
    with pytest.raises(SplitCover):
        normalization_model((T * (T + U)) ** 2)


def test_nested_sheets_for_irreducible_node_locus():
    model = normalization_model((T * T + U * U) ** 2 * T * (T + U))
    nested = [s for s in model.node_sheets if s.nested]
    assert len(nested) == 1
    assert nested[0].plus is None
    assert nested[0].parameter is None


# -------------------------------------------------------- the shipped cover

@pytest.fixture(scope="module")
def preset_cover(preset, preset_phi):
    return pullback_sextic(preset, preset_phi)


def test_preset_pullback_degree(preset_cover):
    assert preset_cover.degree == 12


def test_preset_pullback_root_structure(preset_cover):
    an = analyze_cover(preset_cover)
    assert not an.split
    assert an.profile.multiplicity_sum() == 12
    doubles = sorted(d.parameter[0] for d in an.node_params)
    assert [d.multiplicity for d in an.node_params] == [2] * 5
    assert doubles == sorted([0, -1, -4, Fraction(-4, 3), Fraction(-12, 11)])
    assert an.branch_count == 2
    (quad,) = an.branch_points
    assert quad.factor == BinaryForm(2, [12, 9, -1])
    assert quad.multiplicity == 1
    assert an.genus_normalization == 0
    assert an.flags == []


def test_preset_double_roots_sit_at_selected_nodes(preset, preset_phi, preset_cover):
    an = analyze_cover(preset_cover)
    expected = {lab: parameter_of_point(preset_phi, preset.node(*lab))
                for lab in CYCLIC_SELECTION}
    assert {d.parameter for d in an.node_params} == set(expected.values())
    assert expected[(1, 2)] == (Fraction(0), Fraction(1))
    assert expected[(2, 3)] == (Fraction(-1), Fraction(1))
    assert expected[(3, 4)] == (Fraction(-4, 3), Fraction(1))
    assert expected[(4, 5)] == (Fraction(-4), Fraction(1))
    assert expected[(5, 1)] == (Fraction(-12, 11), Fraction(1))


def test_preset_reduced_form(preset_cover):
    an = analyze_cover(preset_cover)
    assert an.reduced == BinaryForm(2, [24, 18, -2])
    # F / F_red is a perfect square: same odd part
    q, r = divmod(12, an.reduced.degree)
    assert r == 0


def test_preset_sheet_values(preset_cover):
    model = normalization_model(preset_cover)
    by_param = {s.parameter[0]: s for s in model.node_sheets}
    assert by_param[0].plus == QuadExt(0, 2, 6) and by_param[0].m == 6
    assert by_param[-1].plus == 2 and by_param[-1].m is None
    assert by_param[Fraction(-4, 3)].plus == QuadExt(0, Fraction(4, 3), -2)
    assert by_param[-4].plus == QuadExt(0, 4, -5)
    assert by_param[Fraction(-12, 11)].plus == QuadExt(0, Fraction(4, 11), 15)
    for s in model.node_sheets:
        assert s.minus == -s.plus
        # sheet values square to the reduced form at the node
        t, u = s.parameter
        assert s.plus * s.plus == model.reduced.evaluate(t, u)


def test_preset_genus_zero_model(preset_cover):
    model = normalization_model(preset_cover)
    assert model.genus == 0
    assert len(model.branch) == 1 and model.branch[0].degree == 2


def test_curve_inside_sextic_detected(preset):
    # a map whose image is the line z = 0, which is configuration line 1
    zero = BinaryForm(1, [0, 0])
    flat = RationalMap(T, U, zero)
    with pytest.raises(CurveInsideSextic) as err:
        pullback_sextic(preset, flat)
    assert err.value.payload["line"] == 1


def test_on_locus_cover_splits(tangent_config):
    res = humbert5_residual(tangent_config, CYCLIC_SELECTION)
    phi = parametrize_conic(res.conic, tangent_config.node(5, 1))
    F = pullback_sextic(tangent_config, phi)
    an = analyze_cover(F)
    assert an.split
    assert an.branch_points == []
    with pytest.raises(SplitCover):
        normalization_model(F)


# ------------------------------------------------------------- properties

@settings(max_examples=80, deadline=None, derandomize=True)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)),
                min_size=1, max_size=4, unique_by=lambda re: re[0]))
def test_split_iff_all_multiplicities_even(roots):
    F = BinaryForm(0, [Fraction(1)])
    for r, e in roots:
        F = F * BinaryForm(1, [-r, 1]) ** (2 * e)
    an = analyze_cover(F)
    assert an.split and an.branch_points == []
    flipped = F * BinaryForm(1, [-roots[0][0], 1]) * BinaryForm(1, [1, 0])
    an2 = analyze_cover(flipped)
    assert not an2.split
    assert an2.profile.multiplicity_sum() == flipped.degree
    assert an2.branch_count % 2 == 0
