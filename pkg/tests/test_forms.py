"""Binary forms: arithmetic, gcd, squarefree structure, rational maps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummerlab.forms import (
    BinaryForm, one_form, form_t, form_u, linear_form_vanishing_at,
    form_gcd, is_squarefree, form_divides, squarefree_decomposition,
    RationalMap,
)
from kummerlab.errors import ZeroForm

T = form_t()
U = form_u()


def lin(c0, c1):
    return BinaryForm(1, [c0, c1])  # c0*u + c1*t


# -------------------------------------------------------------- arithmetic

def test_constructor_validates_length():
    with pytest.raises(ValueError):
        BinaryForm(2, [1, 2])


def test_addition_needs_matching_degree():
    with pytest.raises(ValueError):
        T + (T * U)


def test_product_degrees_add():
    f = (T + U) * (T - U)
    assert f.degree == 2
    assert f == T * T - U * U


def test_power_and_scalar():
    f = (2 * T + U) ** 2
    assert f == BinaryForm(2, [1, 4, 4])
    assert (Fraction(1, 2) * f).coeffs[2] == 2


def test_evaluate():
    f = T * T - 3 * T * U + 2 * U * U
    assert f.evaluate(1, 1) == 0
    assert f.evaluate(2, 1) == 0
    assert f.evaluate(0, 1) == 2


def test_derivatives_satisfy_euler():
    f = BinaryForm(3, [1, -2, 0, 5])
    t, u = Fraction(3), Fraction(-2)
    euler = t * f.dt().evaluate(t, u) + u * f.du().evaluate(t, u)
    assert euler == 3 * f.evaluate(t, u)


def test_u_multiplicity():
    assert (U * U * (T + U)).u_multiplicity() == 2
    assert (T * T).u_multiplicity() == 0
    with pytest.raises(ZeroForm):
        BinaryForm(1, [0, 0]).u_multiplicity()


def test_linear_form_vanishing_at():
    f = linear_form_vanishing_at(Fraction(3), Fraction(2))
    assert f.evaluate(3, 2) == 0
    assert f.degree == 1 and not f.is_zero


def test_primitive_normalization():
    unit, prim = BinaryForm(1, [Fraction(-2, 3), Fraction(-4, 3)]).primitive()
    assert prim == lin(1, 2)
    assert unit == Fraction(-2, 3)
    assert unit * prim == BinaryForm(1, [Fraction(-2, 3), Fraction(-4, 3)])


# --------------------------------------------------------------- division

def test_form_gcd_shared_factors():
    g = form_gcd(T * T * (T - U), T * (T - U) * (T - U))
    assert g == T * (T - U)


def test_form_gcd_coprime_is_constant():
    assert form_gcd(T, U).degree == 0


def test_form_gcd_rejects_zero():
    with pytest.raises(ZeroForm):
        form_gcd(T, BinaryForm(1, [0, 0]))


def test_form_divides():
    assert form_divides(T - U, T * T - U * U)
    assert not form_divides(T + 2 * U, T * T - U * U)
    assert form_divides(U, U * (T + U))
    assert not form_divides(U * U, U * (T + U))


def test_is_squarefree():
    assert is_squarefree((T - U) * (T + U) * (2 * T + 3 * U))
    assert not is_squarefree((T - U) ** 2 * T)
    assert not is_squarefree(U * U * (T + U))
    assert is_squarefree(one_form())


# ----------------------------------------------------------- factorization

def test_decomposition_two_double_factors():
    F = T * T * (T - U) * (T - U)
    d = squarefree_decomposition(F)
    assert d.unit == 1
    assert [(f.coeffs, e) for f, e in d] == [
        ((Fraction(0), Fraction(1)), 2),      # t^2
        ((Fraction(1), Fraction(-1)), 2),     # (u - t)^2 == (t - u)^2
    ]
    assert d.expand() == F


def test_decomposition_three_simple_factors():
    F = (T - U) * (T + U) * (2 * T + 3 * U)
    d = squarefree_decomposition(F)
    assert d.unit == -1
    assert [(f.coeffs, e) for f, e in d] == [
        ((Fraction(1), Fraction(-1)), 1),
        ((Fraction(1), Fraction(1)), 1),
        ((Fraction(3), Fraction(2)), 1),
    ]
    assert d.expand() == F


def test_decomposition_irreducible_cube():
    F = (T * T + U * U) ** 3
    d = squarefree_decomposition(F)
    assert len(d) == 1
    (f, e), = d.factors
    assert e == 3
    assert f == T * T + U * U
    assert d.expand() == F


def test_decomposition_zero_rejected():
    with pytest.raises(ZeroForm):
        squarefree_decomposition(BinaryForm(2, [0, 0, 0]))


# ------------------------------------------------------------ rational maps

def test_rational_map_divides_common_factor():
    phi = RationalMap(T * U, T * T, T * (T + U))
    assert phi.degree == 1
    assert phi.components == (U, T, T + U)


def test_rational_map_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        RationalMap(T, T * T, T)


def test_rational_map_rejects_zero():
    z = BinaryForm(1, [0, 0])
    with pytest.raises(ZeroForm):
        RationalMap(z, z, z)


def test_rational_map_integer_normalized():
    phi = RationalMap(Fraction(1, 2) * T, Fraction(3, 2) * U, T + U)
    assert phi.components == (T, 3 * U, 2 * (T + U))


# ------------------------------------------------------------- properties

small_frac = st.fractions(min_value=-8, max_value=8, max_denominator=4)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 4)),
                min_size=1, max_size=4),
       st.integers(0, 2))
def test_decomposition_reconstructs_linear_products(roots, ubeta):
    F = U ** ubeta if ubeta else one_form()
    for r, e in roots:
        F = F * lin(-r, 1) ** e
    d = squarefree_decomposition(F)
    assert d.expand() == F
    total = sum(f.degree * e for f, e in d)
    assert total == F.degree
    for f, e in d:
        u, p = f.primitive()
        assert u == 1 and p == f  # factors come out primitive
        assert form_divides(f ** e, F)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(small_frac, min_size=2, max_size=4),
       st.lists(small_frac, min_size=2, max_size=4))
def test_gcd_divides_both(cs, ds):
    f = BinaryForm(len(cs) - 1, cs)
    g = BinaryForm(len(ds) - 1, ds)
    if f.is_zero or g.is_zero:
        return
    h = form_gcd(f, g)
    assert form_divides(h, f)
    assert form_divides(h, g)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(small_frac, min_size=2, max_size=5),
       st.lists(small_frac, min_size=2, max_size=5),
       small_frac, small_frac)
def test_evaluate_is_multiplicative(cs, ds, t, u):
    f = BinaryForm(len(cs) - 1, cs)
    g = BinaryForm(len(ds) - 1, ds)
    assert (f * g).evaluate(t, u) == f.evaluate(t, u) * g.evaluate(t, u)
