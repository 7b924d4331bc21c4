"""Binary forms (homogeneous polynomials in t, u) and rational maps.

A BinaryForm of degree d stores d+1 coefficients in ascending t-power:
coeffs[k] multiplies t^k u^(d-k).  Coefficients are Fractions or QuadExt
elements; all arithmetic stays exact.  The zero form of any degree is
allowed and reports is_zero.

Factorization into irreducible factors over Q (squarefree_decomposition)
delegates to sympy after dehomogenizing; everything else, including gcds
over a quadratic extension, is done directly on coefficient lists.
"""

from fractions import Fraction
from math import gcd as igcd

import sympy

from .errors import ZeroForm
from .scalars import QuadExt, is_rational, rat


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = tuple(rat(c) if isinstance(c, (int, str)) else c
                       for c in coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_coeffs(cls, coeffs):
        coeffs = list(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return f"BinaryForm(0; degree {self.degree})"
        terms = []
        d = self.degree
        for k in range(d, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "*".join(filter(None, [
                f"t^{k}" if k > 1 else ("t" if k == 1 else ""),
                f"u^{d-k}" if d - k > 1 else ("u" if d - k == 1 else "")]))
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(self.degree,
                          [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            d = self.degree + other.degree
            out = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(d, out)
        return BinaryForm(self.degree, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k):
        out = one_form()
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, t, u):
        d = self.degree
        total = Fraction(0)
        tp = 1
        # Horner in two sweeps would be tidier; degrees stay tiny here.
        for k, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * tp * u ** (d - k)
            tp = tp * t
        return total

    def dt(self):
        """Partial derivative with respect to t."""
        if self.degree == 0:
            return BinaryForm(0, [Fraction(0)])
        return BinaryForm(self.degree - 1,
                          [k * self.coeffs[k] for k in range(1, self.degree + 1)])

    def du(self):
        if self.degree == 0:
            return BinaryForm(0, [Fraction(0)])
        d = self.degree
        return BinaryForm(d - 1, [(d - k) * self.coeffs[k] for k in range(d)])

    def u_multiplicity(self):
        """Largest beta with u^beta dividing the form."""
        if self.is_zero:
            raise ZeroForm("zero form has no u-multiplicity")
        top = max(k for k, c in enumerate(self.coeffs) if c != 0)
        return self.degree - top

    def dehomogenized(self):
        """Coefficient list of F(x, 1), ascending, trailing zeros kept off."""
        top = max((k for k, c in enumerate(self.coeffs) if c != 0), default=0)
        return list(self.coeffs[:top + 1])

    def is_rational_form(self):
        return all(is_rational(c) for c in self.coeffs)

    def primitive(self):
        """Canonical primitive representative (rational coefficients only):
        coprime integer coefficients, first nonzero positive.  Returns
        (unit, primitive form) with unit * primitive == self."""
        if not self.is_rational_form():
            raise TypeError("primitive form needs rational coefficients")
        if self.is_zero:
            return Fraction(1), self
        cs = [rat(c) for c in self.coeffs]
        den = 1
        for c in cs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in cs]
        g = 0
        for n in ints:
            g = igcd(g, n)
        first = next(n for n in ints if n != 0)
        if first < 0:
            g = -g
        return Fraction(g, den), BinaryForm(self.degree, [Fraction(n, g) for n in ints])


def one_form():
    return BinaryForm(0, [Fraction(1)])


def form_t():
    return BinaryForm(1, [0, 1])


def form_u():
    return BinaryForm(1, [1, 0])


def linear_form_vanishing_at(t0, u0):
    """Degree-1 form with root (t0 : u0)."""
    return BinaryForm(1, [-t0, u0])


def _poly_normalize(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        if c != 0:
            q[k] = c
            for j, bc in enumerate(b):
                a[k + j] = a[k + j] - c * bc
    return _poly_normalize(q), _poly_normalize(a[:len(b) - 1])


def _poly_gcd(a, b):
    a, b = _poly_normalize(list(a)), _poly_normalize(list(b))
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def form_gcd(f, g):
    """Monic-style gcd of two nonzero forms over their coefficient field."""
    if f.is_zero or g.is_zero:
        raise ZeroForm("gcd of zero form")
    beta = min(f.u_multiplicity(), g.u_multiplicity())
    d = _poly_gcd(f.dehomogenized(), g.dehomogenized())
    deg = len(d) - 1 + beta
    coeffs = list(d) + [Fraction(0)] * beta
    return BinaryForm(deg, coeffs)


def is_squarefree(F):
    if F.is_zero:
        raise ZeroForm()
    if F.degree == 0:
        return True
    if F.u_multiplicity() >= 2:
        return False
    f = F.dehomogenized()
    if len(f) == 1:
        return True  # F = c * u^beta with beta <= 1
    fp = [k * f[k] for k in range(1, len(f))]
    return len(_poly_gcd(f, fp)) == 1


def form_divides(f, g):
    """Does f divide g exactly?"""
    bf, bg = f.u_multiplicity(), g.u_multiplicity()
    if bf > bg:
        return False
    _, r = _poly_divmod(g.dehomogenized(), f.dehomogenized())
    return not r


class Factorization:
    """unit * prod(factor^multiplicity) == original form."""

    def __init__(self, unit, factors):
        self.unit = unit
        self.factors = list(factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        return f"Factorization(unit={self.unit}, factors={self.factors})"

    def expand(self):
        out = one_form() * self.unit
        for f, e in self.factors:
            out = out * f ** e
        return out


_X = sympy.Symbol("x")


def squarefree_decomposition(F):
    """Factor a rational binary form into irreducible factors over Q.

    Returns a Factorization whose factor list is ordered canonically
    (ascending degree, then lexicographic on coefficient tuples) with each
    factor a primitive integer form, first nonzero coefficient positive.
    The unevaluated unit makes the product exact.
    """
    if F.is_zero:
        raise ZeroForm("cannot factor the zero form")
    if not F.is_rational_form():
        raise TypeError("factorization is over Q")
    beta = F.u_multiplicity()
    poly = sympy.Poly(F.dehomogenized()[::-1], _X, domain="QQ")
    const, parts = poly.factor_list()
    unit = Fraction(const.p, const.q)
    factors = []
    if beta:
        factors.append((form_u(), beta))
    for p, e in parts:
        cs = [Fraction(c.p, c.q) for c in p.all_coeffs()[::-1]]
        deg = len(cs) - 1
        f = BinaryForm(deg, cs)
        u_f, f = f.primitive()
        unit *= u_f ** e
        factors.append((f, e))
    factors.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return Factorization(unit, factors)


class RationalMap:
    """Base-point-free map P^1 -> P^2 given by three degree-d forms.

    The constructor divides out any common factor and, for rational
    coefficients, rescales to coprime integer coefficients overall.
    """

    __slots__ = ("degree", "components")

    def __init__(self, fx, fy, fz):
        comps = [fx, fy, fz]
        if all(f.is_zero for f in comps):
            raise ZeroForm("map needs a nonzero component")
        if len({f.degree for f in comps}) != 1:
            raise ValueError("components must share one degree")
        nonzero = [f for f in comps if not f.is_zero]
        g = nonzero[0]
        for f in nonzero[1:]:
            g = form_gcd(g, f)
        if g.degree > 0:
            comps = [_exact_quotient(f, g) for f in comps]
        if all(f.is_rational_form() for f in comps):
            comps = _integer_normalize(comps)
        self.degree = comps[0].degree
        self.components = tuple(comps)

    def __repr__(self):
        return f"RationalMap{self.components}"

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.components == other.components

    def evaluate(self, t, u):
        return tuple(f.evaluate(t, u) for f in self.components)


def _exact_quotient(f, g):
    if f.is_zero:
        return BinaryForm(f.degree - g.degree, [Fraction(0)] * (f.degree - g.degree + 1))
    q, r = _poly_divmod(f.dehomogenized(), g.dehomogenized())
    if r:
        raise ValueError("not an exact quotient")
    deg = f.degree - g.degree
    coeffs = list(q) + [Fraction(0)] * (deg + 1 - len(q))
    return BinaryForm(deg, coeffs)


def _integer_normalize(comps):
    d = comps[0].degree
    den = 1
    for f in comps:
        for c in f.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
    g = 0
    ints = []
    for f in comps:
        row = [c.numerator * (den // c.denominator) for c in f.coeffs]
        ints.append(row)
        for n in row:
            g = igcd(g, n)
    first = next(n for row in ints for n in row if n != 0)
    if first < 0:
        g = -g
    return [BinaryForm(d, [Fraction(n, g) for n in row]) for row in ints]
