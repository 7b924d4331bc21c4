"""Exact projective plane: points, lines, conics, tangency.

Points and lines are homogeneous triples.  Canonical representatives make
equality and hashing coincide with projective equality: rational triples
are scaled to coprime integers with the first nonzero entry positive;
triples involving a quadratic extension are scaled so the first nonzero
entry is 1.

A conic is stored as the 6 coefficients (xx, yy, zz, xy, xz, yz) of
    A x^2 + B y^2 + C z^2 + D xy + E xz + F yz,
canonicalized the same way.  The associated symmetric matrix is
    [[2A, D, E], [D, 2B, F], [E, F, 2C]],
twice the usual Gram matrix, which keeps every entry integral.

tangency_residual evaluates the discriminant of the restriction of a conic
to a line along a documented parametrization of the line, so its exact
value (not only its vanishing) is reproducible: for a line l with first
nonzero coefficient at index i and remaining indices j < k, the
parametrization is p(t, u) = t * (l_i e_j - l_j e_i) + u * (l_i e_k - l_k e_i),
built from l's canonical coefficients.
"""

from fractions import Fraction
from math import gcd as igcd

from .errors import (DegeneratePoints, IdenticalLines, PointNotOnConic,
                     SingularConic, ZeroForm)
from .forms import BinaryForm, RationalMap
from .scalars import is_rational, rat


def _canonical(coords):
    coords = [rat(c) if isinstance(c, (int, str)) else c for c in coords]
    if all(c == 0 for c in coords):
        raise ValueError("homogeneous coordinates cannot all vanish")
    if all(is_rational(c) for c in coords):
        den = 1
        for c in coords:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in coords]
        g = 0
        for n in ints:
            g = igcd(g, n)
        if next(n for n in ints if n != 0) < 0:
            g = -g
        return tuple(Fraction(n // g) for n in ints)
    lead = next(c for c in coords if c != 0)
    return tuple(c / lead for c in coords)


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        self.coords = _canonical([x, y, z])

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"{type(self).__name__}({self[0]}, {self[1]}, {self[2]})"

    def is_rational(self):
        return all(is_rational(c) for c in self.coords)


class Point(_Triple):
    pass


class Line(_Triple):
    pass


def incident(p, l):
    return sum(a * b for a, b in zip(p, l)) == 0


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def meet_lines(l1, l2):
    x = _cross(l1, l2)
    if all(c == 0 for c in x):
        raise IdenticalLines("lines coincide", line=l1.coords)
    return Point(*x)


def join_points(p1, p2):
    x = _cross(p1, p2)
    if all(c == 0 for c in x):
        raise DegeneratePoints("points coincide", point=p1.coords)
    return Line(*x)


def are_collinear(p1, p2, p3):
    d = (p1[0] * (p2[1] * p3[2] - p2[2] * p3[1])
         - p1[1] * (p2[0] * p3[2] - p2[2] * p3[0])
         + p1[2] * (p2[0] * p3[1] - p2[1] * p3[0]))
    return d == 0


class Conic:
    """Plane conic by its 6 coefficients (xx, yy, zz, xy, xz, yz)."""

    __slots__ = ("coeffs",)

    def __init__(self, xx, yy, zz, xy, xz, yz):
        cs = [xx, yy, zz, xy, xz, yz]
        cs = [rat(c) if isinstance(c, (int, str)) else c for c in cs]
        if all(c == 0 for c in cs):
            raise ZeroForm("conic coefficients cannot all vanish")
        # reuse triple canonicalization on the 6-vector
        self.coeffs = _canonical6(cs)

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Conic", self.coeffs))

    def __repr__(self):
        names = ["x^2", "y^2", "z^2", "xy", "xz", "yz"]
        terms = [f"({c})*{n}" for c, n in zip(self.coeffs, names) if c != 0]
        return "Conic[" + " + ".join(terms) + "]"

    def evaluate(self, p):
        A, B, C, D, E, F = self.coeffs
        x, y, z = p
        return (A * x * x + B * y * y + C * z * z
                + D * x * y + E * x * z + F * y * z)

    def contains(self, p):
        return self.evaluate(p) == 0

    def matrix2m(self):
        A, B, C, D, E, F = self.coeffs
        return ((2 * A, D, E), (D, 2 * B, F), (E, F, 2 * C))

    def apply2m(self, p):
        m = self.matrix2m()
        return tuple(sum(m[i][j] * p[j] for j in range(3)) for i in range(3))

    def bilinear(self, p, q):
        """p^T (2M) q; twice the polar pairing."""
        mp = self.apply2m(q)
        return sum(a * b for a, b in zip(p, mp))

    def rank(self):
        rows = [list(r) for r in self.matrix2m()]
        rank = 0
        for col in range(3):
            piv = next((r for r in range(rank, 3) if rows[r][col] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            lead = rows[rank][col]
            for r in range(rank + 1, 3):
                if rows[r][col] != 0:
                    f = rows[r][col] / lead
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def is_smooth(self):
        return self.rank() == 3

    def polar_line(self, p):
        return Line(*self.apply2m(p))


def _canonical6(cs):
    if all(is_rational(c) for c in cs):
        den = 1
        for c in cs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in cs]
        g = 0
        for n in ints:
            g = igcd(g, n)
        if next(n for n in ints if n != 0) < 0:
            g = -g
        return tuple(Fraction(n // g) for n in ints)
    lead = next(c for c in cs if c != 0)
    return tuple(c / lead for c in cs)


def _conic_row(p):
    x, y, z = p
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def conic_through_five(points):
    """The unique conic through five points in general position.

    Raises DegeneratePoints when the incidence system has a solution space
    of dimension above one (four collinear points, repeated points, ...).
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError("exactly five points required")
    rows = [_conic_row(p) for p in pts]
    # Gaussian elimination to reduced row echelon form over the field
    pivots = []
    r = 0
    for col in range(6):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [a / lead for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if r < 5:
        raise DegeneratePoints("conic system is rank deficient", rank=r)
    free = next(c for c in range(6) if c not in pivots)
    sol = [Fraction(0)] * 6
    sol[free] = Fraction(1)
    for row, col in zip(rows, pivots):
        sol[col] = -row[free]
    conic = Conic(*sol)
    return conic


def line_basis_points(l):
    """The documented parametrization of a line: two raw (uncanonicalized)
    triples P1, P2 built from l's canonical coefficients; p(t,u) = t P1 + u P2."""
    c = l.coords
    i = next(k for k in range(3) if c[k] != 0)
    j, k = [n for n in range(3) if n != i]
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    p1 = tuple(c[i] * e[j][n] - c[j] * e[i][n] for n in range(3))
    p2 = tuple(c[i] * e[k][n] - c[k] * e[i][n] for n in range(3))
    return p1, p2


def tangency_residual(c, l):
    """Discriminant of the restriction of conic c to line l along the
    documented parametrization.  Zero iff l is tangent to c (or meets a
    singular point of a degenerate c)."""
    p1, p2 = line_basis_points(l)
    a = c.evaluate(p1)
    b = c.bilinear(p1, p2)
    cc = c.evaluate(p2)
    return b * b - 4 * a * cc


def restrict_to_line(c, l):
    """The binary quadratic (in t, u) of c restricted to l's parametrization."""
    p1, p2 = line_basis_points(l)
    return BinaryForm(2, [c.evaluate(p2), c.bilinear(p1, p2), c.evaluate(p1)])


def line_point_at(l, t, u):
    p1, p2 = line_basis_points(l)
    return Point(*(t * a + u * b for a, b in zip(p1, p2)))


def tangent_line_at(c, p):
    if not c.contains(p):
        raise PointNotOnConic("point off the conic", point=p.coords)
    if not c.is_smooth():
        raise SingularConic("tangent line needs a smooth conic", rank=c.rank())
    return c.polar_line(p)


def parametrize_conic(c, base):
    """Degree-2 parametrization of a smooth conic through a point on it.

    Sweeps the pencil of lines through the base point: with i the first
    nonzero coordinate of the (canonical) base point and a < b the other
    two indices, the direction D(t, u) = t e_b + u e_a gives
        X(t, u) = c(D) * base - (base^T 2M D) * D,
    a base-point-free degree-2 map whose image is exactly c.
    """
    if not c.contains(base):
        raise PointNotOnConic("base point off the conic", point=base.coords)
    if not c.is_smooth():
        raise SingularConic("parametrization needs a smooth conic", rank=c.rank())
    bc = base.coords
    i = next(k for k in range(3) if bc[k] != 0)
    a, b = [n for n in range(3) if n != i]
    directions = {a: BinaryForm(1, [1, 0]), b: BinaryForm(1, [0, 1])}
    D = [directions.get(n, BinaryForm(1, [0, 0])) for n in range(3)]
    A, B, C, Dc, E, F = c.coeffs
    cD = (A * D[0] * D[0] + B * D[1] * D[1] + C * D[2] * D[2]
          + Dc * D[0] * D[1] + E * D[0] * D[2] + F * D[1] * D[2])
    m2 = c.matrix2m()
    mb = tuple(sum(m2[r][s] * bc[s] for s in range(3)) for r in range(3))
    polar = BinaryForm(1, [0, 0])
    for r in range(3):
        if mb[r] != 0:
            polar = polar + mb[r] * D[r]
    comps = [cD * bc[n] - polar * D[n] for n in range(3)]
    return RationalMap(*comps)


def parameter_of_point(phi, p):
    """The (t : u) with phi(t, u) = p, for an injective rational map.

    Found as the common root of the 2x2 cross minors of (phi, p); raises
    PointNotOnConic when the point misses the image.
    """
    from .forms import form_gcd
    X = phi.components
    minors = []
    pairs = ((0, 1), (0, 2), (1, 2))
    for i, j in pairs:
        m = p.coords[j] * X[i] - p.coords[i] * X[j]
        if not m.is_zero:
            minors.append(m)
    if not minors:
        raise ValueError("degenerate map: all minors vanish")
    g = minors[0]
    for m in minors[1:]:
        g = form_gcd(g, m)
    if g.degree == 0:
        raise PointNotOnConic("point not on the parametrized curve",
                              point=[str(c) for c in p.coords])
    if g.degree != 1:
        raise ValueError("map is not injective at the point")
    c0, c1 = g.coeffs
    if c1 == 0:
        return (Fraction(1), Fraction(0))
    return (-c0 / c1, Fraction(1))


def pullback_form(phi, f):
    """Pull a line or conic back along a rational map, as a BinaryForm.

    The result vanishes at a parameter exactly when the image point lies
    on f, with intersection multiplicity as root multiplicity.  A zero
    result (image inside f) is returned as the flagged zero form.
    """
    X, Y, Z = phi.components
    if isinstance(f, Line):
        l0, l1, l2 = f.coords
        return l0 * X + l1 * Y + l2 * Z
    if isinstance(f, Conic):
        A, B, C, D, E, F = f.coeffs
        return (A * X * X + B * Y * Y + C * Z * Z
                + D * X * Y + E * X * Z + F * Y * Z)
    raise ZeroForm("pullback target must be a line or conic")
