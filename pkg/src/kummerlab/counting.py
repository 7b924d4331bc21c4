"""Plane-curve counting: the rational-curve recursion and conic
characteristic numbers by exact elimination.

The degree recursion needs nothing beyond big integers and binomials.
The characteristic-number solver works on exact linear systems of conics:
point conditions are linear, and a tangency condition restricts to a
quadric (the line paired against the adjugate matrix).  Counting proceeds
by resultant elimination with certificates that every counted solution is
an honest smooth conic; inputs where the certificates fail are rejected
as special-position rather than silently miscounted.

Double lines through the point conditions are the classical excess.  With
two point conditions the excess sits at e0 = (line AB)^2 inside the
3-space of conics through A and B, and the polarized tangency form
factors as  B_L(e0, v) = (L.A)(L.B) * ell(v)  with ell independent of L
(an identity of the adjugate, checked generically).  Eliminating the e0
coordinate first therefore removes the excess before any resultant is
taken, and Bezout counts come out clean.
"""

import math
from fractions import Fraction

import sympy

from .config import _adjugate, label
from .errors import DegenerateConditions
from .forms import BinaryForm, form_gcd
from .plane import Conic, Line, Point, are_collinear, join_points
from .scalars import rat, scalar_to_json, sqrt_scalar


class CountTable:
    """degree -> number of degree-d rational curves through 3d-1 points."""

    def __init__(self, entries):
        entries = {int(d): int(n) for d, n in dict(entries).items()}
        if entries.get(1) != 1:
            raise ValueError("the degree-1 count must be 1")
        if any(n <= 0 for n in entries.values()):
            raise ValueError("counts must be positive")
        self.entries = entries

    def __getitem__(self, d):
        return self.entries[d]

    def __contains__(self, d):
        return d in self.entries

    def __len__(self):
        return len(self.entries)

    def rows(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        return isinstance(other, CountTable) and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"{d}: {n}" for d, n in self.rows())
        return f"CountTable({{{body}}})"


def kontsevich_counts(d_max, descending=False):
    """Counts for degrees 1..d_max by the standard degeneration recursion

        n_d = sum over d1+d2=d of n_d1 n_d2 *
              [d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)]

    in exact integer arithmetic.  `descending` flips the summation order;
    the result must not depend on it (used as a self-check in tests).
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    n = {1: 1}
    for d in range(2, d_max + 1):
        parts = range(1, d)
        if descending:
            parts = reversed(parts)
        total = 0
        for d1 in parts:
            d2 = d - d1
            total += n[d1] * n[d2] * (
                d1 * d1 * d2 * d2 * math.comb(3 * d - 4, 3 * d1 - 2)
                - d1 ** 3 * d2 * math.comb(3 * d - 4, 3 * d1 - 1))
        n[d] = total
    return CountTable(n)


# ------------------------------------------------------- conic conditions

class CharacteristicQuery:
    """Five conditions on a conic: points to pass through, lines to touch."""

    def __init__(self, points, lines):
        pts = [p if isinstance(p, Point) else Point(*p) for p in points]
        lns = [l if isinstance(l, Line) else Line(*l) for l in lines]
        if len(pts) + len(lns) != 5:
            raise ValueError("a conic query needs exactly five conditions")
        self.points = tuple(pts)
        self.lines = tuple(lns)

    @property
    def k(self):
        return len(self.points)

    def dual(self):
        return CharacteristicQuery([Point(*l.coords) for l in self.lines],
                                   [Line(*p.coords) for p in self.points])

    def __repr__(self):
        return f"CharacteristicQuery({self.k} points, {len(self.lines)} lines)"


class SolutionRecord:
    """One solution conic with its intersection multiplicity and rank.

    counted says whether it enters the characteristic number: rank-3
    always; rank-2 only when every tangency is honest (double contact at
    a smooth point of the line pair); rank <= 1 never.
    """

    def __init__(self, conic, multiplicity, rank, counted, note=""):
        self.conic = conic
        self.multiplicity = multiplicity
        self.rank = rank
        self.counted = counted
        self.note = note

    def to_json(self):
        return {"conic": [scalar_to_json(c) for c in self.conic.coeffs],
                "multiplicity": self.multiplicity, "rank": self.rank,
                "counted": self.counted, "note": self.note}

    def __repr__(self):
        return (f"SolutionRecord(mult={self.multiplicity}, rank={self.rank},"
                f" counted={self.counted})")


def _point_row(p):
    x, y, z = p.coords
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def _vec_matrix(vec):
    a, b, c, d, e, f = vec
    return ((2 * a, d, e), (d, 2 * b, f), (e, f, 2 * c))


def _tangency_at(vec, line):
    adj = _adjugate(_vec_matrix(vec))
    l = line.coords
    return sum(l[i] * adj[i][j] * l[j] for i in range(3) for j in range(3))


def _tangency_polar(v1, v2, line):
    both = tuple(a + b for a, b in zip(v1, v2))
    return _tangency_at(both, line) - _tangency_at(v1, line) \
        - _tangency_at(v2, line)


def _nullspace(rows, width):
    """Basis of the right kernel, exact arithmetic over the entry field."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def _binary_quadratic_roots(q):
    """Projective roots of a nonzero binary quadratic, with multiplicity;
    irrational pairs land in one quadratic extension via sqrt_scalar."""
    c0, c1, c2 = q.coeffs
    if c2 == 0:
        if c1 == 0:
            return [((Fraction(1), Fraction(0)), 2)]
        return [((Fraction(1), Fraction(0)), 1),
                ((-c0 / c1, Fraction(1)), 1)]
    disc = c1 * c1 - 4 * c0 * c2
    if disc == 0:
        return [((-c1 / (2 * c2), Fraction(1)), 2)]
    r = sqrt_scalar(disc)
    return [(((-c1 + r) / (2 * c2), Fraction(1)), 1),
            (((-c1 - r) / (2 * c2), Fraction(1)), 1)]


def _pair_tangency_is_honest(conic, lines):
    """For a rank-2 conic (two lines), tangency counts only when the
    double contact happens at a smooth point: never at the vertex, and
    the line must not be a component of the pair."""
    kernel = _nullspace([list(r) for r in conic.matrix2m()], 3)
    if len(kernel) != 1:
        return False
    vertex = kernel[0]
    for line in lines:
        if sum(a * b for a, b in zip(line.coords, vertex)) == 0:
            return False          # contact at the singular point
    return True


def _pencil_solutions(points, line):
    """Solutions for 4 point conditions and one tangency, with records."""
    basis = _nullspace([_point_row(p) for p in points], 6)
    if len(basis) != 2:
        raise DegenerateConditions("point conditions do not cut a pencil",
                                   dimension=len(basis))
    ca, cb = basis
    q = BinaryForm(2, [_tangency_at(cb, line),
                       _tangency_polar(ca, cb, line),
                       _tangency_at(ca, line)])
    if q.is_zero:
        raise DegenerateConditions("the whole pencil meets the tangency "
                                   "quadric")
    records = []
    for (t, u), mult in _binary_quadratic_roots(q):
        vec = tuple(t * a + u * b for a, b in zip(ca, cb))
        conic = Conic(*vec)
        rank = conic.rank()
        if rank <= 1:
            records.append(SolutionRecord(conic, mult, rank, False,
                                          "double line discarded"))
        elif rank == 2:
            honest = _pair_tangency_is_honest(conic, [line])
            note = "line pair, honest tangency" if honest else \
                "line pair, contact at the vertex"
            records.append(SolutionRecord(conic, mult, rank, honest, note))
        else:
            records.append(SolutionRecord(conic, mult, rank, True))
    return records


# ------------------------------------------------------ sympy elimination

_L0, _L1, _L2 = sympy.symbols("l0 l1 l2")
_SYMS = (_L0, _L1, _L2)


def _sp(x):
    x = rat(x)
    return sympy.Rational(x.numerator, x.denominator)


def _quadric_poly(basis, line):
    """Tangency quadric restricted to span(basis), as a sympy expression."""
    n = len(basis)
    expr = sympy.Integer(0)
    for i in range(n):
        expr += _sp(_tangency_at(basis[i], line)) * _SYMS[i] ** 2
        for j in range(i + 1, n):
            expr += _sp(_tangency_polar(basis[i], basis[j], line)) \
                * _SYMS[i] * _SYMS[j]
    return sympy.expand(expr)


def _det_poly(vectors):
    """det of the 2M matrix of a conic whose 6 coefficients are the given
    sympy expressions; degree 3 in their variables."""
    a, b, c, d, e, f = vectors
    m = sympy.Matrix([[2 * a, d, e], [d, 2 * b, f], [e, f, 2 * c]])
    return sympy.expand(m.det())


class _Projection:
    """A coordinate shear plus pivot choice making resultants faithful:
    both quadrics keep a nonzero pivot^2 coefficient (a constant, since
    they are homogeneous), so projected common roots correspond exactly
    to common solutions."""

    def __init__(self, q1, q2, syms=_SYMS):
        self.syms = syms
        for sub in self._candidates(syms):
            a = sympy.expand(q1.subs(sub)) if sub else q1
            b = sympy.expand(q2.subs(sub)) if sub else q2
            for pivot in syms:
                if a.coeff(pivot, 2) != 0 and b.coeff(pivot, 2) != 0:
                    self.sub = sub
                    self.pivot = pivot
                    self.rest = [s for s in syms if s != pivot]
                    self.q1 = a
                    self.q2 = b
                    return
        raise DegenerateConditions("no faithful projection found")

    @staticmethod
    def _candidates(syms):
        yield {}
        for shift in (1, -1, 2, -2, 3):
            for i in range(3):
                for j in range(3):
                    if i != j:   # unimodular shear, always invertible
                        yield {syms[i]: syms[i] + shift * syms[j]}

    def eliminant(self):
        return self._form(sympy.resultant(self.q1, self.q2, self.pivot))

    def eliminate_against(self, poly):
        p = sympy.expand(poly.subs(self.sub)) if self.sub else poly
        return self._form(sympy.resultant(self.q1, p, self.pivot))

    def _form(self, expr):
        """Resultant output as a binary form in the two kept variables
        (first kept variable plays t); homogeneous by construction."""
        expr = sympy.expand(expr)
        if expr == 0:
            return BinaryForm(0, [Fraction(0)])
        x, y = self.rest
        poly = sympy.Poly(expr, x, y)
        degree = max(i + j for (i, j), _ in poly.terms())
        coeffs = [Fraction(0)] * (degree + 1)
        for (i, j), c in poly.terms():
            assert i + j == degree
            coeffs[i] = Fraction(int(c.p), int(c.q))
        return BinaryForm(degree, coeffs)


def _certify_rank3(proj, det_expr, eliminant):
    """No counted solution is a degenerate conic: the eliminant must share
    no root with the elimination of the rank-drop locus."""
    down = proj.eliminate_against(det_expr)
    if down.is_zero:
        raise DegenerateConditions("rank-drop locus interferes with the "
                                   "solution set")
    g = form_gcd(eliminant, down)
    if g.degree > 0:
        raise DegenerateConditions("possible degenerate-conic solutions",
                                   shared_degree=g.degree)


def _count_five_points(points):
    basis = _nullspace([_point_row(p) for p in points], 6)
    if len(basis) != 1:
        raise DegenerateConditions("five points do not determine one conic",
                                   dimension=len(basis))
    conic = Conic(*basis[0])
    if conic.rank() != 3:
        raise DegenerateConditions("the conic through the points is "
                                   "degenerate", rank=conic.rank())
    return 1


def _count_net(points, lines):
    if are_collinear(*points):
        raise DegenerateConditions("three point conditions are collinear")
    basis = _nullspace([_point_row(p) for p in points], 6)
    if len(basis) != 3:
        raise DegenerateConditions("point conditions do not cut a net",
                                   dimension=len(basis))
    q1 = _quadric_poly(basis, lines[0])
    q2 = _quadric_poly(basis, lines[1])
    if q1 == 0 or q2 == 0:
        raise DegenerateConditions("a tangency condition vanishes on the "
                                   "whole net")
    proj = _Projection(q1, q2)
    eliminant = proj.eliminant()
    if eliminant.is_zero:
        raise DegenerateConditions("tangency quadrics share a component")
    combo = [sum(_sp(b[k]) * _SYMS[i] for i, b in enumerate(basis))
             for k in range(6)]
    _certify_rank3(proj, _det_poly(combo), eliminant)
    return 4


def _count_web(points, lines):
    a, b = points
    if a == b:
        raise DegenerateConditions("point conditions coincide")
    ell = join_points(a, b).coords
    e0 = (ell[0] ** 2, ell[1] ** 2, ell[2] ** 2, 2 * ell[0] * ell[1],
          2 * ell[0] * ell[2], 2 * ell[1] * ell[2])
    null = _nullspace([_point_row(a), _point_row(b)], 6)
    if len(null) != 4:
        raise DegenerateConditions("point conditions are dependent")
    # complement basis: three kernel vectors independent of e0
    comp = []
    rows = [list(e0)]
    for v in null:
        trial = rows + [list(v)]
        if len(_nullspace(trial, 6)) == 6 - len(trial):
            rows = trial
            comp.append(v)
        if len(comp) == 3:
            break
    if len(comp) != 3:
        raise DegenerateConditions("could not complete the adapted basis")

    cs = []
    for line in lines:
        la = sum(x * y for x, y in zip(line.coords, a.coords))
        lb = sum(x * y for x, y in zip(line.coords, b.coords))
        cs.append(la * lb)
    if all(c == 0 for c in cs):
        raise DegenerateConditions("every tangency line passes through a "
                                   "point condition")
    ip = next(i for i, c in enumerate(cs) if c != 0)
    beta = [_tangency_polar(e0, v, lines[ip]) for v in comp]
    if all(x == 0 for x in beta):
        raise DegenerateConditions("double-line coordinate cannot be "
                                   "eliminated")
    qs = [_quadric_poly(comp, line) for line in lines]
    us = [sympy.expand(cs[ip] * qs[j] - cs[j] * qs[ip])
          for j in range(3) if j != ip]
    if us[0] == 0 or us[1] == 0:
        raise DegenerateConditions("tangency conditions are dependent on "
                                   "the adapted system")
    proj = _Projection(us[0], us[1])
    eliminant = proj.eliminant()
    if eliminant.is_zero:
        raise DegenerateConditions("tangency quadrics share a component")

    _web_spurious_check(beta, us, qs[ip], comp)

    # solution conic as a polynomial map: X(v) = -q_ip(v) e0 + beta(v) v
    qip = qs[ip]
    betalin = sum(_sp(beta[i]) * _SYMS[i] for i in range(3))
    xvec = [sympy.expand(-qip * _sp(e0[k])
                         + betalin * sum(_sp(c[k]) * _SYMS[i]
                                         for i, c in enumerate(comp)))
            for k in range(6)]
    _certify_rank3(proj, _det_poly(xvec), eliminant)
    return 4


def _web_spurious_check(beta, us, qip, comp):
    """Points with beta = 0 carry no lift (the e0 coordinate blows up):
    they must not lie on both adapted quadrics."""
    line_basis = _nullspace([beta], 3)
    w1, w2 = line_basis
    t, u = sympy.symbols("t u")
    subs = {s: _sp(w1[i]) * t + _sp(w2[i]) * u
            for i, s in enumerate(_SYMS)}
    r1 = sympy.expand(us[0].subs(subs))
    if r1 == 0:
        raise DegenerateConditions("adapted quadric contains the beta line")
    poly = sympy.Poly(r1, t, u)
    coeffs = [Fraction(0)] * 3
    for (i, j), c in poly.terms():
        coeffs[i] = Fraction(int(c.p), int(c.q))
    for (tv, uv), _ in _binary_quadratic_roots(BinaryForm(2, coeffs)):
        point = {s: tv * rat(w1[i]) + uv * rat(w2[i])
                 for i, s in enumerate(_SYMS)}
        val2 = _eval_sympy(us[1], point)
        if val2 == 0:
            raise DegenerateConditions("solution without a conic lift on "
                                       "the beta line")


def _eval_sympy(expr, assignment):
    """Evaluate a sympy polynomial at exact scalars (Fraction/QuadExt)."""
    total = 0
    for monom, coeff in sympy.Poly(expr, *_SYMS).terms():
        term = Fraction(int(coeff.p), int(coeff.q))
        for s, e in zip(_SYMS, monom):
            for _ in range(e):
                term = term * assignment[s]
        total = total + term
    return total


def conic_characteristic(query):
    """Number of smooth conics through the query's points and tangent to
    its lines, counted with multiplicity; 0 or 1 point conditions are
    handled through the point/line duality swap."""
    k = query.k
    if k <= 1:
        return conic_characteristic(query.dual())
    if k == 5:
        return _count_five_points(query.points)
    if k == 4:
        records = _pencil_solutions(query.points, query.lines[0])
        bad = [r for r in records if not r.counted]
        if bad:
            raise DegenerateConditions(
                "degenerate conics satisfy the conditions",
                discarded=[r.to_json() for r in bad])
        return sum(r.multiplicity for r in records)
    if k == 3:
        return _count_net(query.points, query.lines)
    return _count_web(query.points, query.lines)


def deformation_witness(config, node_labels, line_index):
    """Conics through four chosen nodes tangent to one configuration line,
    with explicit coordinates (at most one square root is ever needed on
    this path, so solutions always have concrete coordinates).

    Returns the full records; the multiplicity-inclusive count of the
    counted ones realizes the four-point characteristic number even when
    a chosen node lies on the tangency line (the contact point is then
    pinned there and the eliminant root doubles).
    """
    labels = [label(p) for p in node_labels]
    if len(set(labels)) != 4:
        raise ValueError("exactly four distinct nodes required")
    try:
        nodes = [config.node_map[l] for l in labels]
    except KeyError as bad:
        raise ValueError(f"no node with label {sorted(bad.args[0])}")
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                if are_collinear(nodes[i], nodes[j], nodes[k]):
                    raise DegenerateConditions(
                        "three selected nodes are collinear",
                        nodes=[sorted(labels[i]), sorted(labels[j]),
                               sorted(labels[k])])
    return _pencil_solutions(nodes, config.line(line_index))
