"""Humbert tangency residual, family scans, and exact root isolation.

The residual of a configuration (for a choice of five nodes and a
remaining line) is the tangency discriminant of the conic fitted through
the five nodes against that line: zero exactly at a Humbert tangency
event.  Along a one-parameter family the residual is an exact rational
function of the parameter, so sign scans and bisection run entirely in
rational arithmetic and every certificate can be re-verified from
scratch.  Grid points where the residual vanishes exactly are reported as
exact roots, a stronger statement than any bracket.
"""

from fractions import Fraction

from .config import build_config
from .errors import (ConcurrentLines, DegenerateInside, DegeneratePoints,
                     DegenerateSelection, DuplicateParameter, EmptyFamily,
                     KummerError, NoSignChange, SelectionTouchesLine)
from .plane import Point, conic_through_five, incident, line_basis_points, tangency_residual
from .scalars import rat, scalar_to_json, sign, sqrt_scalar
from .config import label


class ResidualResult:
    def __init__(self, residual, conic, meets):
        self.residual = residual
        self.conic = conic
        self.meets = meets  # list of (Point, multiplicity)

    def __iter__(self):
        return iter((self.residual, self.conic, self.meets))

    def __repr__(self):
        return f"ResidualResult(residual={self.residual}, meets={len(self.meets)})"


def check_selection(selection):
    labels = [label(s) for s in selection]
    if len(labels) != 5 or len(set(labels)) != 5:
        raise ValueError("selection must contain five distinct node labels")
    return labels


def remaining_line_index(selection):
    used = set()
    for s in selection:
        used |= label(s)
    rest = [i for i in range(1, 7) if i not in used]
    if len(rest) != 1:
        raise ValueError("selection does not single out a remaining line")
    return rest[0]


def humbert5_residual(config, selection, line_index=None):
    """Fit the conic through five selected nodes and test tangency against
    the remaining line.  Returns (residual, conic, meets); meets lists the
    intersection points of conic and line with multiplicities, possibly
    with coordinates in a quadratic extension."""
    labels = check_selection(selection)
    if line_index is None:
        line_index = remaining_line_index(selection)
    line = config.line(line_index)
    for lab in labels:
        pt = config.node_map[lab]
        if incident(pt, line):
            raise SelectionTouchesLine("selected node lies on the remaining line",
                                       node=sorted(lab), line=line_index)
    pts = [config.node_map[lab] for lab in labels]
    try:
        conic = conic_through_five(pts)
    except DegeneratePoints as exc:
        raise DegenerateSelection("conic fit failed for the selection",
                                  **exc.payload) from exc
    residual = tangency_residual(conic, line)
    meets = _intersections(conic, line, residual)
    return ResidualResult(residual, conic, meets)


def _intersections(conic, line, disc):
    p1, p2 = line_basis_points(line)
    a = conic.evaluate(p1)           # t^2 coefficient
    b = conic.bilinear(p1, p2)
    c = conic.evaluate(p2)
    if a == 0 and b == 0 and c == 0:
        return []                    # line inside a degenerate conic
    roots = []
    if a == 0:
        roots.append(((Fraction(1), Fraction(0)), 2 if b == 0 else 1))
        if b != 0:
            roots.append(((-c / b, Fraction(1)), 1))
    elif disc == 0:
        roots.append(((-b / (2 * a), Fraction(1)), 2))
    else:
        root_disc = sqrt_scalar(disc)
        roots.append((((-b + root_disc) / (2 * a), Fraction(1)), 1))
        roots.append((((-b - root_disc) / (2 * a), Fraction(1)), 1))
    out = []
    for (t, u), mult in roots:
        pt = Point(*(t * x + u * y for x, y in zip(p1, p2)))
        out.append((pt, mult))
    return out


class ConfigFamily:
    """Six-slot parameter template with one varying slot over [lo, hi]."""

    def __init__(self, template, lo, hi, base=None, base_point=None):
        template = list(template)
        holes = [i for i, v in enumerate(template) if v is None]
        if len(holes) != 1:
            raise ValueError("template needs exactly one varying slot (None)")
        self.template = template
        self.vary_slot = holes[0] + 1          # 1-based, for reports
        self.lo = rat(lo)
        self.hi = rat(hi)
        self.base = base
        self.base_point = base_point
        if self.lo >= self.hi:
            raise EmptyFamily("parameter interval is empty",
                              lo=str(self.lo), hi=str(self.hi))

    def member(self, t):
        params = list(self.template)
        params[self.vary_slot - 1] = rat(t)
        return build_config(params, base=self.base, base_point=self.base_point)

    def __repr__(self):
        return (f"ConfigFamily(slot {self.vary_slot} over "
                f"[{self.lo}, {self.hi}])")


class ScanSample:
    def __init__(self, parameter, status, residual=None, gap_reason=None):
        self.parameter = parameter
        self.status = status                  # "ok" | "root" | "gap"
        self.residual = residual
        self.gap_reason = gap_reason

    @property
    def sign(self):
        if self.residual is None:
            return None
        return sign(self.residual)

    def __repr__(self):
        return f"ScanSample({self.parameter}, {self.status}, sign={self.sign})"


def _residual_at(family, selection, line_index, t):
    cfg = family.member(t)
    return humbert5_residual(cfg, selection, line_index).residual


def scan_family(family, selection, grid=64, line_index=None):
    """Evaluate the residual on a uniform grid; deterministic parameter
    order; configuration degeneracies become flagged gaps, exact zeros
    become exact roots."""
    check_selection(selection)
    if line_index is None:
        line_index = remaining_line_index(selection)
    if grid < 2:
        raise EmptyFamily("grid needs at least two samples", grid=grid)
    step = (family.hi - family.lo) / (grid - 1)
    samples = []
    for k in range(grid):
        t = family.lo + k * step
        try:
            r = _residual_at(family, selection, line_index, t)
        except KummerError as exc:
            samples.append(ScanSample(t, "gap", gap_reason=exc.name))
            continue
        samples.append(ScanSample(t, "root" if r == 0 else "ok", residual=r))
    return samples


class RootCertificate:
    """Bracketing certificate for a residual sign change (or an exact root).

    kind "bracket": [a, b] with opposite nonzero endpoint signs and width
    at most the requested tolerance.  kind "exact": the residual vanishes
    identically at `root`.  Either way everything re-verifies from scratch
    in exact arithmetic.
    """

    def __init__(self, kind, selection, line_index, a=None, b=None,
                 sign_a=None, sign_b=None, root=None):
        self.kind = kind
        self.selection = tuple(tuple(sorted(label(s))) for s in selection)
        self.line_index = line_index
        self.a, self.b = a, b
        self.sign_a, self.sign_b = sign_a, sign_b
        self.root = root

    @property
    def width(self):
        if self.kind == "exact":
            return Fraction(0)
        return self.b - self.a

    def verify(self, family):
        """Recompute endpoint signs (or the exact zero) from scratch."""
        if self.kind == "exact":
            return _residual_at(family, self.selection, self.line_index,
                                self.root) == 0
        ra = _residual_at(family, self.selection, self.line_index, self.a)
        rb = _residual_at(family, self.selection, self.line_index, self.b)
        return (sign(ra) == self.sign_a and sign(rb) == self.sign_b
                and self.sign_a * self.sign_b == -1)

    def to_json(self):
        obj = {"kind": self.kind,
               "selection": [list(s) for s in self.selection],
               "line": self.line_index}
        if self.kind == "exact":
            obj["root"] = scalar_to_json(self.root)
        else:
            obj.update(a=scalar_to_json(self.a), b=scalar_to_json(self.b),
                       sign_a=self.sign_a, sign_b=self.sign_b,
                       width=scalar_to_json(self.width))
        return obj

    def __repr__(self):
        if self.kind == "exact":
            return f"RootCertificate(exact root {self.root})"
        return f"RootCertificate([{self.a}, {self.b}], width={self.width})"


def isolate_root(family, selection, bracket, tol=Fraction(1, 10 ** 6),
                 line_index=None):
    """Exact bisection of a residual sign change down to width <= tol."""
    check_selection(selection)
    if line_index is None:
        line_index = remaining_line_index(selection)
    tol = rat(tol)
    if tol <= 0:
        raise ValueError("tolerance must be a positive rational")
    a, b = rat(bracket[0]), rat(bracket[1])
    if a >= b:
        raise ValueError("bracket must satisfy a < b")
    ra = _residual_at(family, selection, line_index, a)
    rb = _residual_at(family, selection, line_index, b)
    if ra == 0:
        return RootCertificate("exact", selection, line_index, root=a)
    if rb == 0:
        return RootCertificate("exact", selection, line_index, root=b)
    sa, sb = sign(ra), sign(rb)
    if sa * sb != -1:
        raise NoSignChange("endpoint residual signs do not differ",
                           sign_a=sa, sign_b=sb)
    while b - a > tol:
        m = (a + b) / 2
        try:
            rm = _residual_at(family, selection, line_index, m)
        except KummerError as exc:
            raise DegenerateInside("configuration degenerates inside bracket",
                                   subinterval=[str(a), str(b)],
                                   parameter=str(m), reason=exc.name) from exc
        if rm == 0:
            return RootCertificate("exact", selection, line_index, root=m)
        if sign(rm) == sa:
            a = m
        else:
            b = m
    return RootCertificate("bracket", selection, line_index,
                           a=a, b=b, sign_a=sa, sign_b=sb)


# shipped presets -----------------------------------------------------

PRESET_PARAMS = (0, 1, -1, 2, -2, 3)


def preset_config():
    return build_config(PRESET_PARAMS)


def sign_change_family():
    """A family with a certified residual sign change (slot 6 over
    [5/4, 7/4] on the standard base): the Humbert event lies inside."""
    return ConfigFamily((0, 1, -1, 2, -2, None), Fraction(5, 4), Fraction(7, 4))


def steady_sign_family():
    """Slot 6 over [5/2, 7/2]; all residual signs positive on a 16-grid."""
    return ConfigFamily((0, 1, -1, 2, -2, None), Fraction(5, 2), Fraction(7, 2))
