"""Double covers of rational curves branched along the sextic.

pullback_sextic restricts the six-line sextic to a parametrized rational
curve, giving a binary form F of degree 6d whose roots mark the
intersections with the lines.  The double cover y^2 = F splits into two
rational components exactly when every root multiplicity is even;
otherwise the odd-multiplicity roots are the branch points of the
normalized cover and Riemann-Hurwitz gives the genus.

The reduced form F_red is the product of the odd-multiplicity irreducible
factors times the squarefree core of the unit, the unique choice (up to
squares already removed) making F / F_red a perfect square in Q[t,u]; so
y^2 = F_red is an exact model of the normalization and sheet values over
a node parameter are square roots of nonzero rationals.
"""

from fractions import Fraction

from .errors import CurveInsideSextic, OddDegree, SplitCover, ZeroForm
from .forms import BinaryForm, one_form, squarefree_decomposition
from .plane import pullback_form
from .scalars import extension_of, is_rational, sqrt_scalar
from .scalars import _split_square


def pullback_sextic(config, phi):
    """Product of the six line pullbacks along phi (degree 6d)."""
    total = one_form()
    for i in range(1, 7):
        piece = pullback_form(phi, config.line(i))
        if piece.is_zero:
            raise CurveInsideSextic("curve lies inside a configuration line",
                                    line=i)
        total = total * piece
    return total


class RootDescriptor:
    """A root locus of the pullback: either a rational parameter (t : u)
    or an irreducible factor tracking a conjugate set."""

    def __init__(self, factor, multiplicity):
        self.factor = factor
        self.multiplicity = multiplicity
        self.degree = factor.degree
        if factor.degree == 1:
            c0, c1 = factor.coeffs          # c0*u + c1*t
            if c1 == 0:
                self.parameter = (Fraction(1), Fraction(0))
            else:
                self.parameter = (-c0 / c1, Fraction(1))
        else:
            self.parameter = None

    @property
    def is_rational(self):
        return self.parameter is not None

    @property
    def at_infinity(self):
        return self.parameter is not None and self.parameter[1] == 0

    def __repr__(self):
        where = (f"({self.parameter[0]}:{self.parameter[1]})"
                 if self.is_rational else repr(self.factor))
        return f"RootDescriptor({where}, mult={self.multiplicity})"


class BranchProfile:
    def __init__(self, degree, descriptors):
        self.degree = degree
        self.descriptors = list(descriptors)

    def multiplicity_sum(self):
        return sum(d.degree * d.multiplicity for d in self.descriptors)

    def __repr__(self):
        return f"BranchProfile(degree={self.degree}, {self.descriptors})"


class CoverAnalysis:
    def __init__(self, profile, split, branch, nodes, genus, reduced, flags):
        self.profile = profile
        self.split = split
        self.branch_points = branch        # odd-multiplicity descriptors
        self.node_params = nodes           # even-multiplicity descriptors
        self.genus_normalization = genus
        self.reduced = reduced             # F_red
        self.flags = flags

    @property
    def branch_count(self):
        return sum(d.degree for d in self.branch_points)

    @property
    def node_count(self):
        return sum(d.degree for d in self.node_params)

    def to_json(self):
        def desc(d):
            out = {"multiplicity": d.multiplicity, "degree": d.degree}
            if d.is_rational:
                t, u = d.parameter
                out["parameter"] = [f"{t.numerator}/{t.denominator}",
                                    f"{u.numerator}/{u.denominator}"]
            else:
                out["factor"] = [str(c) for c in d.factor.coeffs]
            return out
        return {
            "degree": self.profile.degree,
            "split": self.split,
            "branch_points": [desc(d) for d in self.branch_points],
            "branch_count": self.branch_count,
            "node_params": [desc(d) for d in self.node_params],
            "node_count": self.node_count,
            "genus": self.genus_normalization,
            "reduced": [str(c) for c in self.reduced.coeffs],
            "flags": list(self.flags),
        }

    def __repr__(self):
        return (f"CoverAnalysis(split={self.split}, branch={self.branch_count}, "
                f"nodes={self.node_count}, genus={self.genus_normalization})")


def analyze_cover(F):
    """Branch profile, splitting verdict, genus, and reduced form of the
    double cover y^2 = F over the parameter line."""
    if F.is_zero:
        raise ZeroForm("cover of the zero form")
    if F.degree % 2:
        raise OddDegree("cover needs an even-degree form", degree=F.degree)
    fact = squarefree_decomposition(F)
    descriptors = [RootDescriptor(p, e) for p, e in fact]
    profile = BranchProfile(F.degree, descriptors)
    branch = [d for d in descriptors if d.multiplicity % 2 == 1]
    nodes = [d for d in descriptors if d.multiplicity % 2 == 0]
    split = not branch
    # reduced form: squarefree unit core times odd-multiplicity factors
    s, _ = _split_square(fact.unit.numerator * fact.unit.denominator)
    reduced = one_form() * Fraction(s)
    for d in branch:
        reduced = reduced * d.factor
    flags = []
    if split:
        genus = 0                       # two rational components
    else:
        genus = (sum(d.degree for d in branch) - 2) // 2
        if genus >= 1:
            flags.append("NotRationalCurve")
    return CoverAnalysis(profile, split, branch, nodes, genus, reduced, flags)


class NodeSheets:
    """The two labeled preimages of a node of the cover curve.

    plus/minus are the sheet values (square roots of F_red at the node
    parameter) when the parameter is rational; conjugate node sets are
    reported with nested=True and carry no coordinates.
    """

    def __init__(self, descriptor, plus=None, minus=None, m=None, nested=False):
        self.descriptor = descriptor
        self.plus = plus
        self.minus = minus
        self.m = m                      # extension discriminant or None
        self.nested = nested

    @property
    def parameter(self):
        return self.descriptor.parameter

    def __repr__(self):
        if self.nested:
            return f"NodeSheets(nested over {self.descriptor.factor!r})"
        return f"NodeSheets({self.parameter}, +{self.plus})"


class NormalizationModel:
    def __init__(self, reduced, node_sheets, branch, genus):
        self.reduced = reduced
        self.node_sheets = node_sheets
        self.branch = branch
        self.genus = genus

    def sheet_value(self, t, u):
        return sqrt_scalar(self.reduced.evaluate(t, u))

    def __repr__(self):
        return (f"NormalizationModel(y^2 = {self.reduced!r}, "
                f"{len(self.node_sheets)} nodes)")


def normalization_model(F):
    """Sheet-labeled model y^2 = F_red of the normalized cover."""
    analysis = analyze_cover(F)
    if analysis.split:
        raise SplitCover("split cover has no single normalization model")
    reduced = analysis.reduced
    sheets = []
    for d in analysis.node_params:
        if d.is_rational:
            t, u = d.parameter
            value = sqrt_scalar(reduced.evaluate(t, u))
            if value == 0:
                # cannot happen: even part fully removed from F_red
                raise SplitCover("reduced form vanishes at a node parameter")
            sheets.append(NodeSheets(d, plus=value, minus=-value,
                                     m=extension_of(value)))
        else:
            sheets.append(NodeSheets(d, nested=True))
    return NormalizationModel(reduced, sheets, analysis.branch_points,
                              analysis.genus_normalization)
