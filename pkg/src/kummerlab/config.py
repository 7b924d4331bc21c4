"""Six-line configurations tangent to a conic, their nodes, and the
Humbert invariant of divisor classes.

A configuration is generated from a smooth base conic with a known
rational point: six distinct parameter values on the conic give six
tangent points, whose tangent lines form the sextic.  Tangent lines of a
smooth conic at distinct points can never be concurrent (three concurrent
tangents would dualize to three collinear points of the dual conic), so
generated configurations are always valid; the checks still run and feed
the validity report.  An expert path ingests six raw lines and verifies
common tangency through the dual conic.

Parameters at infinity use the INF marker; internally every parameter is
a homogeneous pair (t, u).
"""

import json
from fractions import Fraction

from .errors import (ConcurrentLines, DuplicateParameter, NegativeInvariant,
                     ParseError, TangencyFailure)
from .plane import (Conic, Line, Point, conic_through_five, incident,
                    meet_lines, parametrize_conic, tangency_residual,
                    tangent_line_at)
from .scalars import rat, scalar_from_json, scalar_to_json


class _Infinity:
    def __repr__(self):
        return "INF"


INF = _Infinity()

DEFAULT_BASE = Conic(0, 1, 0, 0, -1, 0)        # y^2 = xz
DEFAULT_BASE_POINT = Point(1, 0, 0)

CYCLIC_SELECTION = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))


def label(pair):
    """Normalize a node label to frozenset({i, j}) with 1 <= i < j <= 6."""
    i, j = pair
    i, j = int(i), int(j)
    if i == j or not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError(f"bad node label {pair!r}")
    return frozenset((i, j))


def _as_param(p):
    if p is INF:
        return (Fraction(1), Fraction(0))
    if isinstance(p, tuple):
        t, u = rat(p[0]), rat(p[1])
        if t == u == 0:
            raise ValueError("parameter (0:0) is not a point")
        return (t, u)
    return (rat(p), Fraction(1))


def _param_key(tu):
    t, u = tu
    if u == 0:
        return ("inf",)
    return ("fin", t / u)


class ValidityReport:
    """Outcome of every configuration invariant, with failure witnesses."""

    def __init__(self, checks):
        self.checks = list(checks)  # (name, passed, witness-or-None)

    @property
    def all_pass(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(n, w) for n, ok, w in self.checks if not ok]

    def __repr__(self):
        body = ", ".join(f"{n}={'ok' if ok else 'FAIL'}" for n, ok, _ in self.checks)
        return f"ValidityReport({body})"


class SexticConfiguration:
    """Base conic, six tangent lines, and the fifteen nodes q_ij."""

    def __init__(self, base, lines, params=None, base_point=None):
        self.base = base
        self.lines = tuple(lines)
        self.params = params
        self.base_point = base_point
        self.node_map = {}
        for i in range(1, 7):
            for j in range(i + 1, 7):
                self.node_map[frozenset((i, j))] = meet_lines(
                    self.lines[i - 1], self.lines[j - 1])
        self.report = validate(self)

    def line(self, i):
        return self.lines[i - 1]

    def node(self, i, j=None):
        key = label(i) if j is None else label((i, j))
        return self.node_map[key]

    def selection_nodes(self, selection):
        return [self.node_map[label(s)] for s in selection]

    def __repr__(self):
        return f"SexticConfiguration(params={self.params})"


def build_config(params, base=None, base_point=None):
    """Build the configuration whose lines are tangent to the base conic
    at the six given parameter values (INF allowed)."""
    if base is None:
        base, base_point = DEFAULT_BASE, DEFAULT_BASE_POINT
    if base_point is None:
        raise ValueError("a rational point of the base conic is required")
    ps = [_as_param(p) for p in params]
    if len(ps) != 6:
        raise ValueError("exactly six parameters required")
    keys = [_param_key(p) for p in ps]
    if len(set(keys)) != 6:
        dup = next(k for k in keys if keys.count(k) > 1)
        raise DuplicateParameter("repeated tangency parameter", parameter=str(dup))
    phi = parametrize_conic(base, base_point)
    lines = []
    for t, u in ps:
        pt = Point(*phi.evaluate(t, u))
        lines.append(tangent_line_at(base, pt))
    cfg = SexticConfiguration(base, lines, params=tuple(ps), base_point=base_point)
    if not cfg.report.all_pass:
        name, witness = cfg.report.failures()[0]
        raise ConcurrentLines(f"invalid configuration: {name}", witness=witness)
    return cfg


def config_from_lines(lines):
    """Expert path: six explicit lines, verified to share a tangent conic.

    The six dual points must lie on one conic (the dual of the base);
    the base conic is recovered from the adjugate matrix.
    """
    lines = [l if isinstance(l, Line) else Line(*l) for l in lines]
    if len(lines) != 6:
        raise ValueError("exactly six lines required")
    duals = [Point(*l.coords) for l in lines]
    dual_conic = conic_through_five(duals[:5])
    if not dual_conic.contains(duals[5]):
        raise TangencyFailure("six lines share no tangent conic",
                              residual=scalar_to_json(dual_conic.evaluate(duals[5])))
    m = dual_conic.matrix2m()
    adj = _adjugate(m)
    base = Conic(adj[0][0], adj[1][1], adj[2][2],
                 2 * adj[0][1], 2 * adj[0][2], 2 * adj[1][2])
    for l in lines:
        if tangency_residual(base, l) != 0:
            raise TangencyFailure("line not tangent to recovered base",
                                  line=[str(c) for c in l.coords])
    cfg = SexticConfiguration(base, lines)
    if not cfg.report.all_pass:
        name, witness = cfg.report.failures()[0]
        raise ConcurrentLines(f"invalid configuration: {name}", witness=witness)
    return cfg


def _adjugate(m):
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor
    return [[cof(j, i) for j in range(3)] for i in range(3)]


def nodes(config):
    """The association {i,j} -> q_ij = l_i meet l_j (fifteen entries)."""
    return dict(config.node_map)


def validate(config):
    """Report every configuration invariant with pass/fail and witnesses."""
    checks = []
    residuals = [tangency_residual(config.base, l) for l in config.lines]
    bad = next((i for i, r in enumerate(residuals) if r != 0), None)
    checks.append(("tangency", bad is None,
                   None if bad is None else {"line": bad + 1,
                                             "residual": str(residuals[bad])}))
    distinct_lines = len(set(config.lines)) == 6
    checks.append(("lines-distinct", distinct_lines, None))
    seen = {}
    clash = None
    for key, pt in config.node_map.items():
        if pt in seen and clash is None:
            clash = {"nodes": [sorted(seen[pt]), sorted(key)],
                     "point": [str(c) for c in pt.coords]}
        seen[pt] = key
    checks.append(("nodes-distinct", clash is None, clash))
    checks.append(("node-count", len(config.node_map) == 15, None))
    wrong = None
    for key, pt in config.node_map.items():
        on = [i for i in range(1, 7) if incident(pt, config.line(i))]
        if sorted(on) != sorted(key):
            wrong = {"node": sorted(key), "on_lines": on}
            break
    checks.append(("node-incidence", wrong is None, wrong))
    return ValidityReport(checks)


class DivisorClass:
    """A Neron-Severi class recorded by its two intersection numbers."""

    def __init__(self, theta_pairing, self_intersection):
        if self_intersection % 2 != 0:
            raise ValueError("self-intersection must be even")
        self.theta_pairing = int(theta_pairing)
        self.self_intersection = int(self_intersection)

    def __repr__(self):
        return f"DivisorClass(D.theta={self.theta_pairing}, D^2={self.self_intersection})"


THETA = DivisorClass(2, 2)


def humbert_invariant(D):
    """(D.theta)^2 - 2 D^2; zero exactly on multiples of the polarization."""
    delta = D.theta_pairing ** 2 - 2 * D.self_intersection
    if delta < 0:
        raise NegativeInvariant("invariant is negative; class not realizable",
                                value=delta)
    return delta


# ---------------------------------------------------------------- JSON

def canonical_json(obj):
    """Deterministic JSON text (sorted keys, tight separators, newline)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _param_to_json(tu):
    t, u = tu
    return [scalar_to_json(t), scalar_to_json(u)]


def config_to_json(config):
    obj = {
        "base": [scalar_to_json(c) for c in config.base.coeffs],
        "lines": [[scalar_to_json(c) for c in l.coords] for l in config.lines],
        "nodes": {"%d,%d" % tuple(sorted(k)): [scalar_to_json(c) for c in p.coords]
                  for k, p in config.node_map.items()},
    }
    if config.params is not None:
        obj["params"] = [_param_to_json(p) for p in config.params]
    if config.base_point is not None:
        obj["base_point"] = [scalar_to_json(c) for c in config.base_point.coords]
    return obj


def config_to_text(config):
    return canonical_json(config_to_json(config))


def config_from_json(obj):
    try:
        base = Conic(*[scalar_from_json(c) for c in obj["base"]])
        lines = [Line(*[scalar_from_json(c) for c in row]) for row in obj["lines"]]
        stored = {tuple(int(n) for n in k.split(",")):
                  Point(*[scalar_from_json(c) for c in row])
                  for k, row in obj["nodes"].items()}
        params = None
        if "params" in obj:
            params = tuple((scalar_from_json(a), scalar_from_json(b))
                           for a, b in obj["params"])
        base_point = None
        if "base_point" in obj:
            base_point = Point(*[scalar_from_json(c) for c in obj["base_point"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed configuration: {exc}") from exc
    cfg = SexticConfiguration(base, lines, params=params, base_point=base_point)
    for pair, pt in stored.items():
        key = label(pair)
        if cfg.node_map.get(key) != pt:
            raise ParseError("stored node disagrees with recomputation",
                             node=sorted(pair))
    if len(stored) != 15:
        raise ParseError("expected fifteen stored nodes", count=len(stored))
    return cfg


def config_from_text(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return config_from_json(obj)
