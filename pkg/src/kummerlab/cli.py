"""Command-line front end.

One orchestration thread, deterministic artifacts: JSON with sorted keys
and tight separators, CSV with fixed columns, SVG with a fixed hash salt.
Exit codes: 0 success, 1 domain error (machine-readable JSON on stderr),
2 usage error (argparse).

Scalar conventions on the wire: rationals as "p/q" strings, quadratic
irrationals as {"a": "p/q", "b": "r/s", "m": m}.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .config import (CYCLIC_SELECTION, INF, build_config, canonical_json,
                     config_from_text, config_to_json, label)
from .counting import (CharacteristicQuery, conic_characteristic,
                       deformation_witness, kontsevich_counts)
from .cover import analyze_cover, pullback_sextic
from .cycles import HyperellipticModel, build_new_cycle, collino_cycle, \
    pushforward_check
from .errors import KummerError
from .locus import (ConfigFamily, humbert5_residual, isolate_root,
                    scan_family)
from .plane import Line, Point, parametrize_conic
from .render import render_config, render_scan
from .scalars import scalar_to_json


# ----------------------------------------------------- argument converters

def _fraction(text):
    return Fraction(text.strip())


def _one_param(tok):
    tok = tok.strip()
    if tok.lower() in ("inf", "oo"):
        return INF
    return Fraction(tok)


def _params(text):
    out = [_one_param(tok) for tok in text.split(",")]
    if len(out) != 6:
        raise ValueError("exactly six parameters required")
    return out


def _template(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(None if tok == "?" else _one_param(tok))
    if out.count(None) != 1:
        raise ValueError("template needs exactly one '?' slot")
    return out


def _node_label(tok):
    tok = tok.strip()
    digits = [int(ch) for ch in tok if ch.isdigit()]
    if len(digits) != 2:
        raise ValueError(f"node label needs two line indices: {tok!r}")
    return tuple(digits)


def _selection(text):
    if text.strip() == "cyclic":
        return CYCLIC_SELECTION
    return tuple(_node_label(tok) for tok in text.split(","))


def _pair(text):
    return _node_label(text)


def _bracket(text):
    a, b = text.split(",")
    return (Fraction(a.strip()), Fraction(b.strip()))


def _triples(text):
    out = []
    for chunk in text.split(";"):
        coords = [Fraction(tok.strip()) for tok in chunk.split(",")]
        if len(coords) != 3:
            raise ValueError("each entry needs three coordinates")
        out.append(tuple(coords))
    return out


def _root_list(text):
    return [Fraction(tok.strip()) for tok in text.split(",")]


# ------------------------------------------------------------ IO plumbing

def _read_config(args):
    if args.config == "-":
        text = sys.stdin.read()
    else:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    return config_from_text(text)


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, canonical_json(obj))


def _family(args):
    return ConfigFamily(args.template, args.lo, args.hi)


def _fitted_phi(cfg, selection, base_node):
    """Canonical off-locus pipeline: fit the conic through the selected
    nodes and parametrize it from one of them."""
    res = humbert5_residual(cfg, selection)
    return res, parametrize_conic(res.conic, cfg.node_map[label(base_node)])


# ------------------------------------------------------------ subcommands

def _cmd_gen_config(args):
    cfg = build_config(args.params)
    _emit_json(args, config_to_json(cfg))
    return 0


def _cmd_nodes(args):
    cfg = _read_config(args)
    report = cfg.report
    _emit_json(args, {
        "nodes": config_to_json(cfg)["nodes"],
        "all_pass": report.all_pass,
    })
    return 0


def _residual_json(result):
    return {
        "residual": scalar_to_json(result.residual),
        "conic": [scalar_to_json(c) for c in result.conic.coeffs],
        "meets": [{"point": [scalar_to_json(c) for c in p.coords],
                   "multiplicity": m} for p, m in result.meets],
    }


def _cmd_residual(args):
    cfg = _read_config(args)
    result = humbert5_residual(cfg, args.selection, line_index=args.line)
    _emit_json(args, _residual_json(result))
    return 0


def _cmd_scan(args):
    family = _family(args)
    samples = scan_family(family, args.selection, grid=args.grid,
                          line_index=args.line)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["parameter", "status", "residual", "sign", "gap_reason"])
    for s in samples:
        writer.writerow([str(s.parameter), s.status,
                         "" if s.residual is None else str(s.residual),
                         "" if s.sign is None else s.sign,
                         s.gap_reason or ""])
    _emit(args, buf.getvalue())
    if args.figure:
        render_scan(samples, args.figure)
    return 0


def _cmd_isolate(args):
    family = _family(args)
    cert = isolate_root(family, args.selection, args.bracket,
                        tol=args.tol, line_index=args.line)
    obj = cert.to_json()
    obj["verified"] = cert.verify(family)
    _emit_json(args, obj)
    return 0


def _cmd_cover(args):
    cfg = _read_config(args)
    _, phi = _fitted_phi(cfg, args.selection, args.base_node)
    pullback = pullback_sextic(cfg, phi)
    analysis = analyze_cover(pullback)
    obj = analysis.to_json()
    obj["pullback_degree"] = pullback.degree
    obj["pullback"] = [scalar_to_json(c) for c in pullback.coeffs]
    _emit_json(args, obj)
    return 0


def _cmd_cycle(args):
    cfg = _read_config(args)
    _, phi = _fitted_phi(cfg, args.selection, args.base_node)
    cycle = build_new_cycle(cfg, phi, args.node, args.aux,
                            selection=args.selection)
    _emit_json(args, cycle.to_json())
    return 0


def _cmd_collino(args):
    model = HyperellipticModel.from_roots(args.roots)
    cycle = collino_cycle(model, args.p1, args.p2, args.r)
    _emit_json(args, cycle.to_json())
    return 0


def _cmd_push_check(args):
    cfg = _read_config(args)
    _, phi = _fitted_phi(cfg, args.selection, args.base_node)
    report = pushforward_check(cfg, phi, args.node, args.aux,
                               selection=args.selection)
    _emit_json(args, report.to_json())
    return 0


def _cmd_count_nd(args):
    table = kontsevich_counts(args.max)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "n_d"])
    for d, n in table.rows():
        writer.writerow([d, n])
    _emit(args, buf.getvalue())
    return 0


def _cmd_count_conics(args):
    points = [Point(*t) for t in (args.points or [])]
    lines = [Line(*t) for t in (args.lines or [])]
    query = CharacteristicQuery(points, lines)
    count = conic_characteristic(query)
    _emit_json(args, {"points": query.k, "lines": 5 - query.k,
                      "count": count})
    return 0


def _cmd_witness(args):
    cfg = _read_config(args)
    records = deformation_witness(cfg, args.nodes, args.line)
    count = sum(r.multiplicity for r in records if r.counted)
    _emit_json(args, {"count": count,
                      "records": [r.to_json() for r in records]})
    return 0


def _cmd_render(args):
    cfg = _read_config(args)
    fitted = None
    if args.selection is not None:
        fitted = humbert5_residual(cfg, args.selection).conic
    render_config(cfg, args.out, fitted=fitted)
    return 0


# ------------------------------------------------------------- the parser

def _add_config_arg(p):
    p.add_argument("--config", required=True,
                   help="configuration JSON path, or - for stdin")


def _add_family_args(p):
    p.add_argument("--template", type=_template, required=True,
                   help="six comma-separated parameters with one '?' slot")
    p.add_argument("--lo", type=_fraction, required=True)
    p.add_argument("--hi", type=_fraction, required=True)
    p.add_argument("--selection", type=_selection, default=CYCLIC_SELECTION)
    p.add_argument("--line", type=int, default=None)


def _add_pipeline_args(p):
    p.add_argument("--selection", type=_selection, default=CYCLIC_SELECTION)
    p.add_argument("--base-node", type=_pair, default=(5, 1),
                   help="selected node the fitted conic is parametrized from")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kummerlab",
        description="exact computations on six-line conic configurations")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen-config", help="build a configuration from six "
                       "tangency parameters")
    p.add_argument("--params", type=_params, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen_config)

    p = sub.add_parser("nodes", help="list the fifteen nodes")
    _add_config_arg(p)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_nodes)

    p = sub.add_parser("residual", help="tangency residual of the fitted "
                       "conic against the remaining line")
    _add_config_arg(p)
    p.add_argument("--selection", type=_selection, default=CYCLIC_SELECTION)
    p.add_argument("--line", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_residual)

    p = sub.add_parser("scan", help="residual signs along a one-parameter "
                       "family (CSV, optional SVG figure)")
    _add_family_args(p)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--figure", help="write a scan figure to this SVG path")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("isolate", help="bisect a residual sign change to a "
                       "certified bracket")
    _add_family_args(p)
    p.add_argument("--bracket", type=_bracket, required=True,
                   help="a,b endpoints with opposite residual signs")
    p.add_argument("--tol", type=_fraction, default=Fraction(1, 10 ** 6))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_isolate)

    p = sub.add_parser("cover", help="pull the six lines back along the "
                       "fitted conic and analyze the double cover")
    _add_config_arg(p)
    _add_pipeline_args(p)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("cycle", help="assemble the two-component cycle at a "
                       "chosen node")
    _add_config_arg(p)
    _add_pipeline_args(p)
    p.add_argument("--node", type=_pair, required=True)
    p.add_argument("--aux", type=_pair, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("collino", help="the classical two-torsion cycle on "
                       "a hyperelliptic curve")
    p.add_argument("--roots", type=_root_list, required=True,
                   help="comma-separated rational Weierstrass x-values")
    p.add_argument("--p1", type=_fraction, required=True)
    p.add_argument("--p2", type=_fraction, required=True)
    p.add_argument("--r", type=_fraction, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_collino)

    p = sub.add_parser("push-check", help="verify the degree-2 pushforward "
                       "facts for a chosen node")
    _add_config_arg(p)
    _add_pipeline_args(p)
    p.add_argument("--node", type=_pair, required=True)
    p.add_argument("--aux", type=_pair, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_push_check)

    p = sub.add_parser("count-nd", help="rational plane curve counts up to "
                       "a degree (CSV)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_count_nd)

    p = sub.add_parser("count-conics", help="characteristic number for "
                       "point/tangency conditions")
    p.add_argument("--points", type=_triples, default=[],
                   help="semicolon-separated x,y,z triples")
    p.add_argument("--lines", type=_triples, default=[],
                   help="semicolon-separated a,b,c triples")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_count_conics)

    p = sub.add_parser("witness", help="conics through four nodes tangent "
                       "to one configuration line, with multiplicities")
    _add_config_arg(p)
    p.add_argument("--nodes", type=_selection, required=True,
                   help="four node labels, e.g. 23,34,45,51")
    p.add_argument("--line", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("render", help="SVG picture of the configuration "
                       "(chart z=1)")
    _add_config_arg(p)
    p.add_argument("--selection", type=_selection, default=None,
                   help="also draw the conic fitted through this selection")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KummerError as exc:
        obj = {"error": exc.name, "message": str(exc)}
        if exc.payload:
            obj["payload"] = exc.payload
        sys.stderr.write(json.dumps(obj, sort_keys=True, default=str) + "\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(json.dumps(
            {"error": "ValueError", "message": str(exc)},
            sort_keys=True, default=str) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(json.dumps(
            {"error": "OSError", "message": str(exc)},
            sort_keys=True, default=str) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
