"""Static SVG rendering: configuration pictures and residual scans.

All drawing goes through the affine chart z = 1.  The viewport comes from
the bounding box of the finite nodes; nodes at infinity cannot be drawn
in the chart and are listed textually on the figure instead.  Output is
deterministic for fixed input: fixed hash salt for element ids, text kept
as text, and no timestamp metadata.
"""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_RC = {"svg.hashsalt": "kummerlab", "svg.fonttype": "none"}


def chart_point(p):
    """Affine (x, y) floats for a projective point, or None at infinity."""
    x, y, z = p.coords
    if z == 0:
        return None
    return (float(x / z), float(y / z))


def _safe_float(q):
    # scan residuals can exceed float range; pin them to the chart edge
    try:
        return float(q)
    except OverflowError:
        return math.inf if q > 0 else -math.inf


def _viewport(points, pad=0.3):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    if not xs:
        return (-1.0, 1.0, -1.0, 1.0)
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    dx = max(x1 - x0, 1.0) * pad
    dy = max(y1 - y0, 1.0) * pad
    return (x0 - dx, x1 + dx, y0 - dy, y1 + dy)


def _draw_line(ax, line, **style):
    a, b, c = (float(v) for v in line.coords)
    if a == 0 and b == 0:
        return False                 # the line at infinity has no chart image
    if b != 0:
        ax.axline((0.0, -c / b), (1.0, -(a + c) / b), **style)
    else:
        ax.axline((-c / a, 0.0), (-c / a, 1.0), **style)
    return True


def _draw_conic(ax, conic, viewport, grid, **style):
    x0, x1, y0, y1 = viewport
    xs = np.linspace(x0, x1, grid)
    ys = np.linspace(y0, y1, grid)
    xx, yy = np.meshgrid(xs, ys)
    a, b, c, d, e, f = (float(v) for v in conic.coeffs)
    zz = a * xx * xx + b * yy * yy + c + d * xx * yy + e * xx + f * yy
    ax.contour(xx, yy, zz, levels=[0.0], **style)


def render_config(config, out, fitted=None, grid=400):
    """Draw the six lines, the base conic, the fifteen nodes, and
    optionally a fitted conic; write SVG to `out` (path or file)."""
    items = sorted(config.node_map.items(),
                   key=lambda kv: tuple(sorted(kv[0])))
    finite, infinite = [], []
    for lab, node in items:
        name = "q" + "".join(str(i) for i in sorted(lab))
        xy = chart_point(node)
        if xy is None:
            infinite.append((name, node))
        else:
            finite.append((name, xy))
    viewport = _viewport([xy for _, xy in finite])

    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.4, 6.4))
        ax.set_xlim(viewport[0], viewport[1])
        ax.set_ylim(viewport[2], viewport[3])
        ax.set_aspect("equal", adjustable="box")
        for i in range(1, 7):
            _draw_line(ax, config.line(i), color="#4878a8", lw=1.0)
        _draw_conic(ax, config.base, viewport, grid,
                    colors="#999999", linestyles="dashed", linewidths=1.0)
        if fitted is not None:
            _draw_conic(ax, fitted, viewport, grid,
                        colors="#c44e52", linewidths=1.4)
        for name, (x, y) in finite:
            ax.plot([x], [y], "o", color="#222222", ms=3.5)
            ax.annotate(name, (x, y), xytext=(3, 3),
                        textcoords="offset points", fontsize=7)
        if infinite:
            note = "at infinity: " + ", ".join(
                "%s (%s:%s:0)" % (name, node.coords[0], node.coords[1])
                for name, node in infinite)
            fig.text(0.02, 0.01, note, fontsize=7)
        ax.set_title("line configuration, chart z=1", fontsize=9)
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)
    return out


def render_scan(samples, out):
    """Residual values along a family scan: symmetric log scale, exact
    roots marked, degenerate gaps shown as vertical lines."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(7.2, 4.2))
        ts = [float(s.parameter) for s in samples if s.residual is not None]
        rs = [_safe_float(s.residual) for s in samples if s.residual is not None]
        if ts:
            ax.plot(ts, rs, "-", color="#4878a8", lw=1.0)
            ax.plot(ts, rs, ".", color="#4878a8", ms=3)
        for s in samples:
            if s.status == "root":
                ax.plot([float(s.parameter)], [0.0], "o", color="#c44e52",
                        ms=5)
            elif s.status == "gap":
                ax.axvline(float(s.parameter), color="#bbbbbb",
                           linestyle="dotted", lw=0.8)
        ax.axhline(0.0, color="#222222", lw=0.6)
        ax.set_yscale("symlog")
        ax.set_xlabel("family parameter", fontsize=8)
        ax.set_ylabel("tangency residual", fontsize=8)
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)
    return out
