"""SVG rendering: chart math, determinism, annotations."""

from fractions import Fraction

from kummerlab.render import chart_point, render_config, render_scan
from kummerlab.config import INF, CYCLIC_SELECTION, build_config
from kummerlab.locus import ConfigFamily, scan_family
from kummerlab.plane import Point


def test_chart_point():
    assert chart_point(Point(3, -4, 2)) == (1.5, -2.0)
    assert chart_point(Point(1, 2, 0)) is None
    assert chart_point(Point(0, 0, 1)) == (0.0, 0.0)


def test_config_render_is_deterministic(preset, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_config(preset, a)
    render_config(preset, b)
    data = a.read_bytes()
    assert data == b.read_bytes()
    head = data[:300].decode()
    assert head.startswith("<?xml")
    assert 'version="1.1"' in data.decode()


def test_config_render_annotates_nodes(preset, tmp_path):
    out = tmp_path / "cfg.svg"
    render_config(preset, out)
    text = out.read_text()
    for i, j in CYCLIC_SELECTION:
        assert f"q{min(i, j)}{max(i, j)}" in text
    assert "line configuration, chart z=1" in text
    # parameter 0 makes line 1 the chart's infinity line z = 0, so the
    # five nodes on it have no chart image and are listed textually
    assert "at infinity: q12 (2:1:0)" in text
    assert "q16 (2:3:0)" in text


def test_fitted_conic_changes_output(preset, preset_residual, tmp_path):
    plain, fitted = tmp_path / "plain.svg", tmp_path / "fit.svg"
    render_config(preset, plain)
    render_config(preset, fitted, fitted=preset_residual.conic)
    assert plain.read_bytes() != fitted.read_bytes()


def test_config_with_all_finite_nodes_has_no_infinity_note(tmp_path):
    # tangent lines of y^2 = xz meet on z = 0 only when some tangency
    # parameter is 0; INF itself gives the line x = 0, whose nodes are finite
    cfg = build_config([INF, 1, -1, 3, -2, 4])
    out = tmp_path / "fin.svg"
    render_config(cfg, out)
    text = out.read_text()
    assert "at infinity" not in text


def test_scan_render_handles_roots_and_gaps(tmp_path):
    fam = ConfigFamily((-3, -1, 0, 4, Fraction(-1, 2), None), -5, -3)
    samples = scan_family(fam, CYCLIC_SELECTION, grid=9)
    out = tmp_path / "scan.svg"
    render_scan(samples, out)
    again = tmp_path / "scan2.svg"
    render_scan(samples, again)
    assert out.read_bytes() == again.read_bytes()
    text = out.read_text()
    assert "tangency residual" in text
    assert "family parameter" in text
