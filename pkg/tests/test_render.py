import xml.etree.ElementTree as ET

import pytest

from triacontagonal.project import ProjectionPoint, project_first_coordinate
from triacontagonal.render import RenderStyle, render_svg

NS = "{http://www.w3.org/2000/svg}"


def circles(svg, cls):
    root = ET.fromstring(svg.encode())
    return [c for c in root.iter(NS + "circle") if c.get("class") == cls]


@pytest.fixture(scope="module")
def e8_points(e8_numeric):
    return project_first_coordinate(e8_numeric)


def test_e8_svg(e8_points):
    svg = render_svg(e8_points)
    assert len(circles(svg, "root")) == 240
    assert circles(svg, "guide") == []
    guided = render_svg(e8_points, RenderStyle(draw_guide_circles=True))
    assert len(circles(guided, "root")) == 240
    assert len(circles(guided, "guide")) == 8


def test_h4_svg(h4):
    svg = render_svg(project_first_coordinate(h4), RenderStyle(draw_guide_circles=True, color_scheme="by-radius"))
    assert len(circles(svg, "root")) == 120
    assert len(circles(svg, "guide")) == 4


def test_single_point_scaling():
    style = RenderStyle(canvas_size=200, margin=0.1)
    svg = render_svg([ProjectionPoint(0.5 + 0j, 0.5, 0, "A", 0)], style)
    (c,) = circles(svg, "root")
    # Largest radius maps to (1 - 2*margin) * size / 2 = 80.
    assert float(c.get("cx")) == pytest.approx(180.0)
    assert float(c.get("cy")) == pytest.approx(100.0)


def test_deterministic(e8_points):
    assert render_svg(e8_points) == render_svg(list(e8_points))


def test_round_trip_positions(e8_points):
    style = RenderStyle()
    svg = render_svg(e8_points, style)
    scale = (1 - 2 * style.margin) * style.canvas_size / 2 / max(p.radius for p in e8_points)
    center = style.canvas_size / 2
    for p, c in zip(e8_points, circles(svg, "root")):
        x = (float(c.get("cx")) - center) / scale
        y = (center - float(c.get("cy"))) / scale
        assert abs(x - p.position.real) * scale <= 5e-7
        assert abs(y - p.position.imag) * scale <= 5e-7


def test_color_schemes(e8_points):
    mono = render_svg(e8_points, RenderStyle(color_scheme="monochrome"))
    assert {c.get("fill") for c in circles(mono, "root")} == {"#000000"}
    fam = render_svg(e8_points)
    assert len({c.get("fill") for c in circles(fam, "root")}) == 8


@pytest.mark.parametrize("style", [
    RenderStyle(canvas_size=0),
    RenderStyle(margin=0.5),
    RenderStyle(margin=-0.1),
    RenderStyle(color_scheme="rainbow"),
])
def test_invalid_style(e8_points, style):
    with pytest.raises(ValueError):
        render_svg(e8_points, style)


def test_empty_input():
    with pytest.raises(ValueError):
        render_svg([])
