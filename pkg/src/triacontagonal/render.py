"""SVG rendering of projected root systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .project import ProjectionPoint, radius_classes

# One fixed colour per family, A..H.
FAMILY_COLORS = {
    "A": "#1f77b4",
    "B": "#d62728",
    "C": "#2ca02c",
    "D": "#9467bd",
    "E": "#ff7f0e",
    "F": "#17becf",
    "G": "#8c564b",
    "H": "#e377c2",
}
RADIUS_COLORS = tuple(FAMILY_COLORS.values())

ColorScheme = Literal["by-family", "by-radius", "monochrome"]


@dataclass(frozen=True)
class RenderStyle:
    canvas_size: int = 800
    point_radius: float = 4.0
    margin: float = 0.05
    color_scheme: ColorScheme = "by-family"
    background: str = "#ffffff"
    foreground: str = "#000000"
    draw_guide_circles: bool = False
    guide_color: str = "#cccccc"

    def validate(self) -> None:
        if self.canvas_size <= 0:
            raise ValueError("canvas_size must be positive")
        if not 0 <= self.margin < 0.5:
            raise ValueError("margin must lie in [0, 0.5)")
        if self.point_radius <= 0:
            raise ValueError("point_radius must be positive")
        if self.color_scheme not in ("by-family", "by-radius", "monochrome"):
            raise ValueError(f"unknown color scheme {self.color_scheme!r}")


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(points: Sequence[ProjectionPoint], style: RenderStyle = RenderStyle()) -> str:
    """SVG 1.1 document with one circle per point, largest radius filling the canvas."""
    if not points:
        raise ValueError("nothing to render")
    style.validate()
    size = style.canvas_size
    center = size / 2
    rmax = max(p.radius for p in points)
    scale = (1 - 2 * style.margin) * size / 2 / rmax if rmax > 0 else 0.0
    classes = radius_classes(points)
    class_of = {id(p): k for k, cls in enumerate(classes) for p in cls}

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="{style.background}"/>',
    ]
    if style.draw_guide_circles:
        lines.append('<g class="guides" fill="none">')
        for cls in classes:
            lines.append(
                f'<circle class="guide" cx="{_f(center)}" cy="{_f(center)}" r="{_f(cls[0].radius * scale)}" '
                f'stroke="{style.guide_color}" stroke-width="1"/>'
            )
        lines.append("</g>")
    lines.append('<g class="roots">')
    for p in points:
        if style.color_scheme == "by-family":
            color = FAMILY_COLORS.get(p.family, style.foreground)
        elif style.color_scheme == "by-radius":
            color = RADIUS_COLORS[class_of[id(p)] % len(RADIUS_COLORS)]
        else:
            color = style.foreground
        cx = center + p.position.real * scale
        cy = center - p.position.imag * scale
        lines.append(
            f'<circle class="root" data-family="{p.family}" data-n="{p.index}" '
            f'cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(style.point_radius)}" fill="{color}"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
