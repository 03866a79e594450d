"""Projection onto the first complex coordinate and the H4/E8 scaling relation."""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .amplitudes import TAU, cos_value
from .cyclo import CycNum, embed_complex
from .roots import RootVector
from .tolerances import DEFAULT


@dataclass(frozen=True)
class ProjectionPoint:
    position: complex
    radius: float
    phase_index: int
    family: str
    index: int


def _first(v: RootVector) -> complex:
    z = v.coords[0]
    return embed_complex(z) if isinstance(z, CycNum) else complex(z)


def _phase(position: complex, tol: float) -> int:
    arg = cmath.phase(position)
    k = round(arg * 30 / math.pi)
    if abs(arg - k * math.pi / 30) > tol:
        raise ValueError(f"point {position!r} is off the 60-phase grid")
    return k % 60


def project_first_coordinate(roots: Sequence[RootVector], tol: float = DEFAULT.membership) -> list[ProjectionPoint]:
    """Forget all but the first coordinate; sorted by radius descending, then phase."""
    pts = []
    for v in roots:
        w = _first(v)
        pts.append(ProjectionPoint(w, abs(w), _phase(w, tol), v.family, v.index))
    return sort_points(pts)


def sort_points(points: Sequence[ProjectionPoint]) -> list[ProjectionPoint]:
    return sorted(points, key=lambda p: (-round(p.radius, 9), p.phase_index, p.family, p.index))


def radius_classes(points: Sequence[ProjectionPoint], tol: float = DEFAULT.membership) -> list[list[ProjectionPoint]]:
    """Group points into concentric cycles, largest radius first."""
    classes: list[list[ProjectionPoint]] = []
    for p in sorted(points, key=lambda p: -p.radius):
        if classes and abs(classes[-1][0].radius - p.radius) <= tol:
            classes[-1].append(p)
        else:
            classes.append([p])
    return classes


def radii(points: Sequence[ProjectionPoint], tol: float = DEFAULT.membership) -> list[float]:
    return [c[0].radius for c in radius_classes(points, tol)]


@dataclass
class ScalingResult:
    passed: bool
    ratio: float
    matched: int
    unmatched: list[dict] = field(default_factory=list)
    diagnostic: str = ""


def h4_e8_scaling_check(
    e8_points: Sequence[ProjectionPoint],
    h4_points: Sequence[ProjectionPoint],
    tol: float = DEFAULT.membership,
    ratio_tol: float = DEFAULT.identity,
) -> ScalingResult:
    """E8 projection == (1/c9) H4 projection + (1/c3) H4 projection, as multisets.

    Points are bucketed by phase index and compared by sorted radius within
    each bucket.
    """
    c9, c3 = cos_value(9), cos_value(3)
    ratio = c3 / c9
    if not e8_points or not h4_points:
        return ScalingResult(False, ratio, 0, diagnostic="empty projection")
    target: dict[int, list[tuple[float, complex]]] = defaultdict(list)
    for p in h4_points:
        for s in (1 / c9, 1 / c3):
            target[p.phase_index].append((p.radius * s, p.position * s))
    source: dict[int, list[tuple[float, complex]]] = defaultdict(list)
    for p in e8_points:
        source[p.phase_index].append((p.radius, p.position))

    matched, unmatched = 0, []
    for k in sorted(set(target) | set(source)):
        a = sorted(source.get(k, []), key=lambda t: t[0])
        b = sorted(target.get(k, []), key=lambda t: t[0])
        i = j = 0
        while i < len(a) and j < len(b):
            if abs(a[i][1] - b[j][1]) <= tol:
                matched += 1
                i += 1
                j += 1
            elif a[i][0] < b[j][0]:
                unmatched.append({"side": "e8", "phase": k, "radius": a[i][0]})
                i += 1
            else:
                unmatched.append({"side": "h4", "phase": k, "radius": b[j][0]})
                j += 1
        unmatched += [{"side": "e8", "phase": k, "radius": r} for r, _ in a[i:]]
        unmatched += [{"side": "h4", "phase": k, "radius": r} for r, _ in b[j:]]
    ratio_ok = abs(ratio - TAU) <= ratio_tol
    passed = not unmatched and ratio_ok
    diag = "" if passed else f"{len(unmatched)} unmatched points, ratio error {abs(ratio - TAU):.2e}"
    return ScalingResult(passed, ratio, matched, unmatched, diag)


def phase_census(points: Sequence[ProjectionPoint], tol: float = DEFAULT.membership) -> list[dict]:
    """Per radius class: its parity of phase indices and source families."""
    out = []
    evens = set(range(0, 60, 2))
    odds = set(range(1, 60, 2))
    for cls in radius_classes(points, tol):
        phases = {p.phase_index for p in cls}
        parity = "even" if phases == evens else "odd" if phases == odds else "mixed"
        out.append({
            "radius": cls[0].radius,
            "count": len(cls),
            "parity": parity,
            "families": "".join(sorted({p.family for p in cls})),
        })
    return out


def regular_polygon_gaps(points: Sequence[ProjectionPoint], tol: float = DEFAULT.membership) -> float:
    """Largest deviation of consecutive argument gaps from pi/15 over all cycles."""
    worst = 0.0
    for cls in radius_classes(points, tol):
        args = sorted(cmath.phase(p.position) % (2 * math.pi) for p in cls)
        gaps = [b - a for a, b in zip(args, args[1:])] + [args[0] + 2 * math.pi - args[-1]]
        worst = max(worst, max(abs(g - math.pi / 15) for g in gaps))
    return worst


FIELDS = ("family", "n", "radius", "phase_index", "re", "im")


def _row(p: ProjectionPoint) -> dict:
    return {"family": p.family, "n": p.index, "radius": p.radius, "phase_index": p.phase_index,
            "re": p.position.real, "im": p.position.imag}


def to_csv(points: Sequence[ProjectionPoint]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for p in points:
        w.writerow({k: repr(v) if isinstance(v, float) else v for k, v in _row(p).items()})
    return buf.getvalue()


def to_json(points: Sequence[ProjectionPoint]) -> str:
    return json.dumps([_row(p) for p in points], indent=1)


def from_rows(rows) -> list[ProjectionPoint]:
    return [
        ProjectionPoint(complex(float(r["re"]), float(r["im"])), float(r["radius"]),
                        int(r["phase_index"]), r["family"], int(r["n"]))
        for r in rows
    ]


def from_csv(text: str) -> list[ProjectionPoint]:
    return from_rows(csv.DictReader(io.StringIO(text)))
