"""Radial amplitudes of the E8 and H4 coordinate formulas.

Two interchangeable amplitude sets are provided.  The surd set gives unit
roots in floating point; the cyclotomic set gives roots with every
coordinate in Q(zeta_60), at the cost of a common non-unit norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .cyclo import CycNum, c_n, embed_complex
from .errors import TranscriptionError
from .tolerances import DEFAULT

TAU = (1 + math.sqrt(5)) / 2

# 45x^8 - 90x^6 + 60x^4 - 15x^2 + 1, highest degree first.
OCTIC = (45, 0, -90, 0, 60, 0, -15, 0, 1)

Mode = Literal["surd", "cyclotomic"]
Amplitude = Union[float, CycNum]


def cos_value(n: int) -> float:
    """Float value of c_n = 2cos(n*pi/30)."""
    return 2 * math.cos(n * math.pi / 30)


def octic(x: float) -> float:
    return float(np.polyval(OCTIC, x))


@dataclass(frozen=True)
class AmplitudeSet:
    mode: Mode
    r: tuple[Amplitude, ...]
    abcd: tuple[float, float, float, float] | None = None
    tau: float = TAU

    @property
    def exact(self) -> bool:
        return self.mode == "cyclotomic"

    def numeric(self) -> tuple[float, ...]:
        if self.exact:
            return tuple(embed_complex(x).real for x in self.r)
        return tuple(self.r)


def abcd_numeric(tol: float = DEFAULT.residual) -> tuple[float, float, float, float]:
    """The four amplitudes a > b > c > d of the H4 formula, from their closed forms.

    Raises TranscriptionError if any value fails to annihilate the octic.
    """
    k = 3 ** -0.5 * 5 ** -0.25
    t32 = TAU ** 1.5
    squares = (
        (1 + k * t32) / 2,
        (1 + k / t32) / 2,
        (1 - k / t32) / 2,
        (1 - k * t32) / 2,
    )
    values = tuple(math.sqrt(s) for s in squares)
    for name, x in zip("abcd", values):
        res = octic(x)
        if abs(res) >= tol:
            raise TranscriptionError(f"{name}={x!r} leaves octic residual {res:.3e}")
    return values  # type: ignore[return-value]


def amplitudes_primary() -> AmplitudeSet:
    a, b, c, d = abcd_numeric()
    c9, c3 = cos_value(9), cos_value(3)
    r = (a / c9, b / c9, c / c9, d / c9, a / c3, b / c3, c / c3, d / c3)
    return AmplitudeSet("surd", r, (a, b, c, d))


def amplitudes_cyclotomic() -> AmplitudeSet:
    c = c_n
    r = (
        CycNum.rational(1),
        c(11),
        c(6) * c(13),
        c(6) * c(14),
        c(12),
        c(11) * c(12),
        c(13),
        c(14),
    )
    return AmplitudeSet("cyclotomic", r)


def amplitudes(mode: Mode) -> AmplitudeSet:
    if mode == "surd":
        return amplitudes_primary()
    if mode == "cyclotomic":
        return amplitudes_cyclotomic()
    raise ValueError(f"unknown amplitude mode {mode!r}")


def ratio_table() -> list[float]:
    """Per-index ratios cyclotomic r_i / surd r_i."""
    surd = amplitudes_primary().r
    cyc = amplitudes_cyclotomic().numeric()
    return [x / y for x, y in zip(cyc, surd)]


def proportionality_ratio(tol: float = DEFAULT.residual) -> float:
    """Common factor lambda with cyclotomic r_i = lambda * surd r_i.

    Raises TranscriptionError with the ratio table if the eight ratios disagree.
    """
    ratios = ratio_table()
    lam = cos_value(9) / abcd_numeric()[0]
    bad = [(i + 1, q) for i, q in enumerate(ratios) if abs(q - lam) > tol * lam]
    if bad:
        table = ", ".join(f"r{i}: {q:.15g}" for i, q in enumerate(ratios, 1))
        raise TranscriptionError(f"amplitude ratios disagree with c9/a={lam!r}: {table}")
    return lam
