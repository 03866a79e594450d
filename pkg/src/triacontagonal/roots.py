"""Generation of the E8 and H4 roots from their triacontagonal formulas."""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Literal, Sequence, TextIO, Union

import numpy as np

from .amplitudes import AmplitudeSet
from .cyclo import CycNum, cyc_power, embed_complex
from .errors import ModeError, TranscriptionError
from .tolerances import DEFAULT

Coord = Union[CycNum, complex]
System = Literal["e8", "h4"]

E8_FAMILIES = "ABCDEFGH"
H4_FAMILIES = "ABCD"


@dataclass(frozen=True)
class Entry:
    amp: int  # 1-based amplitude index
    sign: int
    phase: int  # exponent of omega


@dataclass(frozen=True)
class GeneratorMatrix:
    rows: tuple[tuple[Entry, ...], ...]
    diag_exponents: tuple[int, ...]
    families: str

    def phases(self) -> set[int]:
        return {e.phase for row in self.rows for e in row}


def _rows(table):
    return tuple(tuple(Entry(i, s, p) for i, s, p in row) for row in table)


E8_GENERATOR = GeneratorMatrix(
    rows=_rows([
        [(1, +1, 0), (4, +1, 0), (6, +1, 1), (7, +1, 1)],
        [(2, +1, 29), (3, +1, 19), (8, -1, 24), (5, -1, 18)],
        [(3, +1, 29), (2, -1, 19), (5, +1, 24), (8, -1, 18)],
        [(4, +1, 0), (1, -1, 0), (7, +1, 1), (6, -1, 1)],
        [(5, +1, 0), (8, +1, 0), (2, -1, 1), (3, -1, 1)],
        [(6, +1, 29), (7, +1, 19), (4, +1, 24), (1, +1, 18)],
        [(7, +1, 29), (6, -1, 19), (1, -1, 24), (4, +1, 18)],
        [(8, +1, 0), (5, -1, 0), (3, -1, 1), (2, +1, 1)],
    ]),
    diag_exponents=(2, 22, 14, 26),
    families=E8_FAMILIES,
)

# Amplitude indices 1..4 refer to a, b, c, d.
H4_GENERATOR = GeneratorMatrix(
    rows=_rows([
        [(1, +1, 0), (4, +1, 0)],
        [(2, +1, 1), (3, +1, 11)],
        [(3, +1, 1), (2, -1, 11)],
        [(4, +1, 0), (1, -1, 0)],
    ]),
    diag_exponents=(2, 22),
    families=H4_FAMILIES,
)


@dataclass(frozen=True)
class RootVector:
    coords: tuple[Coord, ...]
    family: str
    index: int
    system: System = "e8"

    @property
    def exact(self) -> bool:
        return isinstance(self.coords[0], CycNum)

    @property
    def label(self) -> str:
        return f"{self.family}{self.index}"

    def numeric(self) -> RootVector:
        if not self.exact:
            return self
        return RootVector(tuple(embed_complex(z) for z in self.coords), self.family, self.index, self.system)

    def __neg__(self) -> RootVector:
        return RootVector(tuple(-z for z in self.coords), self.family, self.index, self.system)


def _unit(k: int) -> complex:
    k %= 60
    return cmath.exp(1j * math.pi * k / 30)


def _entry_value(amp, entry: Entry, shift: int, exact: bool) -> Coord:
    if exact:
        z = amp * cyc_power(entry.phase + shift)
        return z if entry.sign > 0 else -z
    return entry.sign * amp * _unit(entry.phase + shift)


def _generate(gen: GeneratorMatrix, amps: Sequence, exact: bool, system: System) -> list[RootVector]:
    out = []
    for family, row in zip(gen.families, gen.rows):
        for n in range(30):
            coords = tuple(
                _entry_value(amps[e.amp - 1], e, d * n, exact)
                for e, d in zip(row, gen.diag_exponents)
            )
            out.append(RootVector(coords, family, n, system))
    _assert_distinct(out)
    return out


def _assert_distinct(roots: Sequence[RootVector], tol: float = DEFAULT.membership) -> None:
    if roots[0].exact:
        seen: dict[tuple, RootVector] = {}
        for v in roots:
            if v.coords in seen:
                raise TranscriptionError(f"duplicate root: {seen[v.coords].label} == {v.label}")
            seen[v.coords] = v
        return
    X = real_matrix(roots)
    dist = np.linalg.norm(X[:, None, :] - X[None, :, :], axis=-1)
    np.fill_diagonal(dist, np.inf)
    i, j = np.unravel_index(np.argmin(dist), dist.shape)
    if dist[i, j] <= tol:
        raise TranscriptionError(f"duplicate root: {roots[i].label} ~ {roots[j].label}")


def e8_roots(amps: AmplitudeSet) -> list[RootVector]:
    """The 240 roots, family-major then n; exact when amps are cyclotomic."""
    return _generate(E8_GENERATOR, amps.r, amps.exact, "e8")


def h4_roots(amps: AmplitudeSet) -> list[RootVector]:
    if amps.abcd is None:
        raise ModeError("H4 roots need surd amplitudes (a, b, c, d)")
    return _generate(H4_GENERATOR, amps.abcd, False, "h4")


def coxeter_rotation(mode: str = "exact", system: System = "e8") -> Callable[[Sequence[Coord]], tuple]:
    """The n -> n+1 step: coordinate j is multiplied by omega^diag_exponents[j]."""
    exps = (E8_GENERATOR if system == "e8" else H4_GENERATOR).diag_exponents
    if mode == "exact":
        factors = [cyc_power(e) for e in exps]
    elif mode == "numeric":
        factors = [_unit(e) for e in exps]
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def rotate(coords: Sequence[Coord]) -> tuple:
        return tuple(f * z for f, z in zip(factors, coords))

    return rotate


def to_real8(v: RootVector | Sequence[Coord]) -> np.ndarray:
    """Interleave real and imaginary parts; works for any number of coordinates."""
    coords = v.coords if isinstance(v, RootVector) else v
    out = []
    for z in coords:
        w = embed_complex(z) if isinstance(z, CycNum) else complex(z)
        out += [w.real, w.imag]
    return np.array(out)


def real_matrix(roots: Iterable[RootVector]) -> np.ndarray:
    return np.array([to_real8(v) for v in roots])


# JSON-lines export/import


def root_to_json(v: RootVector) -> dict:
    if v.exact:
        coords = [z.to_json() for z in v.coords]
    else:
        coords = [[complex(z).real, complex(z).imag] for z in v.coords]
    return {
        "system": v.system,
        "family": v.family,
        "n": v.index,
        "mode": "exact" if v.exact else "numeric",
        "coords": coords,
    }


def root_from_json(data: dict) -> RootVector:
    mode = data["mode"]
    if mode == "exact":
        coords = tuple(CycNum.from_json(c) for c in data["coords"])
    elif mode == "numeric":
        coords = tuple(complex(re, im) for re, im in data["coords"])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return RootVector(coords, data["family"], int(data["n"]), data["system"])


def write_jsonl(roots: Iterable[RootVector], fh: TextIO) -> None:
    for v in roots:
        fh.write(json.dumps(root_to_json(v)) + "\n")


def read_jsonl(fh: TextIO) -> list[RootVector]:
    return [root_from_json(json.loads(line)) for line in fh if line.strip()]


def iter_orbit(v: RootVector, steps: int = 30) -> Iterator[tuple]:
    rotate = coxeter_rotation("exact" if v.exact else "numeric", v.system)
    coords = v.coords
    for _ in range(steps):
        yield coords
        coords = rotate(coords)
