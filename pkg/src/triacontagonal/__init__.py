"""Triacontagonal coordinates for the E8 and H4 root systems, with exact verification."""

from .amplitudes import AmplitudeSet, amplitudes_cyclotomic, amplitudes_primary
from .cyclo import CycNum, c_n, cyc_power
from .roots import RootVector, e8_roots, h4_roots

__all__ = [
    "AmplitudeSet",
    "CycNum",
    "RootVector",
    "amplitudes_cyclotomic",
    "amplitudes_primary",
    "c_n",
    "cyc_power",
    "e8_roots",
    "h4_roots",
]
__version__ = "0.1.0"
