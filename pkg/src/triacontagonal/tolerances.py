"""Named floating-point tolerances used throughout the checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-10  # octic residuals, amplitude ratios
    identity: float = 1e-12  # identities among double-precision constants, unit norms
    membership: float = 1e-9  # numeric root lookup, projection matching, isometry
    census: float = 1e-10  # snapping inner products to their allowed values
    render_digits: int = 6

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


DEFAULT = Tolerances()
