"""Strictly convex transforms of shock probabilities.

Ordering hypotheses on shock vectors are phrased through a differentiable,
strictly convex map h of the per-component survival probabilities, together
with its inverse and the derivative of the inverse.  Every instance is
audited numerically at construction on a 1001-point probe grid over (0, 1]:
strict convexity (second differences above 1e-12), a monotonicity tag that
matches the data, an inverse round-trip within 1e-10, and nonnegative
values (zero is allowed at the u = 1 endpoint, as for -ln u).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["HFunction", "builtin_h", "BUILTIN_H_NAMES"]

BUILTIN_H_NAMES = ("neg_log", "square", "exp")

_PROBE = np.linspace(1e-3, 1.0, 1001)


@dataclass(frozen=True)
class HFunction:
    """A named strictly convex map of (0, 1] into the nonnegative reals."""

    name: str
    monotonicity: str
    fn: Callable[[np.ndarray], np.ndarray]
    inv: Callable[[np.ndarray], np.ndarray]
    inv_deriv: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self) -> None:
        if self.monotonicity not in ("increasing", "decreasing"):
            raise ValueError(f"monotonicity must be 'increasing' or 'decreasing', got {self.monotonicity!r}")
        vals = np.asarray(self.fn(_PROBE), dtype=float)
        if vals.shape != _PROBE.shape or not np.all(np.isfinite(vals)):
            raise ValueError(f"h {self.name!r} must be finite on the probe grid")
        if np.any(vals < -1e-15):
            raise ValueError(f"h {self.name!r} must be nonnegative on (0, 1]")
        steps = np.diff(vals)
        if self.monotonicity == "increasing" and not np.all(steps > 0.0):
            raise ValueError(f"h {self.name!r} is tagged increasing but is not")
        if self.monotonicity == "decreasing" and not np.all(steps < 0.0):
            raise ValueError(f"h {self.name!r} is tagged decreasing but is not")
        if not np.all(np.diff(steps) > 1e-12):
            raise ValueError(f"h {self.name!r} fails the strict-convexity probe")
        back = np.asarray(self.inv(vals), dtype=float)
        if np.max(np.abs(back - _PROBE)) > 1e-10:
            raise ValueError(f"h {self.name!r} inverse round-trip exceeds 1e-10")


def builtin_h(name: str) -> HFunction:
    """Return one of the built-in transforms: neg_log, square, or exp."""
    if name == "neg_log":
        return HFunction(
            "neg_log",
            "decreasing",
            lambda u: -np.log(u),
            lambda y: np.exp(-y),
            lambda y: -np.exp(-y),
        )
    if name == "square":
        return HFunction(
            "square",
            "increasing",
            lambda u: np.square(u),
            lambda y: np.sqrt(y),
            lambda y: 0.5 / np.sqrt(y),
        )
    if name == "exp":
        return HFunction(
            "exp",
            "increasing",
            lambda u: np.exp(u),
            lambda y: np.log(y),
            lambda y: 1.0 / np.asarray(y, dtype=float),
        )
    raise ValueError(f"unknown transform {name!r}; built-ins are {BUILTIN_H_NAMES}")
