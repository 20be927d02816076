"""Usual stochastic order between two parallel systems by dense CDF comparison.

X dominates Y in the usual stochastic order when the survival function of X
is everywhere at least that of Y; on CDFs over the unit interval that reads
F_X <= F_Y pointwise.  The comparison reports the signed gap

    d(x) = F_X(x) - F_Y(x)

on a fixed grid (including the atom at x = 0, where d is exactly the
difference of the atom products) and classifies:

* ``FirstDominates``  -- d <= tol everywhere and d < -tol somewhere;
* ``SecondDominates`` -- d >= -tol everywhere and d > tol somewhere;
* ``Equal``           -- |d| <= tol everywhere;
* ``Crossing``        -- d exceeds +tol and falls below -tol.

Grid-based checking is a soundness limitation: the gap is smooth on (0, 1)
with a single atom at 0, so a dense grid with endpoint clustering resolves
every feature at desk scale, but a sufficiently narrow sign excursion
between grid points would be missed.  The Monte Carlo variant re-runs the
same decision on empirical CDFs with the tolerance widened to
3 * sqrt(ln n / n), and is meant to cross-validate the analytic route at
that coarser resolution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .shock import SystemSpec, parallel_cdf, parallel_sample

__all__ = [
    "Grid",
    "make_grid",
    "Outcome",
    "OrderVerdict",
    "compare_st",
    "compare_st_mc",
    "mc_tolerance",
    "verdicts_agree",
]

DEFAULT_GRID_INTERIOR = 4096
DEFAULT_TOL = 1e-9


class Outcome(str, enum.Enum):
    FIRST_DOMINATES = "FirstDominates"
    SECOND_DOMINATES = "SecondDominates"
    EQUAL = "Equal"
    CROSSING = "Crossing"


@dataclass(frozen=True)
class Grid:
    """Sorted evaluation points in [0, 1], always containing both endpoints."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise ValueError("grid needs at least the two endpoints")
        if not np.all(np.diff(pts) > 0.0):
            raise ValueError("grid points must be strictly increasing")
        if pts[0] != 0.0 or pts[-1] != 1.0:
            raise ValueError("grid must span [0, 1] inclusively")
        pts = pts.copy()
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return int(self.points.size)


def make_grid(n_interior: int = DEFAULT_GRID_INTERIOR) -> Grid:
    """Endpoints plus n_interior points: half uniform, half clustered near 0 and 1."""
    if n_interior < 2:
        raise ValueError("need at least 2 interior points")
    n_uniform = n_interior // 2
    n_low = (n_interior - n_uniform + 1) // 2
    n_high = n_interior - n_uniform - n_low
    parts = [np.array([0.0, 1.0]), np.linspace(0.0, 1.0, n_uniform + 2)[1:-1]]
    if n_low:
        parts.append(np.geomspace(1e-9, 0.05, n_low))
    if n_high:
        parts.append(1.0 - np.geomspace(1e-9, 0.05, n_high))
    return Grid(np.unique(np.concatenate(parts)))


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of one stochastic-order comparison.

    Gaps are the magnitudes of the largest positive and negative excursions
    of d = F_first - F_second over the grid (both nonnegative, 0.0 when the
    sign never occurs).  ``crossing_witnesses`` holds the grid points of the
    extremal positive and negative excursions when the verdict is Crossing.
    """

    outcome: Outcome
    max_positive_gap: float
    max_negative_gap: float
    crossing_witnesses: tuple[float, ...]
    tol: float

    def __post_init__(self) -> None:
        pos = self.max_positive_gap > self.tol
        neg = self.max_negative_gap > self.tol
        expected = {
            (False, False): Outcome.EQUAL,
            (False, True): Outcome.FIRST_DOMINATES,
            (True, False): Outcome.SECOND_DOMINATES,
            (True, True): Outcome.CROSSING,
        }[(pos, neg)]
        if self.outcome is not expected:
            raise ValueError(f"outcome {self.outcome} inconsistent with gaps at tol {self.tol}")
        if (self.outcome is Outcome.CROSSING) != bool(self.crossing_witnesses):
            raise ValueError("crossing witnesses must be present exactly for Crossing verdicts")

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "max_positive_gap": self.max_positive_gap,
            "max_negative_gap": self.max_negative_gap,
            "crossing_witnesses": list(self.crossing_witnesses),
            "tol": self.tol,
        }


def _classify(diff: np.ndarray, points: np.ndarray, tol: float) -> OrderVerdict:
    hi = int(np.argmax(diff))
    lo = int(np.argmin(diff))
    pos_gap = max(0.0, float(diff[hi]))
    neg_gap = max(0.0, -float(diff[lo]))
    pos, neg = pos_gap > tol, neg_gap > tol
    if pos and neg:
        return OrderVerdict(
            Outcome.CROSSING, pos_gap, neg_gap, (float(points[hi]), float(points[lo])), tol
        )
    if neg:
        return OrderVerdict(Outcome.FIRST_DOMINATES, pos_gap, neg_gap, (), tol)
    if pos:
        return OrderVerdict(Outcome.SECOND_DOMINATES, pos_gap, neg_gap, (), tol)
    return OrderVerdict(Outcome.EQUAL, pos_gap, neg_gap, (), tol)


def _check_tol(tol: float) -> float:
    if not (np.isfinite(tol) and tol > 0.0):
        raise ValueError(f"tolerance must be finite and positive, got {tol!r}")
    return float(tol)


def compare_st(
    sys_x: SystemSpec,
    sys_y: SystemSpec,
    grid: Grid | None = None,
    tol: float = DEFAULT_TOL,
) -> OrderVerdict:
    """Compare two systems on the grid; FirstDominates means X >= Y stochastically."""
    tol = _check_tol(tol)
    grid = grid if grid is not None else make_grid()
    diff = parallel_cdf(sys_x, grid.points) - parallel_cdf(sys_y, grid.points)
    return _classify(diff, grid.points, tol)


def mc_tolerance(n: int) -> float:
    """Decision tolerance for empirical CDFs built from n samples."""
    return 3.0 * math.sqrt(math.log(n) / n)


def _empirical_cdf(samples: np.ndarray, points: np.ndarray) -> np.ndarray:
    return np.searchsorted(np.sort(samples), points, side="right") / samples.size


def compare_st_mc(
    sys_x: SystemSpec,
    sys_y: SystemSpec,
    n: int,
    seed: int,
    grid: Grid | None = None,
) -> OrderVerdict:
    """Monte Carlo version of compare_st on empirical CDFs of n draws per system.

    The two systems get independent streams derived from the master seed by
    fixed offsets, so the verdict is deterministic given (n, seed).  The
    decision tolerance is widened to mc_tolerance(n).
    """
    if n < 10_000:
        raise ValueError("Monte Carlo comparison needs n >= 10000")
    grid = grid if grid is not None else make_grid()
    rng_x = np.random.default_rng(np.random.SeedSequence([int(seed), 0]))
    rng_y = np.random.default_rng(np.random.SeedSequence([int(seed), 1]))
    ecdf_x = _empirical_cdf(parallel_sample(sys_x, rng_x, n), grid.points)
    ecdf_y = _empirical_cdf(parallel_sample(sys_y, rng_y, n), grid.points)
    return _classify(ecdf_x - ecdf_y, grid.points, mc_tolerance(n))


def verdicts_agree(exact: OrderVerdict, mc: OrderVerdict) -> bool:
    """Resolution-aware agreement between an analytic and a Monte Carlo verdict.

    The sampler works at tolerance mc.tol, far above exact.tol, so it cannot
    certify gaps below its own noise floor.  The verdicts agree when, per
    sign, (a) any gap the sampler reports beyond mc.tol is analytically real,
    and (b) any analytic gap that is unambiguous at the sampler's resolution
    (> 2 * mc.tol) is detected by the sampler.  Gaps between exact.tol and
    2 * mc.tol are below the sampler's power and never count as conflicts.
    """
    pairs = (
        (exact.max_positive_gap, mc.max_positive_gap),
        (exact.max_negative_gap, mc.max_negative_gap),
    )
    for e_gap, m_gap in pairs:
        if m_gap > mc.tol and e_gap <= exact.tol:
            return False
        if e_gap > 2.0 * mc.tol and m_gap <= mc.tol:
            return False
    return True
