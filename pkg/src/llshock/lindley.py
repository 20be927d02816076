"""Log-Lindley distribution on (0, 1).

LL(sigma, lam) has density

    f(x) = sigma**2 / (1 + lam*sigma) * (lam - ln x) * x**(sigma - 1)

for 0 < x < 1, with shape sigma > 0 and scale lam >= 0, and distribution
function

    F(x) = x**sigma * (1 + sigma*(lam - ln x)) / (1 + lam*sigma),

extended by continuity to F(0) = 0 and F(1) = 1 (x**sigma * ln x -> 0 as
x -> 0+, so the boundary values are the limits).  There is no closed-form
inverse; quantiles come from a bracketed Newton/bisection hybrid on [0, 1].

All evaluators accept scalars or arrays, broadcast elementwise, and are
pure.  RNG streams used for sampling are owned by the caller; a stream must
not be used from two threads at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "LLParams",
    "ll_pdf",
    "ll_cdf",
    "ll_survival",
    "ll_survival_dsigma",
    "ll_quantile",
    "ll_sample",
]

QUANTILE_TOL = 1e-12
QUANTILE_MAX_ITER = 200


@dataclass(frozen=True)
class LLParams:
    """Shape (sigma) and scale (lam) of one log-Lindley variable."""

    sigma: float
    lam: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.sigma) and self.sigma > 0.0):
            raise ValueError(f"shape sigma must be finite and positive, got {self.sigma!r}")
        if not (np.isfinite(self.lam) and self.lam >= 0.0):
            raise ValueError(f"scale lam must be finite and nonnegative, got {self.lam!r}")


def _prepare(x, lo_open: bool, hi_open: bool, what: str) -> tuple[np.ndarray, bool]:
    """Coerce to float array, reject values outside the unit interval."""
    arr = np.asarray(x, dtype=float)
    too_low = (arr <= 0.0) if lo_open else (arr < 0.0)
    too_high = (arr >= 1.0) if hi_open else (arr > 1.0)
    if not np.all(np.isfinite(arr)) or np.any(too_low | too_high):
        lo = "(0," if lo_open else "[0,"
        hi = " 1)" if hi_open else " 1]"
        raise ValueError(f"{what} must lie in {lo}{hi}")
    return arr, arr.ndim == 0


def _maybe_scalar(out: np.ndarray, scalar: bool):
    return float(out) if scalar else out


def ll_pdf(params: LLParams, x):
    """Density at x in the open interval (0, 1)."""
    arr, scalar = _prepare(x, True, True, "pdf argument")
    norm = params.sigma**2 / (1.0 + params.lam * params.sigma)
    out = norm * (params.lam - np.log(arr)) * arr ** (params.sigma - 1.0)
    return _maybe_scalar(out, scalar)


def ll_cdf(params: LLParams, x):
    """Distribution function on [0, 1]; 0 and 1 at the endpoints."""
    arr, scalar = _prepare(x, False, False, "cdf argument")
    pos = arr > 0.0
    safe = np.where(pos, arr, 1.0)
    logx = np.log(safe)
    val = safe**params.sigma * (1.0 + params.sigma * (params.lam - logx))
    out = np.where(pos, val / (1.0 + params.lam * params.sigma), 0.0)
    return _maybe_scalar(out, scalar)


def ll_survival(params: LLParams, x):
    """Survival factor w(x) = 1 - F(x) on [0, 1], in product-friendly form.

    Computed as 1 - x**sigma + sigma * x**sigma * ln x / (1 + lam*sigma),
    which agrees with 1 - ll_cdf identically; w(0) = 1 and w(1) = 0 exactly.
    """
    arr, scalar = _prepare(x, False, False, "survival argument")
    pos = arr > 0.0
    safe = np.where(pos, arr, 1.0)
    xs = safe**params.sigma
    val = 1.0 - xs + params.sigma * xs * np.log(safe) / (1.0 + params.lam * params.sigma)
    out = np.where(pos, val, 1.0)
    return _maybe_scalar(out, scalar)


def ll_survival_dsigma(params: LLParams, x):
    """Derivative of the survival factor with respect to the shape sigma.

    Equals x**sigma * ln x * (-1 + 1/(1 + lam*sigma)**2 + sigma*ln x/(1 + lam*sigma)).
    Nonnegative on (0, 1): raising the shape raises the survival factor.
    """
    arr, scalar = _prepare(x, True, True, "derivative argument")
    logx = np.log(arr)
    denom = 1.0 + params.lam * params.sigma
    bracket = -1.0 + 1.0 / denom**2 + params.sigma * logx / denom
    out = arr**params.sigma * logx * bracket
    return _maybe_scalar(out, scalar)


def ll_quantile(params: LLParams, q):
    """Inverse of ll_cdf on [0, 1].

    Bracketed Newton iteration with bisection fallback, run on t = ln x so
    the far lower tail (quantiles as small as the smallest positive double)
    stays within bisection reach.  The CDF is strictly increasing, so the
    bracket always contracts; iteration stops when the CDF residual drops to
    1e-12, the bracket is exhausted at float resolution, or after 200
    rounds.  q = 0 and q = 1 map to the endpoints exactly; a q below the
    CDF value of the smallest positive double returns 0.
    """
    arr, scalar = _prepare(q, False, False, "quantile level")
    flat = np.atleast_1d(arr).ravel().astype(float)
    out = np.where(flat >= 1.0, 1.0, 0.0)
    interior = (flat > 0.0) & (flat < 1.0)
    if np.any(interior):
        qi = flat[interior]
        sig, lam = params.sigma, params.lam
        denom = 1.0 + lam * sig

        def cdf_at(t: np.ndarray) -> np.ndarray:
            return np.exp(sig * t) * (1.0 + sig * (lam - t)) / denom

        t_floor = -745.0  # ln of the smallest positive double
        solvable = cdf_at(np.full_like(qi, t_floor)) <= qi
        t_lo = np.full_like(qi, t_floor)
        t_hi = np.zeros_like(qi)
        t = np.full_like(qi, np.log(0.5))
        for _ in range(QUANTILE_MAX_ITER):
            err = cdf_at(t) - qi
            done = (np.abs(err) <= QUANTILE_TOL) | (
                t_hi - t_lo <= 1e-15 * (1.0 + np.abs(t_lo))
            )
            if np.all(done | ~solvable):
                break
            t_lo = np.where(err <= 0.0, np.maximum(t_lo, t), t_lo)
            t_hi = np.where(err > 0.0, np.minimum(t_hi, t), t_hi)
            deriv = sig * sig * (lam - t) * np.exp(sig * t) / denom
            with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
                nxt = t - err / deriv
            bisect = ~np.isfinite(nxt) | (nxt <= t_lo) | (nxt >= t_hi)
            nxt = np.where(bisect, 0.5 * (t_lo + t_hi), nxt)
            t = np.where(done, t, nxt)
        out[interior] = np.where(solvable, np.exp(t), 0.0)
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def ll_sample(params: LLParams, rng: np.random.Generator, n: int) -> np.ndarray:
    """n i.i.d. draws by inverse transform; deterministic given the stream state."""
    if n < 0:
        raise ValueError("sample size must be nonnegative")
    return ll_quantile(params, rng.random(int(n)))
