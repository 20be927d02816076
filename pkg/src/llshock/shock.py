"""Bernoulli-shocked lifetimes and the parallel-system distribution.

A component with log-Lindley lifetime T survives an initial shock with
probability p (0 < p <= 1); its effective lifetime is X = I*T with
I ~ Bernoulli(p) independent of T.  X has an atom of mass 1 - p at zero and
otherwise follows T, so with w = 1 - F_T the component survival factor:

    F_X(0) = 1 - p,        F_X(t) = 1 - p * w(t)   for 0 < t <= 1.

A parallel system works while any component works; its lifetime is the
componentwise maximum and its distribution function the product of the
component distribution functions.  At zero the product of the atoms.

Values at 0 are the post-atom (right-continuous) CDF values.  Components
with p = 0 are rejected at construction: they are dead at time zero and
break the convex shock-transform machinery used by the ordering results.
The mixed distributions carry no density object; all ordering work here is
CDF-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .lindley import LLParams, _maybe_scalar, _prepare, ll_quantile, ll_survival

__all__ = [
    "ShockedComponent",
    "SystemSpec",
    "shocked_cdf",
    "parallel_cdf",
    "parallel_sample",
]

SPEC_JSON_KEYS = ("sigma", "lambda", "p")


@dataclass(frozen=True)
class ShockedComponent:
    """One log-Lindley component together with its shock-survival probability."""

    ll: LLParams
    p: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.p) and 0.0 < self.p <= 1.0):
            raise ValueError(f"shock probability p must lie in (0, 1], got {self.p!r}")


@dataclass(frozen=True)
class SystemSpec:
    """An ordered list of shocked components forming one parallel system."""

    components: tuple[ShockedComponent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a system needs at least one component")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def sigmas(self) -> np.ndarray:
        return np.array([c.ll.sigma for c in self.components])

    @property
    def lams(self) -> np.ndarray:
        return np.array([c.ll.lam for c in self.components])

    @property
    def ps(self) -> np.ndarray:
        return np.array([c.p for c in self.components])

    @classmethod
    def from_arrays(cls, sigma, lam, p) -> "SystemSpec":
        """Build from per-component parameter arrays; scalars broadcast."""
        sig, lm, pp = np.broadcast_arrays(
            np.asarray(sigma, float), np.asarray(lam, float), np.asarray(p, float)
        )
        sig, lm, pp = np.atleast_1d(sig, lm, pp)
        return cls(
            tuple(
                ShockedComponent(LLParams(float(s), float(l)), float(q))
                for s, l, q in zip(sig, lm, pp)
            )
        )

    @classmethod
    def from_json(cls, obj) -> "SystemSpec":
        """Parse the wire format {"sigma": [...], "lambda": [...], "p": [...]}.

        Accepts a dict or a JSON string.  The three keys are mandatory, no
        others are allowed, and the arrays must be equal-length lists of
        finite numbers satisfying the component constraints.
        """
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or set(obj) != set(SPEC_JSON_KEYS):
            raise ValueError(f"system spec must be an object with exactly the keys {SPEC_JSON_KEYS}")
        cols = []
        for key in SPEC_JSON_KEYS:
            val = obj[key]
            if not isinstance(val, list) or not val:
                raise ValueError(f"system spec field {key!r} must be a nonempty array")
            for entry in val:
                if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                    raise ValueError(f"system spec field {key!r} must contain numbers only")
            cols.append(np.asarray(val, dtype=float))
        if len({c.size for c in cols}) != 1:
            raise ValueError("system spec arrays must have equal lengths")
        return cls.from_arrays(*cols)

    def to_json(self) -> dict:
        return {
            "sigma": [c.ll.sigma for c in self.components],
            "lambda": [c.ll.lam for c in self.components],
            "p": [c.p for c in self.components],
        }


def shocked_cdf(component: ShockedComponent, t):
    """CDF of the shocked lifetime on [0, 1]; equals 1 - p at t = 0."""
    return 1.0 - component.p * ll_survival(component.ll, t)


def parallel_cdf(system: SystemSpec, x):
    """System CDF: the product of the component CDFs, evaluated on [0, 1]."""
    arr, scalar = _prepare(x, False, False, "system cdf argument")
    pos = arr > 0.0
    safe = np.where(pos, arr, 1.0)
    logx = np.log(safe)
    out = np.ones_like(safe)
    for c in system.components:
        sig, lam = c.ll.sigma, c.ll.lam
        xs = np.exp(sig * logx)
        w = np.where(pos, 1.0 - xs + sig * xs * logx / (1.0 + lam * sig), 1.0)
        out = out * (1.0 - c.p * w)
    return _maybe_scalar(out, scalar)


def parallel_sample(system: SystemSpec, rng: np.random.Generator, n: int) -> np.ndarray:
    """n independent system lifetimes: max over components of Bernoulli * LL draws.

    Lifetimes are only sampled for components whose shock draw survived, so
    the stream consumption is (one uniform block per component, one per
    surviving slot); results depend only on the stream state and n.
    """
    if n < 0:
        raise ValueError("sample size must be nonnegative")
    n = int(n)
    out = np.zeros(n)
    for c in system.components:
        alive = rng.random(n) < c.p
        k = int(alive.sum())
        if k:
            vals = np.zeros(n)
            vals[alive] = ll_quantile(c.ll, rng.random(k))
            np.maximum(out, vals, out=out)
    return out
