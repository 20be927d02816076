"""Vector and matrix majorization predicates, T-transforms, pair generators.

Vector orders (all defined through the increasing arrangements x_(1) <= ...
<= x_(n)):

* ``majorizes(x, y)``: every prefix sum of x is dominated by the matching
  prefix sum of y and the totals agree;
* ``weakly_supermajorizes``: prefix-sum domination only;
* ``weakly_submajorizes``: suffix sums of x dominate those of y
  (equivalently, every k-largest-entries sum of x dominates y's).

Matrix orders compare equal-shape matrices row by row, or constructively
through right-multiplication by T-transform matrices (convex mixes of the
identity with a two-coordinate swap).  A finite T-transform chain produces a
matrix that the source chain-majorizes, which implies row majorization and
then row weak majorization.  Deciding whether some doubly stochastic P links
two given matrices is a linear-programming question and is deliberately not
implemented; only the constructive direction is exposed.

Sum comparisons use the scale-aware tolerance 1e-12 * (1 + max|entry|) so
reflexivity survives floating-point prefix-sum drift without admitting false
positives at unit scale.  Sorting is stable, so ties are broken by original
index; the orders only depend on order statistics, making ties harmless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "MajorVerdict",
    "majorizes",
    "weakly_supermajorizes",
    "weakly_submajorizes",
    "is_doubly_stochastic",
    "t_transform",
    "is_t_transform",
    "chain_majorize_apply",
    "row_majorizes",
    "row_weakly_majorizes",
    "in_U_n",
    "in_V_n",
    "mix_toward",
    "gen_ordered_pair",
]

PAIR_KINDS = ("majorize", "weak_super", "weak_sub", "chain", "row_weak")
CONES = ("D+", "E+")


@dataclass(frozen=True)
class MajorVerdict:
    """Outcome of a majorization-type comparison.

    ``witness`` is present exactly when the relation fails and points at a
    re-checkable violated inequality: for prefix-sum relations the length j
    of the violated prefix (j = n flags a total-sum mismatch), for the weak
    'sub' relation the count k of largest entries in the violated sum, and
    for row-wise relations the pair (row index, inner witness).
    """

    holds: bool
    witness: int | tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the relation fails")

    def __bool__(self) -> bool:
        return self.holds


def _vector_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.ndim != 1 or yv.ndim != 1:
        raise ValueError("expected one-dimensional vectors")
    if xv.size != yv.size or xv.size == 0:
        raise ValueError(f"length mismatch: {xv.size} vs {yv.size}")
    if not (np.all(np.isfinite(xv)) and np.all(np.isfinite(yv))):
        raise ValueError("vector entries must be finite")
    return xv, yv


def _sum_tol(*vecs: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(v))) for v in vecs)
    return 1e-12 * (1.0 + scale)


def majorizes(x, y) -> MajorVerdict:
    """Does x majorize y (prefix-sum domination with equal totals)?"""
    xv, yv = _vector_pair(x, y)
    px = np.cumsum(np.sort(xv, kind="stable"))
    py = np.cumsum(np.sort(yv, kind="stable"))
    tol = _sum_tol(xv, yv)
    bad = px[:-1] > py[:-1] + tol
    if np.any(bad):
        return MajorVerdict(False, int(np.argmax(bad)) + 1)
    if abs(px[-1] - py[-1]) > tol:
        return MajorVerdict(False, xv.size)
    return MajorVerdict(True)


def weakly_supermajorizes(x, y) -> MajorVerdict:
    """Does x weakly supermajorize y (all prefix sums dominated by y's)?"""
    xv, yv = _vector_pair(x, y)
    px = np.cumsum(np.sort(xv, kind="stable"))
    py = np.cumsum(np.sort(yv, kind="stable"))
    bad = px > py + _sum_tol(xv, yv)
    if np.any(bad):
        return MajorVerdict(False, int(np.argmax(bad)) + 1)
    return MajorVerdict(True)


def weakly_submajorizes(x, y) -> MajorVerdict:
    """Does x weakly submajorize y (every k-largest sum of x dominates y's)?"""
    xv, yv = _vector_pair(x, y)
    dx = np.cumsum(np.sort(xv, kind="stable")[::-1])
    dy = np.cumsum(np.sort(yv, kind="stable")[::-1])
    bad = dx < dy - _sum_tol(xv, yv)
    if np.any(bad):
        return MajorVerdict(False, int(np.argmax(bad)) + 1)
    return MajorVerdict(True)


def _square(mat) -> np.ndarray:
    m = np.asarray(mat, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError("expected a nonempty square matrix")
    return m


def is_doubly_stochastic(mat, tol: float = 1e-12) -> bool:
    """Entries nonnegative (within tol) and all row/column sums equal to 1."""
    m = _square(mat)
    if not np.all(np.isfinite(m)):
        return False
    if np.any(m < -tol):
        return False
    return bool(
        np.all(np.abs(m.sum(axis=0) - 1.0) <= tol)
        and np.all(np.abs(m.sum(axis=1) - 1.0) <= tol)
    )


def t_transform(n: int, i: int, j: int, mix: float) -> np.ndarray:
    """mix * I + (1 - mix) * (swap of coordinates i and j); doubly stochastic.

    mix = 1 gives the identity, mix = 0 the pure swap.  Indices are 0-based.
    """
    if not 0 <= i < n or not 0 <= j < n or i == j:
        raise ValueError(f"need distinct indices in [0, {n}), got {i}, {j}")
    if not 0.0 <= mix <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {mix!r}")
    out = np.eye(n)
    out[i, i] = out[j, j] = mix
    out[i, j] = out[j, i] = 1.0 - mix
    return out


def is_t_transform(mat, tol: float = 1e-12) -> bool:
    """Is the matrix of the form mix * I + (1 - mix) * (two-coordinate swap)?"""
    m = _square(mat)
    if not is_doubly_stochastic(m, tol):
        return False
    off = m - np.diag(np.diag(m))
    rows, cols = np.nonzero(np.abs(off) > tol)
    if rows.size == 0:
        return bool(np.all(np.abs(np.diag(m) - 1.0) <= tol))
    if rows.size != 2:
        return False
    (i, j) = sorted(zip(rows, cols))[0]
    if (j, i) != tuple(sorted(zip(rows, cols))[1]):
        return False
    others = np.delete(np.diag(m), [i, j])
    return bool(
        abs(m[i, j] - m[j, i]) <= tol
        and abs(m[i, i] - m[j, j]) <= tol
        and abs(m[i, i] + m[i, j] - 1.0) <= tol
        and np.all(np.abs(others - 1.0) <= tol)
    )


def chain_majorize_apply(mat, transforms) -> np.ndarray:
    """Right-multiply by a finite chain of T-transforms.

    The result is chain-majorized by the input (and hence row-majorized by
    it); an empty chain returns a copy of the input.
    """
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or not np.all(np.isfinite(a)):
        raise ValueError("expected a finite two-dimensional matrix")
    out = a.copy()
    for t in transforms:
        tm = np.asarray(t, dtype=float)
        if tm.shape != (a.shape[1], a.shape[1]):
            raise ValueError(f"transform shape {tm.shape} does not match {a.shape[1]} columns")
        if not is_t_transform(tm):
            raise ValueError("chain entries must be T-transform matrices")
        out = out @ tm
    return out


def _matrix_pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    am = np.asarray(a, dtype=float)
    bm = np.asarray(b, dtype=float)
    if am.ndim != 2 or am.shape != bm.shape:
        raise ValueError(f"shape mismatch: {am.shape} vs {bm.shape}")
    return am, bm


def row_majorizes(a, b) -> MajorVerdict:
    """Row-by-row majorization of equal-shape matrices."""
    am, bm = _matrix_pair(a, b)
    for r in range(am.shape[0]):
        verdict = majorizes(am[r], bm[r])
        if not verdict.holds:
            return MajorVerdict(False, (r, verdict.witness))
    return MajorVerdict(True)


def row_weakly_majorizes(a, b) -> MajorVerdict:
    """Row-by-row weak supermajorization of equal-shape matrices."""
    am, bm = _matrix_pair(a, b)
    for r in range(am.shape[0]):
        verdict = weakly_supermajorizes(am[r], bm[r])
        if not verdict.holds:
            return MajorVerdict(False, (r, verdict.witness))
    return MajorVerdict(True)


def _two_rows(mat) -> np.ndarray:
    m = np.asarray(mat, dtype=float)
    if m.ndim != 2 or m.shape[0] != 2 or m.shape[1] == 0:
        raise ValueError("expected a 2 x n matrix")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def in_U_n(mat) -> bool:
    """Are the two rows similarly ordered: (x_i - x_j)(y_i - y_j) >= 0 for all i, j?"""
    m = _two_rows(mat)
    top, bot = m[0], m[1]
    slack = 1e-12 * (1.0 + float(np.max(np.abs(m)))) ** 2
    prod = np.subtract.outer(top, top) * np.subtract.outer(bot, bot)
    return bool(np.all(prod >= -slack))


def in_V_n(mat) -> bool:
    """Are the two rows oppositely ordered: (x_i - x_j)(y_i - y_j) <= 0 for all i, j?"""
    m = _two_rows(mat)
    top, bot = m[0], m[1]
    slack = 1e-12 * (1.0 + float(np.max(np.abs(m)))) ** 2
    prod = np.subtract.outer(top, top) * np.subtract.outer(bot, bot)
    return bool(np.all(prod <= slack))


def _sort_cone(vec: np.ndarray, cone: str | None) -> np.ndarray:
    if cone is None:
        return np.array(vec)
    if cone == "D+":
        return np.sort(vec, kind="stable")[::-1].copy()
    if cone == "E+":
        return np.sort(vec, kind="stable")
    raise ValueError(f"unknown cone {cone!r}; expected one of {CONES} or None")


def mix_toward(vec, rng: np.random.Generator, n_mixes: int | None = None) -> np.ndarray:
    """Apply random two-coordinate convex mixes; the input majorizes the output."""
    out = np.asarray(vec, dtype=float).copy()
    k = int(rng.integers(1, 4)) if n_mixes is None else n_mixes
    for _ in range(k):
        i, j = rng.choice(out.size, size=2, replace=False)
        t = rng.random()
        vi, vj = out[i], out[j]
        out[i] = t * vi + (1.0 - t) * vj
        out[j] = (1.0 - t) * vi + t * vj
    return out


def gen_ordered_pair(kind: str, n: int, cone: str | None, rng: np.random.Generator):
    """Draw a random pair guaranteed to satisfy the requested relation.

    Vector kinds return (x, y) with x related to y; matrix kinds return
    (A, B) 2 x n matrices.  Vectors (and the rows of row_weak matrices) are
    sorted into the requested cone, which no relation here is sensitive to;
    for ``chain`` the cone shapes the source matrix and B is reordered only
    by column swaps so the chain witness stays valid.
    """
    if kind not in PAIR_KINDS:
        raise ValueError(f"unknown pair kind {kind!r}; expected one of {PAIR_KINDS}")
    if n < 2:
        raise ValueError("pair generation needs dimension n >= 2")
    if cone is not None and cone not in CONES:
        raise ValueError(f"unknown cone {cone!r}; expected one of {CONES} or None")

    def base() -> np.ndarray:
        return rng.uniform(0.5, 3.0, size=n)

    if kind == "majorize":
        x = base()
        y = mix_toward(x, rng)
        return _sort_cone(x, cone), _sort_cone(y, cone)
    if kind == "weak_super":
        x = base()
        y = mix_toward(x, rng) + rng.uniform(0.0, 0.5, size=n)
        return _sort_cone(x, cone), _sort_cone(y, cone)
    if kind == "weak_sub":
        x = base()
        y = mix_toward(x, rng) * (1.0 - rng.uniform(0.0, 0.5, size=n))
        return _sort_cone(x, cone), _sort_cone(y, cone)
    if kind == "chain":
        a = np.vstack([_sort_cone(base(), cone), _sort_cone(base(), cone)])
        transforms = [
            t_transform(n, *rng.choice(n, size=2, replace=False), rng.random())
            for _ in range(int(rng.integers(1, 4)))
        ]
        b = chain_majorize_apply(a, transforms)
        if cone is not None:
            order = np.argsort(b[0], kind="stable")
            if cone == "D+":
                order = order[::-1]
            b = b[:, order]
        return a, b
    # row_weak
    a = np.vstack([_sort_cone(base(), cone), _sort_cone(base(), cone)])
    rows = [
        _sort_cone(mix_toward(a[r], rng) + rng.uniform(0.0, 0.5, size=n), cone)
        for r in range(2)
    ]
    return a, np.vstack(rows)
