"""Line-bundle cohomology on the weak del Pezzo surface.

h^0 is computed by base-locus peeling: while some irreducible negative
curve C (a (-2)-curve of the chosen surface type or an irreducible
(-1)-class) has D.C < 0, replace D by D - C; sections are unchanged at
each step.  A class meeting -K negatively has no sections, and a class
that is nef against every negative curve has h^0 = chi and no higher
cohomology (characteristic-zero vanishing; this is the one semantic
assumption of the module).  h^2 is h^0(K - D) by Serre duality and h^1
closes the Euler characteristic.

The peeling is confluent: distinct irreducible curves meet nonnegatively,
so any two admissible subtraction orders commute.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .euler import chi_line, euler_pair, f_tilde_class, hilbert_poly, structure_class
from .lattice import H, K, DivClass, minus_one_classes
from .surfaces import SurfaceType

__all__ = [
    "NegativeCurveSet",
    "ReductionDivergenceError",
    "CohomologyConsistencyError",
    "CannotConcludeError",
    "negative_curves",
    "reduce_to_nef",
    "h_all",
    "ext_line",
    "f_tilde_cohomology",
    "ChainProblem",
    "ChainCertificate",
    "r1_chain_vanishing",
    "sweep_box",
]

# Hard cap on peeling steps; hitting it raises, never answers silently.
MAX_REDUCTION_STEPS = 200


class ReductionDivergenceError(RuntimeError):
    pass


class CohomologyConsistencyError(RuntimeError):
    pass


class CannotConcludeError(RuntimeError):
    pass


@dataclass(frozen=True)
class NegativeCurveSet:
    """Irreducible negative curves of a surface type, in a fixed order."""

    minus_two: tuple[DivClass, ...]
    minus_one_irred: tuple[DivClass, ...]

    @property
    def all(self) -> tuple[DivClass, ...]:
        return self.minus_two + self.minus_one_irred


@lru_cache(maxsize=None)
def negative_curves(t: SurfaceType) -> NegativeCurveSet:
    """(-2)-curves of t plus the (-1)-classes staying irreducible on t.

    A (-1)-class decomposes exactly when it meets an effective (-2)-curve
    negatively (the total transform picks up that curve), so the
    irreducible ones are those with nonnegative degree on every Delta.
    """
    minus_two = tuple(sorted(t.minus_two_curves, key=lambda d: d.coeffs))
    minus_one = tuple(
        sorted(
            (
                l
                for l in minus_one_classes()
                if all(l.dot(c) >= 0 for c in minus_two)
            ),
            key=lambda d: d.coeffs,
        )
    )
    return NegativeCurveSet(minus_two, minus_one)


@lru_cache(maxsize=None)
def _h0(coeffs: tuple[int, ...], t: SurfaceType) -> tuple[int, DivClass]:
    curves = negative_curves(t).all
    d = DivClass(coeffs)
    for _ in range(MAX_REDUCTION_STEPS):
        if d.dot(-K) < 0:
            return 0, d
        for c in curves:
            if d.dot(c) < 0:
                d = d - c
                break
        else:
            return max(chi_line(d), 0), d
    raise ReductionDivergenceError(f"reduction-divergence at {coeffs} on {t.label}")


def reduce_to_nef(d: DivClass, t: SurfaceType) -> DivClass:
    """Terminal class of the peeling loop (nef, or of negative -K-degree)."""
    return _h0(d.coeffs, t)[1]


def h_all(d: DivClass, t: SurfaceType) -> tuple[int, int, int]:
    """Exact (h^0, h^1, h^2) of O(D) on the given surface type."""
    h0 = _h0(d.coeffs, t)[0]
    h2 = _h0((K - d).coeffs, t)[0]
    h1 = h0 + h2 - chi_line(d)
    if h1 < 0:
        raise CohomologyConsistencyError(
            f"negative h^1 = {h1} for {d!r} on {t.label}"
        )
    return h0, h1, h2


def ext_line(d1: DivClass, d2: DivClass, t: SurfaceType) -> tuple[int, int, int]:
    """Ext dimensions between line bundles: cohomology of the difference."""
    return h_all(d2 - d1, t)


def f_tilde_cohomology(t: SurfaceType) -> tuple[int, int, int]:
    """Cohomology of the rank-2 extension of O(h) by O(-K-h).

    Both filtration pieces must have no higher cohomology, in which case
    the section spaces add up; the total is cross-checked against the
    Euler characteristic of the extension class.
    """
    lower = h_all(-K - H, t)
    upper = h_all(H, t)
    if lower[1:] != (0, 0) or upper[1:] != (0, 0):
        raise CannotConcludeError(
            f"{t.label}: filtration pieces have higher cohomology "
            f"{lower}, {upper}"
        )
    h0 = lower[0] + upper[0]
    cls = f_tilde_class()
    if euler_pair(structure_class(), cls) != h0 or hilbert_poly(cls)(0) != h0:
        raise CohomologyConsistencyError("extension class chi mismatch")
    if cls.c1 != -K:
        raise CohomologyConsistencyError("extension class determinant mismatch")
    return (h0, 0, 0)


# ---------------------------------------------------------------------------
# The R^1-vanishing certificate for a line bundle along an A_n chain of
# (-2)-curves, by simulating the formal-neighbourhood induction: curves are
# added one at a time in the order E_l, ..., E_n, E_{l-1}, ..., E_1, one
# full round per multiplicity level, and every added curve must have degree
# >= -1 on the remaining twist.


@dataclass(frozen=True)
class ChainProblem:
    n: int
    degrees: tuple[int, ...]
    l: int

    def __post_init__(self):
        if not 1 <= self.n <= 4:
            raise ValueError("chain length must be 1..4")
        if len(self.degrees) != self.n:
            raise ValueError("need one degree per curve")
        if not 1 <= self.l <= self.n:
            raise ValueError("distinguished index out of range")


@dataclass(frozen=True)
class ChainCertificate:
    certified: bool
    failing_step: tuple[int, int, int] | None = None  # (level, curve, degree)

    def __bool__(self) -> bool:
        return self.certified


def r1_chain_vanishing(p: ChainProblem, levels: int | None = None) -> ChainCertificate:
    """Certify R^1 f_* O(D) = 0 along the chain from the degree data.

    Simulates multiplicity levels m = 1 .. n+2; per-step degrees are
    checked to be >= -1 and to stabilize (non-decreasing beyond the first
    level, since a full round of the chain has nonpositive degree on each
    curve).
    """
    n, l = p.n, p.l
    schedule = list(range(l, n + 1)) + list(range(l - 1, 0, -1))
    if levels is None:
        levels = n + 2
    w = [0] * (n + 2)  # 1-based multiplicities with zero padding
    previous: dict[int, int] = {}
    for level in range(1, levels + 1):
        for j in schedule:
            against = w[j - 1] + w[j + 1] - 2 * w[j]
            deg = p.degrees[j - 1] - against
            if deg < -1:
                return ChainCertificate(False, (level, j, deg))
            if level > 1 and deg < previous[j]:
                raise CohomologyConsistencyError(
                    f"step degree decreased at level {level}, curve {j}"
                )
            previous[j] = deg
            w[j] += 1
    return ChainCertificate(True)


# ---------------------------------------------------------------------------
# Vectorized exhaustive sweep over a coefficient box, used by the
# acceptance battery.  Same algorithm as h_all, run with int64 rows; the
# caller can cross-check random rows against the scalar path.

_SIGNS = np.array([1, -1, -1, -1, -1], dtype=np.int64)


def sweep_box(
    t: SurfaceType,
    bound: int = 4,
    spot_checks: int = 0,
    seed: int = 0,
    return_arrays: bool = False,
) -> dict:
    """h_all on every class with |coefficients| <= bound, with consistency
    asserts (h^1 >= 0, Euler characteristic, termination) built in."""
    curves = negative_curves(t).all
    cmat = np.array([c.coeffs for c in curves], dtype=np.int64)
    grids = np.meshgrid(*[np.arange(-bound, bound + 1)] * 5, indexing="ij")
    box = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
    n = box.shape[0]
    kvec = np.array(K.coeffs, dtype=np.int64)
    rows = np.vstack([box, kvec - box])
    total = rows.shape[0]

    neg_k = (-kvec * _SIGNS).astype(np.int64)
    curve_cols = (cmat * _SIGNS).T if len(curves) else np.zeros((5, 0), np.int64)

    h0 = np.full(total, -1, dtype=np.int64)
    active = np.arange(total)
    work = rows.copy()
    for _ in range(MAX_REDUCTION_STEPS):
        if active.size == 0:
            break
        cur = work[active]
        bail = cur @ neg_k < 0
        if len(curves):
            degs = cur @ curve_cols
            negmask = degs < 0
            has_neg = negmask.any(axis=1) & ~bail
        else:
            has_neg = np.zeros(active.size, dtype=bool)
        nef = ~bail & ~has_neg
        if bail.any():
            h0[active[bail]] = 0
        if nef.any():
            nef_rows = cur[nef]
            sq = (nef_rows * nef_rows * _SIGNS).sum(axis=1)
            dk = (nef_rows * kvec * _SIGNS).sum(axis=1)
            num = sq - dk
            assert not (num % 2).any()
            chi = num // 2 + 1
            h0[active[nef]] = np.maximum(chi, 0)
        if has_neg.any():
            first = np.argmax(negmask[has_neg], axis=1)
            work[active[has_neg]] -= cmat[first]
        active = active[has_neg]
    if active.size:
        raise ReductionDivergenceError(
            f"reduction-divergence in sweep on {t.label}: {active.size} rows"
        )

    sq = (box * box * _SIGNS).sum(axis=1)
    dk = (box * kvec * _SIGNS).sum(axis=1)
    chi = (sq - dk) // 2 + 1
    h0_d = h0[:n]
    h2_d = h0[n:]
    h1_d = h0_d + h2_d - chi
    if (h1_d < 0).any():
        bad = box[h1_d < 0][0]
        raise CohomologyConsistencyError(f"negative h^1 at {tuple(bad)} on {t.label}")

    if spot_checks:
        rng = np.random.default_rng(seed)
        for idx in rng.integers(0, n, size=spot_checks):
            d = DivClass(tuple(int(x) for x in box[idx]))
            if h_all(d, t) != (int(h0_d[idx]), int(h1_d[idx]), int(h2_d[idx])):
                raise CohomologyConsistencyError(
                    f"sweep disagrees with scalar path at {d!r} on {t.label}"
                )

    info = {
        "type": t.label,
        "bound": bound,
        "classes": int(n),
        "effective": int((h0_d > 0).sum()),
        "h1_positive": int((h1_d > 0).sum()),
        "max_h0": int(h0_d.max()),
        "spot_checks": spot_checks,
    }
    if return_arrays:
        info["arrays"] = {"box": box, "h0": h0_d, "h1": h1_d, "h2": h2_d, "chi": chi}
    return info
