"""Randomized cross-checks through exponential trajectories.

``v * exp(lam * t)`` solves ``R(d/dt) w = 0`` iff ``R(lam) v = 0``, so null
spaces of ``R`` evaluated at sample points give necessary conditions that are
independent of the Hermite/Smith machinery.  These checks are advisory: a
disagreement with the exact algebra points at a bug, never at the answer.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .behavior import Behavior, Signature, VarGroup, _check_same_sig, eliminate
from .polymat import Poly, PolyMat, rational_nullspace

log = logging.getLogger(__name__)


def exp_solutions(B: Behavior, lam) -> list[list[Fraction]]:
    """Basis of ``null(R(lam))``: directions ``v`` with ``v*exp(lam t)`` in ``B``."""
    return rational_nullspace(B.R(Fraction(lam)), B.sig.total_dim)


def sample_points(count: int) -> list[Fraction]:
    """``count`` distinct multiples of 1/2 by increasing magnitude: 0, 1/2, -1/2, 1, -1, ..."""
    pts = [Fraction(0)]
    k = 1
    while len(pts) < count:
        pts += [Fraction(k, 2), Fraction(-k, 2)]
        k += 1
    return pts[:count]


def default_samples(*behaviors: Behavior) -> list[Fraction]:
    """Total entry degree of all kernels plus five points."""
    total = sum(max(p.degree, 0) for B in behaviors for p in B.R.entries())
    return sample_points(total + 5)


@dataclass(frozen=True)
class InclusionCheck:
    consistent: bool
    lam: Fraction | None = None
    v: list[Fraction] | None = None


def _in_null(M: list[list[Fraction]], v: Sequence[Fraction]) -> bool:
    return all(sum(a * x for a, x in zip(row, v)) == 0 for row in M)


def randomized_inclusion(B1: Behavior, B2: Behavior, samples: Iterable | None = None) -> InclusionCheck:
    """Look for ``v`` in ``null R1(lam)`` outside ``null R2(lam)``.

    A refutation means ``B1`` is not a subset of ``B2``.  A consistent result
    is evidence only.
    """
    _check_same_sig(B1, B2)
    if samples is None:
        samples = default_samples(B1, B2)
    for lam in samples:
        lam = Fraction(lam)
        M2 = B2.R(lam)
        for v in exp_solutions(B1, lam):
            if not _in_null(M2, v):
                return InclusionCheck(False, lam, v)
    return InclusionCheck(True)


def eliminate_consistent(B: Behavior, keep: Sequence[str], samples: Iterable | None = None) -> bool:
    """Projected exponential solutions of ``B`` must solve the eliminated kernel."""
    E = eliminate(B, keep)
    idx = [j for n in keep for j in B.sig.columns(n)]
    if samples is None:
        samples = default_samples(B)
    for lam in samples:
        lam = Fraction(lam)
        ME = E.R(lam)
        for v in exp_solutions(B, lam):
            if not _in_null(ME, [v[j] for j in idx]):
                log.error("elimination disagrees with exponential solution at lam=%s", lam)
                return False
    return True


def random_poly(rng: random.Random, max_deg: int, coeff_bound: int, zero_prob: float = 0.3) -> Poly:
    if rng.random() < zero_prob:
        return Poly()
    deg = rng.randint(0, max_deg)
    return Poly(rng.randint(-coeff_bound, coeff_bound) for _ in range(deg + 1))


def random_polymat(rows: int, cols: int, max_deg: int = 2, coeff_bound: int = 3, seed=None,
                   rng: random.Random | None = None) -> PolyMat:
    rng = rng or random.Random(seed)
    return PolyMat([[random_poly(rng, max_deg, coeff_bound) for _ in range(cols)] for _ in range(rows)],
                   cols=cols)


def random_behavior(groups, max_rows: int, max_deg: int = 2, coeff_bound: int = 3, seed=None,
                    rng: random.Random | None = None) -> Behavior:
    """Deterministic pseudo-random kernel over ``groups`` for a given seed.

    The row count is drawn from ``0..max_rows``.
    """
    rng = rng or random.Random(seed)
    sig = groups if isinstance(groups, Signature) else Signature(
        g if isinstance(g, VarGroup) else VarGroup(*g) for g in groups
    )
    rows = rng.randint(0, max_rows) if max_rows > 0 else 0
    R = random_polymat(rows, sig.total_dim, max_deg, coeff_bound, rng=rng)
    return Behavior(sig, R)
