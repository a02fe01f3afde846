"""Euclidean regular-polygon area calculus at fixed perimeter.

A(n) = P^2 * cot(pi/n) / (4n) for real n > 2, extended by 0 on [0, 2].
The extension is continuous at n = 2 (cot(pi/n) -> 0).  On (2, inf)
the function is strictly increasing and strictly concave, which is
what the Jensen-chain audit at the bottom of this module leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def A_of_n(n: float, P: float) -> float:
    """Area of the regular n-gon with perimeter P; 0 for n in [0, 2]."""
    if n < 0 or P <= 0:
        raise DomainError("need n >= 0 and P > 0")
    if n <= 2.0:
        return 0.0
    return P * P / (4.0 * n * math.tan(math.pi / n))


@dataclass(frozen=True)
class ConcavityReport:
    n_lo: float
    n_hi: float
    P: float
    samples: int
    rel_step: float
    all_concave: bool
    all_increasing: bool
    max_second: float  # most positive second difference seen
    min_first: float   # least positive first difference seen


def concavity_report(n_lo: float, n_hi: float, P: float, samples: int = 1200) -> ConcavityReport:
    """Finite-difference scan of A(n) for concavity and monotonicity.

    Central differences with relative step 1e-4 at >= 1000 grid points.
    The step is relative to n so truncation and roundoff stay balanced
    across the whole range.
    """
    if not (2.0 < n_lo < n_hi):
        raise DomainError("need 2 < n_lo < n_hi")
    if P <= 0:
        raise DomainError("perimeter must be positive")
    samples = max(int(samples), 1000)
    rel = 1e-4
    ns = np.linspace(n_lo, n_hi, samples)
    h = rel * ns
    a0 = P * P / (4.0 * (ns - h) * np.tan(np.pi / (ns - h)))
    a1 = P * P / (4.0 * ns * np.tan(np.pi / ns))
    a2 = P * P / (4.0 * (ns + h) * np.tan(np.pi / (ns + h)))
    second = (a0 - 2.0 * a1 + a2) / (h * h)
    first = (a2 - a0) / (2.0 * h)
    return ConcavityReport(
        n_lo=n_lo,
        n_hi=n_hi,
        P=P,
        samples=samples,
        rel_step=rel,
        all_concave=bool(np.all(second < 0.0)),
        all_increasing=bool(np.all(first > 0.0)),
        max_second=float(np.max(second)),
        min_first=float(np.min(first)),
    )


def halving_inequality(n: float, P: float = 1.0) -> bool:
    """A(n) < 2*A(n/2)?  Defined for n >= 6 (so that n/2 is a polygon)."""
    if n < 6:
        raise DomainError("halving comparison needs n >= 6")
    return A_of_n(n, P) < 2.0 * A_of_n(n / 2.0, P)


@dataclass(frozen=True)
class JensenReport:
    counts: tuple
    repaired: tuple
    mean: float
    repaired_mean: float
    hypothesis_ok: bool       # all counts >= 0 and mean <= 6
    repairs: tuple            # (small_value, donor_value) pairs applied
    exhausted: bool           # a small count had no donor >= 6 left
    slack_target: float       # sum A(repaired) - A_target
    slack_jensen: float       # N*A(mean_repaired) - sum A(repaired)
    slack_six: float          # N*A(6) - N*A(mean_repaired)
    chain_holds: bool
    all_six: bool


def jensen_audit(side_counts, P: float, A_target: float) -> JensenReport:
    """Audit of the chain  A_target <= sum A(n_i) <= N*A(mean) <= N*A(6).

    Counts below 2 contribute zero area but drag on the Jensen step, so
    each is repaired by splitting a donor count >= 6 in half:
    {small, d} -> {d/2, d/2}.  The replacement can only increase the
    area sum (A(d) < 2*A(d/2)) and can only decrease the mean, so the
    chain for the repaired multiset implies the original one.  If no
    donor is left, the exhausted flag is set and the chain is still
    evaluated directly on what remains.
    """
    counts = tuple(float(c) for c in side_counts)
    if not counts:
        raise DomainError("need at least one side count")
    for c in counts:
        if c < 0 or not math.isfinite(c):
            raise DomainError("side counts must be nonnegative and finite")
    n = len(counts)
    mean = sum(counts) / n
    hypothesis_ok = mean <= 6.0 + 1e-12

    work = list(counts)
    repairs = []
    exhausted = False
    for i in range(n):
        if work[i] < 2.0:
            donor = None
            for j, c in enumerate(work):
                if c >= 6.0:
                    donor = j
                    break
            if donor is None:
                exhausted = True
                break
            small, d = work[i], work[donor]
            repairs.append((small, d))
            work[donor] = d / 2.0
            work[i] = d / 2.0
    repaired = tuple(work)
    rep_mean = sum(repaired) / n

    # fsum: the all-six multiset must make the chain tight exactly, so the
    # sum of N equal areas has to round identically to N * A_of_n(6, P)
    area_sum = math.fsum(A_of_n(c, P) for c in repaired)
    jensen_rhs = n * A_of_n(max(rep_mean, 0.0), P)
    six_rhs = n * A_of_n(6.0, P)
    scale = max(1.0, six_rhs)
    slack_target = area_sum - A_target
    slack_jensen = jensen_rhs - area_sum
    slack_six = six_rhs - jensen_rhs
    tol = 1e-12 * scale
    if exhausted:
        # with no donors the Jensen step can fail outright (counts
        # stuck below 2 break concavity); the endpoint inequality
        # sum A <= N*A(6) is what still holds, so check it directly
        chain_holds = hypothesis_ok and slack_target >= -tol and (six_rhs - area_sum) >= -tol
    else:
        chain_holds = hypothesis_ok and (
            slack_target >= -tol and slack_jensen >= -tol and slack_six >= -tol
        )
    return JensenReport(
        counts=counts,
        repaired=repaired,
        mean=mean,
        repaired_mean=rep_mean,
        hypothesis_ok=hypothesis_ok,
        repairs=tuple(repairs),
        exhausted=exhausted,
        slack_target=slack_target,
        slack_jensen=slack_jensen,
        slack_six=slack_six,
        chain_holds=chain_holds,
        all_six=all(c == 6.0 for c in counts),
    )
