"""Combinatorial tiling conditions.

Nothing here touches coordinates: angle-combination enumeration at a
declared tolerance, the two tiling predicates (all-coefficients >= 2
with equal parity; every angle triple completable to 2*pi), scalene
witness sampling, and Euler-characteristic / vertex-degree audits of
abstract tiling graphs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .core import EPS_ANGLE
from .errors import ConstructionError, DataError, DomainError, InfeasibleError

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ComboSolution:
    """Nonnegative integer coefficients with sum(k_i * theta_i) ~ 2*pi."""

    coefficients: tuple
    residual: float


def angle_combinations(angles, tolerance: float = 1e-9):
    """All nonnegative integer vectors k with |sum k_i*theta_i - 2*pi| <= tolerance.

    Enumeration is exhaustive up to k_i <= floor((2*pi + tol)/min(theta));
    results are sorted lexicographically by coefficients.
    """
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    ths = [float(a) for a in angles]
    if not ths:
        raise DomainError("need at least one angle")
    for a in ths:
        if not (a > 0 and math.isfinite(a)):
            raise DomainError("angles must be positive and finite")
    out = []
    last = len(ths) - 1

    def rec(i, remaining, prefix):
        th = ths[i]
        if i == last:
            k0 = int(math.floor(remaining / th + 0.5))
            for k in (k0 - 1, k0, k0 + 1):
                if k >= 0 and abs(remaining - k * th) <= tolerance:
                    out.append(ComboSolution(prefix + (k,), abs(remaining - k * th)))
            return
        k = 0
        while k * th <= remaining + tolerance:
            rec(i + 1, remaining - k * th, prefix + (k,))
            k += 1

    rec(0, _TWO_PI, ())
    # the staggered last-angle window can in principle emit duplicates
    seen, unique = set(), []
    for sol in sorted(out, key=lambda s: s.coefficients):
        if sol.coefficients not in seen:
            seen.add(sol.coefficients)
            unique.append(sol)
    return unique


def angle_combinations_rational(pi_multiples):
    """Exact enumeration for angles given as Fractions of pi.

    sum k_i * (p_i/q_i) * pi = 2*pi is solved in exact rational
    arithmetic; the float tolerance question disappears.
    """
    fracs = [Fraction(f) for f in pi_multiples]
    for f in fracs:
        if f <= 0:
            raise DomainError("angles must be positive")
    out = []
    last = len(fracs) - 1
    target = Fraction(2)

    def rec(i, remaining, prefix):
        f = fracs[i]
        if i == last:
            k, rem = divmod(remaining, f)
            if rem == 0 and k >= 0:
                out.append(ComboSolution(prefix + (int(k),), 0.0))
            return
        k = 0
        while k * f <= remaining:
            rec(i + 1, remaining - k * f, prefix + (k,))
            k += 1

    rec(0, target, ())
    return sorted(out, key=lambda s: s.coefficients)


def _coeffs(solution):
    if isinstance(solution, ComboSolution):
        return solution.coefficients
    return tuple(solution)


def gs_condition(solutions):
    """Goodman-Strauss test on an angle-combination solution set.

    The hypothesis wants exactly one solution; with zero or several the
    answer is indeterminate and None is returned.  With one: True iff
    every coefficient is >= 2 and all share parity.
    """
    sols = [_coeffs(s) for s in solutions]
    if len(sols) != 1:
        return None
    ks = sols[0]
    if any(k < 2 for k in ks):
        return False
    parities = {k % 2 for k in ks}
    return len(parities) == 1


def regular_tiles(theta: float) -> bool:
    """True iff theta divides 2*pi (within 1e-9 relative)."""
    if not (0.0 < theta < math.pi):
        raise DomainError("angle must lie in (0, pi)")
    q = _TWO_PI / theta
    return abs(q - round(q)) <= 1e-9 * q


def _completion_exists(angles, target, tolerance):
    """Is there a nonnegative integer combination of angles summing to target?"""
    if target < -tolerance:
        return False
    ths = sorted(angles, reverse=True)
    last = len(ths) - 1

    def rec(i, remaining):
        th = ths[i]
        if i == last:
            k0 = int(math.floor(remaining / th + 0.5))
            for k in (k0 - 1, k0, k0 + 1):
                if k >= 0 and abs(remaining - k * th) <= tolerance:
                    return True
            return False
        k = 0
        while k * th <= remaining + tolerance:
            if rec(i + 1, remaining - k * th):
                return True
            k += 1
        return False

    return rec(0, target)


def margulis_check(angles, tolerance: float = 1e-9) -> bool:
    """Every triple of the given angles extends to a multiset summing to 2*pi.

    Requires at least 4 angles, all <= pi/2 (+ EPS_ANGLE); returns
    False otherwise rather than raising, since "fails the hypothesis"
    is the useful answer for a tile's angle list.
    """
    ths = [float(a) for a in angles]
    if len(ths) < 4:
        return False
    if any(a <= 0 or a > 0.5 * math.pi + EPS_ANGLE for a in ths):
        return False
    # distinct values are what matter for both triples and completions
    values = []
    for a in sorted(ths):
        if not values or a - values[-1] > 1e-12:
            values.append(a)
    triples = set()
    m = len(values)
    for i in range(m):
        for j in range(i, m):
            for k in range(j, m):
                triples.add((values[i], values[j], values[k]))
    for tri in triples:
        if not _completion_exists(values, _TWO_PI - sum(tri), tolerance):
            return False
    return True


def scalene_witness(k, seed: int = 0, budget: int = 10**5):
    """Random scalene angle triple realizing sum(k_i*theta_i) = 2*pi uniquely.

    The plane meets the open region {theta_i > 0, sum < pi} iff some
    k_i >= 3 (with max k_i <= 2 the combination tops out below 2*pi).
    Candidates are drawn on the plane, rejected unless they are
    scalene (pairwise gaps > 1e-6), hyperbolic, and pass the
    angle_combinations recheck with k as the single solution.
    """
    ks = tuple(int(x) for x in k)
    if len(ks) != 3 or any(x < 0 for x in ks):
        raise DomainError("need a triple of nonnegative integers")
    if max(ks, default=0) < 3:
        raise InfeasibleError(
            f"plane sum(k_i*theta_i)=2*pi with k={ks} does not meet the open "
            "region sum(theta) < pi: need some k_i >= 3"
        )
    rng = Random(seed)
    for _ in range(budget):
        u = [rng.uniform(0.05, 1.0) for _ in range(3)]
        s = sum(ki * ui for ki, ui in zip(ks, u))
        th = tuple(_TWO_PI * ui / s for ui in u)
        if sum(th) >= math.pi - 1e-9:
            continue
        if any(t <= 1e-6 for t in th):
            continue
        gaps = (abs(th[0] - th[1]), abs(th[0] - th[2]), abs(th[1] - th[2]))
        if min(gaps) <= 1e-6:
            continue
        sols = angle_combinations(th, tolerance=1e-9)
        if len(sols) == 1 and sols[0].coefficients == ks:
            return th
    raise ConstructionError(f"no witness for k={ks} within {budget} samples (seed {seed})")


# ---------------------------------------------------------------------------
# tiling graphs


@dataclass(frozen=True)
class Face:
    sides: int
    angle_labels: tuple = None  # entries: "convex" | "pi" | "reflex"


@dataclass(frozen=True)
class TilingGraph:
    """Pure combinatorics of a tiling of a closed surface."""

    chi: int
    faces: tuple
    vertex_degrees: tuple
    edges: int

    def validate(self):
        f = len(self.faces)
        v = len(self.vertex_degrees)
        side_sum = sum(face.sides for face in self.faces)
        deg_sum = sum(self.vertex_degrees)
        if side_sum != 2 * self.edges:
            raise DataError(f"face sides sum to {side_sum}, expected 2E = {2 * self.edges}")
        if deg_sum != 2 * self.edges:
            raise DataError(f"vertex degrees sum to {deg_sum}, expected 2E = {2 * self.edges}")
        if f - self.edges + v != self.chi:
            raise DataError(
                f"Euler characteristic mismatch: F-E+V = {f - self.edges + v}, declared chi = {self.chi}"
            )
        for face in self.faces:
            if face.angle_labels is not None and len(face.angle_labels) != face.sides:
                raise DataError("angle label count differs from side count")


@dataclass(frozen=True)
class DegreeAudit:
    vbar: float
    k: int
    l1: int
    l2: int
    bound_satisfied: bool
    equality: bool
    applicability: str  # "hyperbolic" | "euclidean" | "inapplicable"
    face_bound_satisfied: bool


def degree_audit(g: TilingGraph, k: int) -> DegreeAudit:
    """Average-degree bookkeeping for a tiling graph.

    vbar is the average number of degree->=3 vertex slots per face,
    i.e. sum of deg(v) over vertices of degree >= 3, divided by F.
    For chi < 0 the bound checked is vbar <= k; for chi = 0 it is the
    Euclidean vbar <= 6; for chi > 0 neither applies.  The equality
    flag records whether every vertex has degree 2 or 3, which is the
    regime where vbar actually attains the bound.  Per-face labels, if
    present, are checked against l1 + 2*l2 >= n - k.
    """
    g.validate()
    f = len(g.faces)
    heavy = sum(d for d in g.vertex_degrees if d >= 3)
    vbar = heavy / f
    equality = all(d in (2, 3) for d in g.vertex_degrees)
    l1 = l2 = 0
    face_ok = True
    for face in g.faces:
        if face.angle_labels is None:
            continue
        f1 = sum(1 for lab in face.angle_labels if lab == "pi")
        f2 = sum(1 for lab in face.angle_labels if lab == "reflex")
        l1 += f1
        l2 += f2
        if f1 + 2 * f2 < face.sides - k:
            face_ok = False
    if g.chi < 0:
        applicability = "hyperbolic"
        bound = vbar <= k + 1e-12
    elif g.chi == 0:
        applicability = "euclidean"
        bound = vbar <= 6 + 1e-12
    else:
        applicability = "inapplicable"
        bound = False
    return DegreeAudit(vbar, k, l1, l2, bound and face_ok, equality, applicability, face_ok)


def klein_quartic() -> TilingGraph:
    """24 heptagons, three around every vertex: E = 84, V = 56, chi = -4."""
    return TilingGraph(
        chi=-4,
        faces=tuple(Face(7) for _ in range(24)),
        vertex_degrees=tuple(3 for _ in range(56)),
        edges=84,
    )


def square_torus(width: int = 4) -> TilingGraph:
    """width^2 squares on the flat torus: every vertex degree 4, chi = 0."""
    f = width * width
    return TilingGraph(
        chi=0,
        faces=tuple(Face(4) for _ in range(f)),
        vertex_degrees=tuple(4 for _ in range(f)),
        edges=2 * f,
    )


def graph_to_json(g: TilingGraph) -> dict:
    faces = []
    for face in g.faces:
        d = {"sides": face.sides}
        if face.angle_labels is not None:
            d["angle_labels"] = list(face.angle_labels)
        faces.append(d)
    return {
        "chi": g.chi,
        "faces": faces,
        "vertices": [{"degree": d} for d in g.vertex_degrees],
        "edges": g.edges,
    }


def graph_from_json(obj) -> TilingGraph:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise DataError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise DataError("tiling graph JSON must be an object")
    try:
        chi = int(obj["chi"])
        edges = int(obj["edges"])
        faces = []
        for fd in obj["faces"]:
            labels = fd.get("angle_labels")
            faces.append(Face(int(fd["sides"]), tuple(labels) if labels is not None else None))
        degrees = tuple(int(vd["degree"]) for vd in obj["vertices"])
    except (KeyError, TypeError, ValueError) as e:
        raise DataError(f"malformed tiling graph JSON: {e}") from None
    g = TilingGraph(chi, tuple(faces), degrees, edges)
    g.validate()
    return g
