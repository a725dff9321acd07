"""Real branches of the deformed Lambert function of order q.

Solves w * exp_q(q, w) = z for w.  The defining function
f(w) = w * exp_q(q, w) has derivative f'(w) = exp_q(w)^q (1 + (2-q) w)
on the positivity domain of exp_q, so for q < 2 it attains a minimum at

    w_b = 1/(q - 2),        z_b = f(w_b) = exp_q(w_b)/(q - 2),

which is the branch point splitting two real inverse branches:

* Upper: w >= w_b, defined on [z_b, inf).
* Lower: w <= w_b, defined on [z_b, 0).  For q < 1 it terminates at the
  finite wall w = 1/(q-1) where exp_q hits its cutoff zero and z -> 0-;
  for 1 <= q < 2 it runs to w -> -inf.

At q = 2 the candidate w_b escapes to -inf and f(w) = w/(1-w) is strictly
increasing with image (-1, inf): a single branch, no finite branch point.
For q > 2 the formula's w_b = 1/(q-2) lands outside the positivity domain
(w_b > 1/(q-1)), f is strictly increasing over all of it, and the image is
the whole real line.  branch_point therefore returns None for every q >= 2
and the lower branch exists exactly when q < 2.

The solver brackets the root, bisects to a short interval, then runs
Newton steps that are rejected in favour of bisection whenever they would
leave the bracket.  Convergence is declared on the scaled residual
|f(w) - z| <= tol * max(1, |z|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import (ConfigurationError, ConvergenceError, DerivativeSingularError,
                     DomainError, MalformedInputError, NoBranchPointError)
from .qexp import Q_COLLAPSE_TOL, exp_q

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
    "Branch",
    "BranchPoint",
    "SolveResult",
    "Interval",
    "branch_point",
    "branch_domain",
    "wq",
    "dwq_dz",
    "wq_closed_form",
]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200


class Branch(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class BranchPoint:
    z_b: float
    w_b: float


@dataclass(frozen=True)
class SolveResult:
    w: float
    branch: Branch
    residual: float
    iterations: int


@dataclass(frozen=True)
class Interval:
    """Real interval with individually open or closed endpoints."""

    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool

    @classmethod
    def empty(cls) -> "Interval":
        return cls(math.inf, -math.inf, False, False)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def contains(self, z: float) -> bool:
        if self.is_empty:
            return False
        above = z >= self.lo if self.lo_closed else z > self.lo
        below = z <= self.hi if self.hi_closed else z < self.hi
        return above and below

    def __str__(self) -> str:
        if self.is_empty:
            return "(empty)"
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{self.lo:g}, {self.hi:g}{rb}"


def _require_finite(name: str, v: float) -> float:
    v = float(v)
    if not math.isfinite(v):
        raise MalformedInputError(f"{name} must be a finite real, got {v!r}")
    return v


def _f(q: float, w: float) -> float:
    """Defining function w * exp_q(q, w)."""
    return w * exp_q(q, w)


def _f_prime(q: float, w: float) -> float:
    """f'(w) = exp_q(w)^q * (1 + (2-q) w) inside the positivity domain."""
    if abs(q - 1.0) <= Q_COLLAPSE_TOL:
        try:
            return math.exp(w) * (1.0 + w)
        except OverflowError:
            return math.inf if w > -1.0 else -math.inf
    u = (1.0 - q) * w
    if 1.0 + u <= 0.0:
        return math.nan  # outside the positivity domain; caller falls back to bisection
    try:
        epow = math.exp((q / (1.0 - q)) * math.log1p(u))
    except OverflowError:
        epow = math.inf
    return epow * (1.0 + (2.0 - q) * w)


def branch_point(q: float) -> BranchPoint | None:
    """Branch point (z_b, w_b) for q < 2; None for q >= 2.

    At q = 2 no finite branch point exists, and for q > 2 the stationary
    point of the formula falls outside the positivity domain of exp_q.
    """
    q = _require_finite("q", q)
    if q >= 2.0:
        return None
    w_b = 1.0 / (q - 2.0)
    return BranchPoint(z_b=_f(q, w_b), w_b=w_b)


def branch_domain(q: float, branch: Branch = Branch.UPPER) -> Interval:
    """Set of z for which the branch has a real value."""
    q = _require_finite("q", q)
    branch = Branch(branch)
    bp = branch_point(q)
    if branch is Branch.UPPER:
        if bp is not None:
            return Interval(bp.z_b, math.inf, True, False)
        if q == 2.0:
            # f(w) = w/(1-w) increases from the limit -1 at w -> -inf
            return Interval(-1.0, math.inf, False, False)
        # q > 2: image of the strictly increasing f is the whole line
        return Interval(-math.inf, math.inf, False, False)
    if bp is not None:
        return Interval(bp.z_b, 0.0, True, False)
    return Interval.empty()


def _grow_offsets() -> Iterator[float]:
    """1, 2, 4, ..., 2^30, then repeated squaring; covers ~1e288 in ~40 terms."""
    d = 1.0
    while math.isfinite(d):
        yield d
        d = d * 2.0 if d < 2.0 ** 30 else d * d


def _approach_fractions() -> Iterator[float]:
    """1/2, 1/4, ..., 2^-30, then repeated squaring down to underflow."""
    t = 0.5
    while t > 0.0:
        yield t
        t = t * 0.5 if t > 2.0 ** -30 else t * t


def _march(q: float, z: float, fixed: float, g_fixed: float, cands: Iterator[float],
           fixed_is_left: bool):
    """Walk candidates away from the fixed bracket end until g changes sign.

    Failed candidates tighten the moving end (the root lies beyond them).
    Returns (lo, hi, g_lo, g_hi) ordered lo < hi.
    """
    want_nonneg = g_fixed < 0.0  # looking for the opposite sign
    near, g_near = fixed, g_fixed
    for cand in cands:
        if fixed_is_left and cand <= near:
            continue
        if not fixed_is_left and cand >= near:
            continue
        g = _f(q, cand) - z
        found = (g >= 0.0) if want_nonneg else (g <= 0.0)
        if found:
            if fixed_is_left:
                return near, cand, g_near, g
            return cand, near, g, g_near
        near, g_near = cand, g
    raise ConvergenceError(
        f"could not bracket a {'root right of' if fixed_is_left else 'root left of'} "
        f"w = {fixed!r} for q = {q:g}, z = {z!r} (value not reachable in double precision)",
        best_w=near, residual=abs(g_near), iterations=0)


def _bracket(q: float, z: float, branch: Branch):
    """Initial sign-changing bracket (lo, hi, g_lo, g_hi); assumes z in domain."""
    bp = branch_point(q)
    if branch is Branch.LOWER:
        # f decreases left of w_b; g(w_b) = z_b - z <= 0
        g_wb = bp.z_b - z
        if q < 1.0:
            # finite wall where exp_q cuts off: f(wall) = wall * 0 = 0 exactly,
            # so g(wall) = -z > 0 for the z < 0 of this branch
            wall = 1.0 / (q - 1.0)
            return wall, bp.w_b, -z, g_wb
        cands = (bp.w_b - d for d in _grow_offsets())
        return _march(q, z, bp.w_b, g_wb, cands, fixed_is_left=False)
    if bp is not None:
        # g(w_b) = z_b - z <= 0; march right, capped by the wall when q > 1
        g_wb = bp.z_b - z
        if q > 1.0:
            wall = 1.0 / (q - 1.0)
            span = wall - bp.w_b
            cands = (wall - span * t for t in _approach_fractions())
        else:
            cands = (bp.w_b + d for d in _grow_offsets())
        return _march(q, z, bp.w_b, g_wb, cands, fixed_is_left=True)
    # q >= 2: single increasing branch through f(0) = 0; z != 0 here
    g0 = -z
    if z > 0.0:
        wall = 1.0 / (q - 1.0)
        cands = (wall * (1.0 - t) for t in _approach_fractions())
        return _march(q, z, 0.0, g0, cands, fixed_is_left=True)
    cands = (-d for d in _grow_offsets())
    return _march(q, z, 0.0, g0, cands, fixed_is_left=False)


def _midpoint(lo: float, hi: float) -> float:
    """Arithmetic midpoint, except geometric when the endpoints share a sign
    and differ by many orders of magnitude.  Flat branch tails put the root
    hundreds of decades from the bracket ends; halving the exponent gap gets
    there in tens of steps where linear bisection needs hundreds.  sqrt is
    taken per endpoint so the product cannot overflow.
    """
    if lo * hi > 0.0 and (abs(hi) > 1e6 * abs(lo) or abs(lo) > 1e6 * abs(hi)):
        return math.copysign(math.sqrt(abs(lo)) * math.sqrt(abs(hi)), lo)
    return 0.5 * (lo + hi)


def wq(q: float, z: float, branch: Branch = Branch.UPPER,
       tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SolveResult:
    """Solve w * exp_q(q, w) = z on the requested branch.

    Bracketed bisection down to width max(1e-3, 1e-9 |w|), then Newton with
    every step that would exit the bracket replaced by a bisection step.
    Raises DomainError outside the branch domain, NoBranchPointError for a
    lower-branch request at q >= 2, ConvergenceError (with the best iterate)
    if the scaled residual target is not met within max_iter refinements.
    """
    q = _require_finite("q", q)
    z = _require_finite("z", z)
    branch = Branch(branch)
    if not (math.isfinite(tol) and tol > 0.0):
        raise ConfigurationError(f"tol must be a positive finite real, got {tol!r}")
    if max_iter < 1:
        raise ConfigurationError(f"max_iter must be >= 1, got {max_iter!r}")

    if branch is Branch.LOWER and branch_point(q) is None:
        raise NoBranchPointError(
            f"no lower branch for q = {q:g}: the branch point exists only for q < 2")
    dom = branch_domain(q, branch)
    if not dom.contains(z):
        raise DomainError(
            f"z = {z!r} is outside the {branch.value}-branch domain {dom} for q = {q:g}")
    if branch is Branch.UPPER and z == 0.0:
        return SolveResult(0.0, branch, 0.0, 0)
    bp = branch_point(q)
    if bp is not None and z == bp.z_b:
        # both branches meet here; z_b is defined as f(w_b), so the residual
        # is exactly zero and marching would never see a sign change
        return SolveResult(bp.w_b, branch, 0.0, 0)

    lo, hi, g_lo, g_hi = _bracket(q, z, branch)
    if g_lo == 0.0:
        return SolveResult(lo, branch, 0.0, 0)
    if g_hi == 0.0:
        return SolveResult(hi, branch, 0.0, 0)

    scale = max(1.0, abs(z))
    neg_at_lo = g_lo < 0.0
    best_w, best_g = (lo, abs(g_lo)) if abs(g_lo) <= abs(g_hi) else (hi, abs(g_hi))
    iters = 0

    # Phase 1: plain bisection to a short interval.  The width target is
    # relative to the current endpoints, so on a many-decades bracket it can
    # recede as fast as the width shrinks; the residual check and the
    # iteration cap below keep that from starving Newton.
    phase1_cap = max_iter // 2 + 1
    phase1 = 0
    while iters < max_iter and phase1 < phase1_cap:
        if hi - lo <= max(1e-3, 1e-9 * max(1.0, abs(lo), abs(hi))):
            break
        mid = _midpoint(lo, hi)
        if not (lo < mid < hi):
            break
        g = _f(q, mid) - z
        iters += 1
        phase1 += 1
        ag = abs(g)
        if ag < best_g:
            best_w, best_g = mid, ag
        if ag <= tol * scale:
            return SolveResult(mid, branch, ag, iters)
        if (g < 0.0) == neg_at_lo:
            lo = mid
        else:
            hi = mid

    # Phase 2: Newton, safeguarded by the live bracket
    w = _midpoint(lo, hi)
    while iters < max_iter:
        g = _f(q, w) - z
        iters += 1
        ag = abs(g)
        if ag < best_g:
            best_w, best_g = w, ag
        if ag <= tol * scale:
            return SolveResult(w, branch, ag, iters)
        if (g < 0.0) == neg_at_lo:
            lo = w
        else:
            hi = w
        cand = None
        gp = _f_prime(q, w)
        if math.isfinite(g) and math.isfinite(gp) and gp != 0.0:
            step = w - g / gp
            if lo < step < hi:
                cand = step
        if cand is None:
            cand = _midpoint(lo, hi)
        if cand == w:
            cand = _midpoint(lo, hi)
            if cand == w:
                break  # bracket collapsed to ulp width without reaching tol
        w = cand

    raise ConvergenceError(
        f"no convergence to tol {tol:g} within {max_iter} iterations for "
        f"q = {q:g}, z = {z!r} ({branch.value} branch); best w = {best_w!r}, "
        f"residual = {best_g:.3e}",
        best_w=best_w, residual=best_g, iterations=iters)


def dwq_dz(q: float, z: float, branch: Branch = Branch.UPPER,
           tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """Derivative of the branch at z, via the closed form

        dW/dz = -[(1-q) W + 1]^(q/(q-1)) / ((q-2) W - 1)

    with the classical limit e^(-W)/(1+W) inside the q -> 1 collapse
    tolerance.  Diverges (vertical tangent) at the branch point.
    """
    q = _require_finite("q", q)
    z = _require_finite("z", z)
    bp = branch_point(q)
    if bp is not None and z == bp.z_b:
        raise DerivativeSingularError(
            f"dW/dz diverges at the branch point z_b = {bp.z_b!r} for q = {q:g}")
    w = wq(q, z, branch, tol, max_iter).w
    if abs(q - 1.0) <= Q_COLLAPSE_TOL:
        den = 1.0 + w
        if den == 0.0:
            raise DerivativeSingularError(f"dW/dz diverges at w = -1 (q = {q:g})")
        return math.exp(-w) / den
    den = (q - 2.0) * w - 1.0
    if den == 0.0:
        raise DerivativeSingularError(f"dW/dz diverges at w = {w!r} (q = {q:g})")
    base = (1.0 - q) * w + 1.0
    if base <= 0.0:
        raise DomainError(
            f"derivative undefined: 1 + (1-q) w = {base!r} outside the positivity domain")
    try:
        num = math.exp((q / (q - 1.0)) * math.log(base))
    except OverflowError:
        num = math.inf
    return -num / den


def wq_closed_form(q: float, z: float, branch: Branch = Branch.UPPER) -> float | None:
    """Closed-form branch values where they exist; None elsewhere.

    q = 2: W(z) = z/(1+z) on z > -1 (single branch).
    q = 0: the defining equation is the quadratic w (1 + w) = z, giving
           (-1 + sqrt(1+4z))/2 upper and (-1 - sqrt(1+4z))/2 lower; the
           lower form is real on this branch only for z in [-1/4, 0).
    Used as an independent oracle against the iterative solver.
    """
    q = _require_finite("q", q)
    z = _require_finite("z", z)
    branch = Branch(branch)
    if q == 2.0:
        if branch is Branch.UPPER and z > -1.0:
            return z / (1.0 + z)
        return None
    if q == 0.0:
        disc = 1.0 + 4.0 * z
        if disc < 0.0:
            return None
        root = math.sqrt(disc)
        if branch is Branch.UPPER:
            return 0.5 * (-1.0 + root)
        if z < 0.0:
            return 0.5 * (-1.0 - root)
        return None
    return None
