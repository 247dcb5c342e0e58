"""Reduction of the octant momentum integral to one dimension.

With x = (k_x^2 + k_y^2) d^2 / pi^2 and u = k_z d / pi, the transverse
integral collapses by the substitution t = sqrt(x + u^2) (dx = 2 t dt):

    I(u) = int_0^inf f(sqrt(x + u^2)) / sqrt(x + u^2) dx = 2 int_u^inf f(t) dt

and the one-dimensional summand/integrand of the two-plate comparison is
F(u) = u^2 I(u). Everything here is dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import quadrature
from .constants import PlateGeometry
from .distributions import DistributionSpec, Family
from .errors import DomainError, SingularityError

__all__ = [
    "ModeGrid",
    "ReducedIntegrand",
    "reduce_distribution",
    "inner_integral",
    "reduced_big_f",
    "mode_density_factor",
]

# f is treated as negligible 50/sharpness past the cutoff: exp(-50) ~ 2e-22.
_TAIL_DECADES = 50.0
# Half-width of the exclusion window around the Bose-Einstein pole.
_POLE_WINDOW = 1e-6

_EXP_CLAMP = 700.0

_MODE_DENSITY = 1.0 / math.pi**3


@dataclass(frozen=True)
class ModeGrid:
    """Standing-wave mode ladder between the plates."""

    geometry: PlateGeometry

    @property
    def mode_spacing(self) -> tuple[float, float, float]:
        """Spacing (dk_x, dk_y, dk_z) of admissible wavevectors, in 1/m."""
        g = self.geometry
        return (math.pi / g.lateral_size_l, math.pi / g.lateral_size_l, math.pi / g.separation_d)


def mode_density_factor(grid: ModeGrid | None = None) -> float:
    """Density of octant modes per dimensionless k-space volume: 1/pi^3.

    Geometry independent; the grid argument documents provenance only.
    """
    return _MODE_DENSITY


def _scalar_f(spec: DistributionSpec) -> Callable[[float], float]:
    """Fast scalar occupancy closure for quadrature callbacks.

    Defined for all real t (the smooth formulas extend analytically left of
    zero, which boundary derivative stencils rely on).
    """
    lam = spec.cutoff
    fam = spec.family
    if fam is Family.SHARP_CUTOFF:
        def f(t: float) -> float:
            if t < lam:
                return 1.0
            return 0.0 if t > lam else 0.5
        return f
    b = spec.sharpness
    if fam is Family.FERMI_DIRAC:
        def f(t: float) -> float:
            z = b * (t - lam)
            if z >= 0.0:
                e = math.exp(-z) if z < _EXP_CLAMP else 0.0
                return e / (1.0 + e)
            return 1.0 / (1.0 + math.exp(z))
        return f
    if fam is Family.MAXWELL_BOLTZMANN:
        def f(t: float) -> float:
            return math.exp(min(b * (lam - t), _EXP_CLAMP))
        return f
    # Bose-Einstein; pole handled by the integration drivers.
    def f(t: float) -> float:
        z = b * (t - lam)
        if z > _EXP_CLAMP:
            return 0.0
        d = math.expm1(z)
        if d == 0.0:
            raise SingularityError(
                f"Bose-Einstein occupancy diverges at u = {lam!r}", pole_location=lam
            )
        return 1.0 / d
    return f


def _upper_limit(spec: DistributionSpec, u: float) -> float:
    if spec.family is Family.SHARP_CUTOFF:
        return spec.cutoff
    return max(u, spec.cutoff) + _TAIL_DECADES / spec.sharpness


def _guard_be_pole(spec: DistributionSpec, lo: float, hi: float) -> None:
    lam = spec.cutoff
    if spec.family is Family.BOSE_EINSTEIN and lo < lam + _POLE_WINDOW and hi > lam - _POLE_WINDOW:
        raise SingularityError(
            f"integration range [{lo!r}, {hi!r}] crosses the Bose-Einstein pole",
            pole_location=lam,
        )


class _Counter:
    __slots__ = ("f_evals", "big_f_evals")

    def __init__(self):
        self.f_evals = 0
        self.big_f_evals = 0


class ReducedIntegrand:
    """Evaluator for F(u) = u^2 I(u) plus the numeric hints the engines need.

    Spec-backed instances (see reduce_distribution) evaluate I by adaptive
    quadrature of the occupancy. For |u| below half the cutoff the value is
    assembled as I(0) - 2 int_0^u f against one cached anchor I(0), so the
    anchor's quadrature error is a common factor of u^2 and cancels exactly
    out of odd-derivative boundary stencils. Arguments slightly below zero
    are permitted on spec-backed instances (analytic extension of f).

    Synthetic instances (from_function) carry an arbitrary F for engine-level
    tests; their inner integral is undefined unless supplied.

    Instances count work: f_evaluations (occupancy calls inside quadratures)
    and big_f_evaluations. Counters are cumulative; engines snapshot deltas.
    """

    def __init__(
        self,
        *,
        spec: DistributionSpec | None = None,
        big_f_func: Callable[[float], float] | None = None,
        inner_func: Callable[[float], float] | None = None,
        rel_tol: float = 1e-10,
        knee: float | None = None,
        decay_rate: float | None = None,
        support_end: float | None = None,
    ):
        if (spec is None) == (big_f_func is None):
            raise DomainError("provide exactly one of spec or big_f_func")
        if not 0.0 < rel_tol <= 1e-6:
            raise DomainError(f"rel_tol must lie in (0, 1e-6], got {rel_tol!r}")
        self.spec = spec
        self.rel_tol = rel_tol
        self._counter = _Counter()
        self._big_f_func = big_f_func
        self._inner_func = inner_func
        self._anchor: float | None = None
        if spec is not None:
            self.knee = spec.cutoff
            self.decay_rate = None if spec.family is Family.SHARP_CUTOFF else spec.sharpness
            self.support_end = spec.cutoff if spec.family is Family.SHARP_CUTOFF else None
            raw = _scalar_f(spec)
            counter = self._counter

            def counted(t: float) -> float:
                counter.f_evals += 1
                return raw(t)

            self._f = counted
            self._anchor_window = 0.5 * spec.cutoff
        else:
            self.knee = knee
            self.decay_rate = decay_rate
            self.support_end = support_end
            self._f = None
            self._anchor_window = 0.0

    @classmethod
    def from_function(
        cls,
        big_f_func: Callable[[float], float],
        *,
        inner_func: Callable[[float], float] | None = None,
        knee: float | None = None,
        decay_rate: float | None = None,
        support_end: float | None = None,
    ) -> "ReducedIntegrand":
        return cls(
            big_f_func=big_f_func,
            inner_func=inner_func,
            knee=knee,
            decay_rate=decay_rate,
            support_end=support_end,
        )

    # -- work counters -------------------------------------------------

    @property
    def f_evaluations(self) -> int:
        return self._counter.f_evals

    @property
    def big_f_evaluations(self) -> int:
        return self._counter.big_f_evals

    # -- evaluation ----------------------------------------------------

    def _i0(self) -> float:
        # Benign race under threads: recomputation yields the same value.
        if self._anchor is None:
            spec = self.spec
            hi = _upper_limit(spec, 0.0)
            _guard_be_pole(spec, 0.0, hi)
            pts = [spec.cutoff] if 0.0 < spec.cutoff < hi else None
            q = quadrature.integrate(self._f, 0.0, hi, rel_tol=self.rel_tol, points=pts)
            self._anchor = 2.0 * q.value
        return self._anchor

    def inner(self, u: float) -> float:
        """I(u) = 2 int_u^inf f(t) dt."""
        if self.spec is None:
            if self._inner_func is None:
                raise DomainError("inner integral undefined for a synthetic integrand")
            return self._inner_func(u)
        spec = self.spec
        if u <= self._anchor_window:
            # Anchored short-range form; exact rewrite of the defining integral.
            head = quadrature.integrate(self._f, 0.0, u, rel_tol=self.rel_tol)
            return self._i0() - 2.0 * head.value
        hi = _upper_limit(spec, u)
        if u >= hi:
            return 0.0
        _guard_be_pole(spec, u, hi)
        pts = [spec.cutoff] if u < spec.cutoff < hi else None
        q = quadrature.integrate(self._f, u, hi, rel_tol=self.rel_tol, points=pts)
        return 2.0 * q.value

    def big_f(self, u: float) -> float:
        """F(u) = u^2 I(u); exactly zero at u = 0."""
        self._counter.big_f_evals += 1
        if self.spec is None:
            return self._big_f_func(u)
        if u == 0.0:
            return 0.0
        return u * u * self.inner(u)

    # -- engine hints ----------------------------------------------------

    def default_n_max(self) -> int | None:
        """Series length covering the occupied range plus the decaying tail."""
        if self.spec is None:
            return None
        if self.spec.family is Family.SHARP_CUTOFF:
            return max(1, math.ceil(self.spec.cutoff))
        return max(1, math.ceil(self.spec.cutoff + _TAIL_DECADES / self.spec.sharpness))

    def tail_bound(self, n_max: int) -> float:
        """Bound on the neglected series tail plus integral tail past n_max."""
        edge = abs(self.big_f(float(n_max)))
        if self.decay_rate is not None:
            b = self.decay_rate
            # Geometric series bound and exponential integral bound, with
            # headroom for the slowly growing u^2 factor.
            return 2.0 * edge * (1.0 / math.expm1(b) + 1.0 / b)
        if self.support_end is not None and n_max >= self.support_end:
            return 0.0
        return edge

    def tightened(self, rel_tol: float) -> "ReducedIntegrand":
        """Same integrand at a tighter quadrature tolerance (fresh counters)."""
        if self.spec is None or rel_tol >= self.rel_tol:
            return self
        return ReducedIntegrand(spec=self.spec, rel_tol=rel_tol)


def reduce_distribution(spec: DistributionSpec, rel_tol: float = 1e-10) -> ReducedIntegrand:
    """Build the reduced one-dimensional integrand for a distribution."""
    return ReducedIntegrand(spec=spec, rel_tol=rel_tol)


def inner_integral(spec: DistributionSpec, u: float, rel_tol: float = 1e-10) -> float:
    """I(u) = 2 int_u^inf f(t) dt by adaptive quadrature.

    The upper limit is truncated where f has decayed below ~1e-22 of its
    cutoff-plateau scale (or at the sharp support edge, where the closed form
    is the constant-occupancy area). Raises SingularityError when the range
    crosses the Bose-Einstein pole, DomainError for u < 0.
    """
    if u < 0.0:
        raise DomainError(f"u must be nonnegative, got {u!r}")
    f = _scalar_f(spec)
    hi = _upper_limit(spec, u)
    if u >= hi:
        return 0.0
    _guard_be_pole(spec, u, hi)
    pts = [spec.cutoff] if u < spec.cutoff < hi else None
    q = quadrature.integrate(f, u, hi, rel_tol=rel_tol, points=pts)
    return 2.0 * q.value


def reduced_big_f(spec: DistributionSpec, u: float, rel_tol: float = 1e-10) -> float:
    """F(u) = u^2 I(u); the one-dimensional summand of the mode comparison."""
    if u < 0.0:
        raise DomainError(f"u must be nonnegative, got {u!r}")
    if u == 0.0:
        return 0.0
    return u * u * inner_integral(spec, u, rel_tol=rel_tol)
