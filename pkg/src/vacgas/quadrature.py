"""Adaptive quadrature wrapper used by the reduction and summation modules.

Thin layer over scipy's QUADPACK bindings: relative-tolerance interface,
optional interior break points, evaluation counting, and a uniform error
policy (ConvergenceError when the estimate cannot be trusted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy import integrate as _scipy_integrate

from .errors import ConvergenceError

__all__ = ["QuadResult", "integrate"]


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float         # absolute error estimate
    evaluations: int


def integrate(
    func: Callable[[float], float],
    a: float,
    b: float,
    *,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    points: list[float] | None = None,
    limit: int = 200,
) -> QuadResult:
    """Integrate func over [a, b] adaptively.

    points lists interior abscissae that must become panel boundaries (knees,
    kinks). Infinite limits are allowed only without break points. A QUADPACK
    warning is tolerated when the reported error still meets a loose multiple
    of the request; otherwise ConvergenceError.
    """
    if points:
        pts = sorted(p for p in points if a < p < b)
    else:
        pts = None
    out = _scipy_integrate.quad(
        func,
        a,
        b,
        epsabs=abs_tol,
        epsrel=rel_tol,
        limit=limit,
        points=pts if pts else None,
        full_output=1,
    )
    value, abserr, info = out[0], out[1], out[2]
    neval = int(info.get("neval", 0))
    if len(out) > 3:
        # Warning path: accept if the self-reported error is still small.
        budget = max(abs_tol, rel_tol * abs(value)) * 100.0 + 1e-250
        if not (math.isfinite(value) and abserr <= budget):
            raise ConvergenceError(
                f"quadrature failed on [{a!r}, {b!r}]: {out[3]}",
                diagnostics={"value": value, "error": abserr, "evaluations": neval},
            )
    return QuadResult(value=float(value), error=float(abserr), evaluations=neval)
