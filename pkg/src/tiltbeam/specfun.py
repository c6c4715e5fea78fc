"""Special functions and complex-valued quadrature for the radiation integrals.

Only what the field models actually need lives here: the first-order Bessel
function J1 and an adaptive Simpson integrator for complex kernels. Both are
deterministic; identical inputs produce bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

# Crossover between the ascending power series and the large-argument
# (Hankel) expansion. The two branches agree to about 1e-13 here, which the
# test suite checks directly on both sides of the seam.
_SERIES_CUTOFF = 12.0

_SERIES_EPS = 1e-17
_ASYMPTOTIC_EPS = 1e-17
_THREE_QUARTER_PI = 2.356194490192345


@dataclass(frozen=True)
class QuadratureSpec:
    """Error-control settings for integrate_complex.

    abs_tol and rel_tol set the acceptance target for the whole interval;
    max_subdivisions bounds how many panel splits the integrator may spend.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 4000

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("QuadratureSpec: abs_tol must be > 0")
        if not self.rel_tol > 0:
            raise ValueError("QuadratureSpec: rel_tol must be > 0")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise ValueError("QuadratureSpec: max_subdivisions must be an integer >= 1")


DEFAULT_QUADRATURE = QuadratureSpec()


class ConvergenceError(ArithmeticError):
    """Subdivision budget ran out before the tolerance was met.

    Carries the name of the failing operation, the best estimate accumulated
    so far, and an estimated bound on its error.
    """

    def __init__(self, operation: str, estimate: complex, error_bound: float):
        self.operation = operation
        self.estimate = estimate
        self.error_bound = error_bound
        super().__init__(
            f"{operation}: subdivision budget exhausted; "
            f"best estimate {estimate:.6e}, estimated error bound {error_bound:.3e}"
        )


def bessel_j1(x: float) -> float:
    """First-order Bessel function of the first kind, J1(x).

    Ascending power series below |x| = 12 and the Hankel asymptotic
    expansion above. Odd in x by construction, so parity is exact.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("bessel_j1: argument must be finite")
    ax = abs(x)
    val = _j1_series(ax) if ax <= _SERIES_CUTOFF else _j1_asymptotic(ax)
    return -val if x < 0.0 else val


def _j1_series(ax: float) -> float:
    # J1(x) = (x/2) * sum_m (-1)^m (x^2/4)^m / (m! (m+1)!)
    q = 0.25 * ax * ax
    term = 1.0
    total = 1.0
    m = 0
    while abs(term) > _SERIES_EPS * max(1.0, abs(total)) and m < 200:
        m += 1
        term *= -q / (m * (m + 1))
        total += term
    return 0.5 * ax * total


def _j1_asymptotic(ax: float) -> float:
    # Hankel expansion J1(x) ~ sqrt(2/(pi x)) (P cos w - Q sin w) with
    # w = x - 3pi/4 and coefficients c_k = c_{k-1} (4 - (2k-1)^2) / (8k).
    # Truncated at the smallest term, the usual optimal cut for an
    # asymptotic series.
    p = 1.0
    q = 0.0
    c = 1.0
    xpow = 1.0
    prev = math.inf
    for j in range(1, 40):
        c *= (4.0 - (2.0 * j - 1.0) ** 2) / (8.0 * j)
        xpow /= ax
        t = c * xpow
        if abs(t) >= prev:
            break
        sign = -1.0 if (j // 2) % 2 else 1.0
        if j % 2:
            q += sign * t
        else:
            p += sign * t
        prev = abs(t)
        if abs(t) < _ASYMPTOTIC_EPS:
            break
    w = ax - _THREE_QUARTER_PI
    return math.sqrt(2.0 / (math.pi * ax)) * (p * math.cos(w) - q * math.sin(w))


def _simpson(f0: complex, f1: complex, f2: complex, width: float) -> complex:
    return width * (f0 + 4.0 * f1 + f2) / 6.0


def integrate_complex(
    f: Callable[[float], complex],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> complex:
    """Adaptive Simpson integral of a complex-valued function over [a, b].

    Panels are split until each one's Richardson error estimate fits its
    width-proportional share of max(abs_tol, rel_tol * |first estimate|).
    Panels are processed left to right off an explicit stack, so the result
    is deterministic. Raises ConvergenceError when the subdivision budget is
    exhausted; the exception carries the best estimate and an error bound.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integrate_complex: bounds must be finite")
    if a > b:
        raise ValueError("integrate_complex: requires a <= b")
    if a == b:
        return 0j

    xm = 0.5 * (a + b)
    fa = complex(f(a))
    fm = complex(f(xm))
    fb = complex(f(b))
    whole = _simpson(fa, fm, fb, b - a)
    tol0 = max(spec.abs_tol, spec.rel_tol * abs(whole))

    # Panel tuple: (x0, x1, f(x0), f(mid), f(x1), simpson estimate, tol share)
    stack = [(a, b, fa, fm, fb, whole, tol0)]
    total = 0j
    splits = 0
    while stack:
        x0, x1, f0, f1, f2, s0, tol = stack.pop()
        mid = 0.5 * (x0 + x1)
        xl = 0.5 * (x0 + mid)
        xr = 0.5 * (mid + x1)
        fl = complex(f(xl))
        fr = complex(f(xr))
        half = 0.5 * (x1 - x0)
        s_left = _simpson(f0, fl, f1, half)
        s_right = _simpson(f1, fr, f2, half)
        s2 = s_left + s_right
        err = abs(s2 - s0) / 15.0
        # Width exhaustion means the panel cannot be refined further.
        if err <= tol or xl <= x0 or xr >= x1:
            total += s2 + (s2 - s0) / 15.0
            continue
        splits += 1
        if splits > spec.max_subdivisions:
            best = total + s2
            bound = err
            for panel in stack:
                best += panel[5]
                bound += panel[6]
            raise ConvergenceError("integrate_complex", best, bound)
        stack.append((mid, x1, f1, fr, f2, s_right, 0.5 * tol))
        stack.append((x0, mid, f0, fl, f1, s_left, 0.5 * tol))
    return total
