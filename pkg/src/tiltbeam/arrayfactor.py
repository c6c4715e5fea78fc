"""Uniform array factors: the separable closed form and an explicit steered
phasor sum for line arrays."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ArrayLayout:
    """Element counts and spacings along the two board axes."""

    count_Nx: int = 1
    count_Ny: int = 2
    spacing_dx: float = 1.2e-3  # m
    spacing_dy: float = 1.2e-3  # m

    def __post_init__(self):
        for name, count in (("count_Nx", self.count_Nx), ("count_Ny", self.count_Ny)):
            if int(count) != count or count < 1:
                raise ValueError(f"ArrayLayout: {name} must be an integer >= 1")
        if self.count_Nx > 1 and not self.spacing_dx > 0:
            raise ValueError("ArrayLayout: spacing_dx must be > 0 when count_Nx > 1")
        if self.count_Ny > 1 and not self.spacing_dy > 0:
            raise ValueError("ArrayLayout: spacing_dy must be > 0 when count_Ny > 1")


@dataclass(frozen=True)
class SteeringCommand:
    """Commanded main-beam angle for a scanned line array."""

    steer_theta0: float = 0.0  # rad

    def __post_init__(self):
        if not abs(self.steer_theta0) < 0.5 * math.pi:
            raise ValueError("SteeringCommand: |steer_theta0| must be < pi/2")


def _factor(n: int, psi: float) -> float:
    # |sin(n psi) / (n sin psi)| with the removable singularity filled by
    # its limit: psi at a multiple of pi means all element phasors align.
    if n == 1:
        return 1.0
    if abs(math.remainder(psi, math.pi)) < 1e-12:
        return 1.0
    return abs(math.sin(n * psi) / (n * math.sin(psi)))


def array_factor(layout: ArrayLayout, theta: float, phi: float, lam: float) -> float:
    """Separable two-axis array factor, each axis normalized to peak 1.

    The x axis factor depends on sin(theta), the y axis factor on sin(phi),
    following the separable printed form. Result lies in [0, 1].
    """
    if not lam > 0:
        raise ValueError("array_factor: lam must be > 0")
    fx = _factor(layout.count_Nx, math.pi * layout.spacing_dx * math.sin(theta) / lam)
    fy = _factor(layout.count_Ny, math.pi * layout.spacing_dy * math.sin(phi) / lam)
    return min(fx * fy, 1.0)


def _line_axis(layout: ArrayLayout) -> tuple[int, float]:
    # A scanned array must be a single line of elements along one axis.
    if layout.count_Nx == 1:
        return layout.count_Ny, layout.spacing_dy
    if layout.count_Ny == 1:
        return layout.count_Nx, layout.spacing_dx
    raise ValueError("layout must be a 1xN line along one axis")


def steered_array_factor(layout: ArrayLayout, cmd: SteeringCommand, theta: float, lam: float) -> complex:
    """Mean element phasor of a scanned 1xN line array.

    Returns (1/N) * sum_n exp(j n k d (sin theta - sin theta0)), an explicit
    sum rather than a shifted closed form, so grating lobes and scan squint
    emerge on their own. Magnitude is 1 at theta = theta0.
    """
    if not lam > 0:
        raise ValueError("steered_array_factor: lam must be > 0")
    n, d = _line_axis(layout)
    if n == 1:
        return 1 + 0j
    delta = (2.0 * math.pi / lam) * d * (math.sin(theta) - math.sin(cmd.steer_theta0))
    acc = 0j
    for i in range(n):
        acc += cmath.exp(1j * (i * delta))
    return acc / n
