"""Shared fixtures and the fixed Gauss-Legendre cross-check oracle.

The oracle rebuilds the grounded-post field from scratch with 64-point
Gauss-Legendre quadrature and scipy's Bessel J1, including its own
calibration and normalization, so it shares no numerical machinery with
the package implementation.
"""

import math

import numpy as np
import pytest
from scipy import special

from tiltbeam import AntennaGeometry, FrequencyContext

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)

_NORM_GRID = np.radians(np.arange(0.0, 90.0 + 0.125, 0.25))
_INNER_V0 = 0.1 * math.pi


def _gl_integral(fvec, a: float, b: float) -> complex:
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    x = mid + half * _GL_NODES
    return half * np.sum(_GL_WEIGHTS * fvec(x))


def gl_post_term(theta: float, kh: float) -> complex:
    st, ct = math.sin(theta), math.cos(theta)
    if st == 0.0:
        return 0j
    val = _gl_integral(lambda u: np.sin(kh - u) * np.exp(-1j * u * ct), 0.0, kh)
    return (0.25j / math.pi) * st * val


def gl_ground_term(theta: float, ka: float) -> complex:
    st, ct = math.sin(theta), math.cos(theta)
    val = _gl_integral(lambda v: np.exp(-1j * v) * special.j1(v * st), _INNER_V0, ka)
    return 0.5 * ct * val


class GlOracle:
    """Independently calibrated and normalized post-field evaluator."""

    def __init__(self):
        p_post = max(abs(gl_post_term(t, 0.5 * math.pi)) for t in _NORM_GRID)
        p_ground = max(abs(gl_ground_term(t, 4.0 * math.pi)) for t in _NORM_GRID)
        self.j0 = -p_post / p_ground

    def field(self, theta: float, kh: float, ka: float) -> complex:
        return gl_post_term(theta, kh) + self.j0 * gl_ground_term(theta, ka)

    def pattern(self, theta: float, kh: float, ka: float) -> complex:
        values = [self.field(t, kh, ka) for t in _NORM_GRID]
        mags = [abs(v) for v in values]
        ref = values[max(range(len(mags)), key=lambda i: (mags[i], -i))]
        return self.field(theta, kh, ka) / ref


@pytest.fixture(scope="session")
def gl_oracle() -> GlOracle:
    return GlOracle()


@pytest.fixture(scope="session")
def ctx324() -> FrequencyContext:
    return FrequencyContext.from_frequency(32.4e9)


@pytest.fixture(scope="session")
def default_geometry() -> AntennaGeometry:
    return AntennaGeometry()
