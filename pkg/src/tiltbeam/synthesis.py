"""Superposition of the slot and post-array terms, pattern metrics, the
excitation-ratio study, and beam stability over frequency.

The slot radiates a broadside lobe (even in theta); the post array radiates
an odd-symmetric lobe with a null at broadside. Adding the two with real
weights pulls the combined peak to an intermediate tilt angle, and the ratio
of the weights trades sidelobe level against a nearly constant tilt.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arrayfactor import ArrayLayout, array_factor
from .radiators import FrequencyContext, MonopoleSpec, SlotSpec, monopole_pattern
from .specfun import DEFAULT_QUADRATURE, QuadratureSpec

BAND_CENTER_HZ = 32.4e9
BAND_MIN_HZ = 20.0e9
BAND_MAX_HZ = 45.0e9

DEFAULT_THETA_STEP_DEG = 0.25

# Field-amplitude level of the -3 dB beamwidth crossings.
_HALF_POWER_LEVEL = 10.0 ** (-3.0 / 20.0)


@dataclass(frozen=True)
class ExcitationWeights:
    """Real excitation amplitudes of the slot (s1) and post array (s2).

    s2_phase_rad is an extension hook for a complex ratio; the default 0
    keeps both sources in phase, the assumption the tilt analysis rests on.
    """

    s1_slot: float
    s2_monopole: float
    s2_phase_rad: float = 0.0

    def __post_init__(self):
        if self.s1_slot < 0 or self.s2_monopole < 0:
            raise ValueError("ExcitationWeights: amplitudes must be >= 0")
        if self.s1_slot == 0 and self.s2_monopole == 0:
            raise ValueError("ExcitationWeights: s1 and s2 must not both be zero")
        if not math.isfinite(self.s2_phase_rad):
            raise ValueError("ExcitationWeights: s2_phase_rad must be finite")


@dataclass(frozen=True, eq=False)
class PatternCut:
    """Sampled complex far-field over a polar-angle grid.

    theta_grid is strictly increasing, in radians, within [-pi/2, pi/2].
    When normalized is True the maximum magnitude equals 1.
    """

    theta_grid: np.ndarray
    values: np.ndarray
    normalized: bool

    def __post_init__(self):
        grid = np.asarray(self.theta_grid, dtype=float)
        vals = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "theta_grid", grid)
        object.__setattr__(self, "values", vals)
        if grid.ndim != 1 or grid.size == 0:
            raise ValueError("PatternCut: theta_grid must be a non-empty 1-d array")
        if vals.shape != grid.shape:
            raise ValueError("PatternCut: values and theta_grid must have the same length")
        if grid.size > 1 and not np.all(np.diff(grid) > 0):
            raise ValueError("PatternCut: theta_grid must be strictly increasing")
        if grid[0] < -0.5 * math.pi - 1e-9 or grid[-1] > 0.5 * math.pi + 1e-9:
            raise ValueError("PatternCut: theta_grid must lie within [-pi/2, pi/2]")
        if self.normalized and abs(np.abs(vals).max() - 1.0) > 1e-9:
            raise ValueError("PatternCut: normalized cut must have unit peak magnitude")


@dataclass(frozen=True)
class PatternMetrics:
    """Tilt, sidelobe level, -3 dB beamwidth, and peak of a pattern cut."""

    tilt_deg: float
    sll_dB: float
    beamwidth3dB_deg: float
    peak_linear: float
    beamwidth_one_sided: bool = False


@dataclass(frozen=True)
class RatioSweepRow:
    ratio: float
    tilt_deg: float
    sll_dB: float


@dataclass(frozen=True)
class RatioSweepResult:
    """Metrics per excitation ratio plus the sidelobe-minimizing ratio."""

    rows: tuple[RatioSweepRow, ...]
    best_ratio: float


@dataclass(frozen=True)
class StabilityRow:
    frequency_hz: float
    tilt_deg: float
    sll_dB: float
    beamwidth3dB_deg: float


@dataclass(frozen=True)
class StabilityResult:
    """Metrics per frequency plus the worst tilt deviation from band center."""

    rows: tuple[StabilityRow, ...]
    reference_tilt_deg: float
    max_tilt_deviation_deg: float


def default_theta_grid(step_deg: float = DEFAULT_THETA_STEP_DEG) -> np.ndarray:
    """Symmetric polar grid over [-90, 90] degrees, in radians."""
    if not step_deg > 0:
        raise ValueError("default_theta_grid: step must be > 0")
    return np.radians(np.arange(-90.0, 90.0 + 0.5 * step_deg, step_deg))


def _slot_term(theta_grid: np.ndarray) -> np.ndarray:
    # Broadside-remapped slot curve sin((pi/2) cos theta): even in theta,
    # peak exactly at theta = 0, locally quartic-flat there, which is why the
    # combined tilt barely moves as the weights change.
    return np.sin(0.5 * np.pi * np.cos(theta_grid))


def _monopole_term(
    theta_grid: np.ndarray,
    mono: MonopoleSpec,
    layout: ArrayLayout,
    ctx: FrequencyContext,
    quad: QuadratureSpec,
) -> np.ndarray:
    # Post-array term on the full grid: the normalized post value on |theta|
    # extended as an odd function (both of its field integrals are odd in
    # theta), times the in-plane array factor.
    lam = ctx.wavelength_lambda0
    out = np.zeros(theta_grid.size, dtype=complex)
    for i, th in enumerate(theta_grid):
        if th == 0.0:
            continue
        sign = 1.0 if th > 0.0 else -1.0
        em = monopole_pattern(abs(float(th)), mono, ctx, quad)
        out[i] = sign * em * array_factor(layout, float(th), 0.0, lam)
    return out


def synthesize_pattern(
    weights: ExcitationWeights,
    theta_grid: np.ndarray,
    slot: SlotSpec,
    mono: MonopoleSpec,
    layout: ArrayLayout,
    ctx: FrequencyContext,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> PatternCut:
    """Weighted superposition of the slot and post-array terms on a grid.

    Per sample the un-normalized field is s1 * slot_term + s2 * post_term;
    the returned cut is normalized to unit peak magnitude. Both sources are
    treated as sharing one phase center, so the weights add coherently.
    """
    grid = np.asarray(theta_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("synthesize_pattern: theta_grid must be non-empty")
    vals = np.zeros(grid.size, dtype=complex)
    if weights.s1_slot != 0.0:
        vals = vals + weights.s1_slot * _slot_term(grid)
    if weights.s2_monopole != 0.0:
        s2 = weights.s2_monopole * cmath.exp(1j * weights.s2_phase_rad)
        vals = vals + s2 * _monopole_term(grid, mono, layout, ctx, quad)
    peak = np.abs(vals).max()
    if peak == 0.0:
        raise ValueError("synthesize_pattern: field is zero everywhere on the grid")
    return PatternCut(grid, vals / peak, True)


def _refined_argmax(grid_deg: np.ndarray, mags: np.ndarray) -> float:
    # Grid argmax polished by a three-point parabolic fit. First index wins
    # exact ties; boundary peaks are returned unrefined.
    i = int(np.argmax(mags))
    if 0 < i < mags.size - 1:
        den = mags[i - 1] - 2.0 * mags[i] + mags[i + 1]
        if den != 0.0:
            shift = 0.5 * (mags[i - 1] - mags[i + 1]) / den
            shift = min(0.5, max(-0.5, shift))
            return float(grid_deg[i] + shift * 0.5 * (grid_deg[i + 1] - grid_deg[i - 1]))
    return float(grid_deg[i])


def _crossing(grid_deg: np.ndarray, mags: np.ndarray, i_peak: int, level: float, side: int):
    # Linear interpolation of the first crossing of `level` away from the
    # peak; side is -1 for the left flank, +1 for the right. None when the
    # flank never drops below the level.
    j = i_peak
    while 0 <= j + side < mags.size:
        k = j + side
        if mags[k] < level:
            f = (mags[j] - level) / (mags[j] - mags[k])
            return float(grid_deg[j] + f * (grid_deg[k] - grid_deg[j]))
        j = k
    return None


def pattern_metrics(cut: PatternCut) -> PatternMetrics:
    """Tilt, sidelobe level, and -3 dB beamwidth of a normalized cut.

    Tilt refines the grid argmax with a three-point parabola. The main lobe
    spans the first local minima flanking the peak; the strongest local
    maximum outside that span sets the sidelobe level, with boundary samples
    counting as lobe candidates. With no secondary lobe the sidelobe level
    is -inf. A flank that never crosses -3 dB sets beamwidth_one_sided and
    leaves the width as nan.
    """
    if not cut.normalized:
        raise ValueError("pattern_metrics: cut must be normalized")
    grid_deg = np.degrees(cut.theta_grid)
    mags = np.abs(cut.values)
    n = mags.size
    if n == 1:
        return PatternMetrics(float(grid_deg[0]), -math.inf, math.nan, float(mags[0]), True)
    if np.max(np.diff(grid_deg)) > 0.5 + 1e-9:
        raise ValueError("pattern_metrics: grid spacing must be <= 0.5 degrees")

    i_peak = int(np.argmax(mags))
    peak = float(mags[i_peak])
    tilt = _refined_argmax(grid_deg, mags)

    # Main-lobe extent: walk downhill (plateaus included) to the first
    # flanking minima or the cut boundary.
    left = i_peak
    while left > 0 and mags[left - 1] <= mags[left]:
        left -= 1
    right = i_peak
    while right < n - 1 and mags[right + 1] <= mags[right]:
        right += 1

    second = None
    for t in range(0, left):
        lo = t == 0 or mags[t] >= mags[t - 1]
        hi = mags[t] >= mags[t + 1]
        if lo and hi:
            second = mags[t] if second is None else max(second, mags[t])
    for t in range(right + 1, n):
        lo = mags[t] >= mags[t - 1]
        hi = t == n - 1 or mags[t] >= mags[t + 1]
        if lo and hi:
            second = mags[t] if second is None else max(second, mags[t])
    sll = -math.inf if second is None or second == 0.0 else 20.0 * math.log10(second / peak)

    level = _HALF_POWER_LEVEL * peak
    lo_cross = _crossing(grid_deg, mags, i_peak, level, -1)
    hi_cross = _crossing(grid_deg, mags, i_peak, level, +1)
    if lo_cross is None or hi_cross is None:
        return PatternMetrics(tilt, sll, math.nan, peak, True)
    return PatternMetrics(tilt, sll, hi_cross - lo_cross, peak, False)


@dataclass(frozen=True)
class AntennaGeometry:
    """Element geometry bundle used by the sweep and scan studies."""

    slot: SlotSpec = SlotSpec()
    monopole: MonopoleSpec = MonopoleSpec()
    layout: ArrayLayout = ArrayLayout()


def ratio_sweep(
    ratios,
    geometry: AntennaGeometry,
    ctx: FrequencyContext,
    theta_grid: np.ndarray | None = None,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> RatioSweepResult:
    """Metrics as a function of the excitation ratio s2/s1 with s1 = 1.

    The slot and post-array terms are evaluated once on the grid and reused
    for every ratio. best_ratio is the sidelobe-minimizing entry; the
    smallest ratio wins ties, including ties at -inf.
    """
    ratios = [float(r) for r in ratios]
    if not ratios:
        raise ValueError("ratio_sweep: ratios must be non-empty")
    if any(not r > 0 for r in ratios):
        raise ValueError("ratio_sweep: ratios must be positive")
    grid = default_theta_grid() if theta_grid is None else np.asarray(theta_grid, dtype=float)
    slot_vals = _slot_term(grid).astype(complex)
    mono_vals = _monopole_term(grid, geometry.monopole, geometry.layout, ctx, quad)
    rows = []
    for r in ratios:
        vals = slot_vals + r * mono_vals
        peak = np.abs(vals).max()
        m = pattern_metrics(PatternCut(grid, vals / peak, True))
        rows.append(RatioSweepRow(r, m.tilt_deg, m.sll_dB))
    best = min(rows, key=lambda row: (row.sll_dB, row.ratio))
    return RatioSweepResult(tuple(rows), best.ratio)


def beam_stability(
    freqs,
    geometry: AntennaGeometry,
    weights: ExcitationWeights,
    theta_grid: np.ndarray | None = None,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> StabilityResult:
    """Pattern metrics across frequency at fixed excitation weights.

    Frequencies must lie within the 20 to 45 GHz band. Rows keep the input
    order. The summary is the largest absolute tilt deviation from the tilt
    at the 32.4 GHz band center, which is computed on the side when absent
    from the list.
    """
    freqs = [float(f) for f in freqs]
    if not freqs:
        raise ValueError("beam_stability: freqs must be non-empty")
    for f in freqs:
        if not BAND_MIN_HZ <= f <= BAND_MAX_HZ:
            raise ValueError("beam_stability: frequency outside the 20 to 45 GHz band")
    grid = default_theta_grid() if theta_grid is None else np.asarray(theta_grid, dtype=float)

    metrics_cache: dict[float, PatternMetrics] = {}

    def metrics_at(f: float) -> PatternMetrics:
        if f not in metrics_cache:
            ctx = FrequencyContext.from_frequency(f)
            cut = synthesize_pattern(weights, grid, geometry.slot, geometry.monopole, geometry.layout, ctx, quad)
            metrics_cache[f] = pattern_metrics(cut)
        return metrics_cache[f]

    rows = tuple(
        StabilityRow(f, metrics_at(f).tilt_deg, metrics_at(f).sll_dB, metrics_at(f).beamwidth3dB_deg)
        for f in freqs
    )
    ref_tilt = metrics_at(BAND_CENTER_HZ).tilt_deg
    max_dev = max(abs(row.tilt_deg - ref_tilt) for row in rows)
    return StabilityResult(rows, ref_tilt, max_dev)
