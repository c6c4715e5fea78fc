"""Self-contained polar SVG rendering of pattern cuts.

Upper-half-plane polar axes: angle from the vertical (board normal), dB
magnitude mapped radially with a -40 dB floor at the origin. Output is a
pure function of the inputs, byte for byte.
"""

from __future__ import annotations

import math

import numpy as np

from .synthesis import PatternCut, PatternMetrics

_CX = 320.0
_CY = 360.0
_RADIUS = 300.0
_FLOOR_DB = -40.0
_WIDTH = 640
_HEIGHT = 420

_RING_DB = (-30.0, -20.0, -10.0, 0.0)
_SPOKE_DEG = (-90.0, -60.0, -30.0, 0.0, 30.0, 60.0, 90.0)


def _fmt(value: float) -> str:
    if value == 0.0:
        value = 0.0  # collapse negative zero
    return f"{value:.3f}"


def _radial_fraction(mag: float) -> float:
    if mag <= 0.0:
        return 0.0
    db = 20.0 * math.log10(mag)
    db = max(db, _FLOOR_DB)
    return (db - _FLOOR_DB) / (-_FLOOR_DB)


def _point(theta_rad: float, fraction: float) -> tuple:
    r = fraction * _RADIUS
    return _CX + r * math.sin(theta_rad), _CY - r * math.cos(theta_rad)


def render_polar_svg(cut: PatternCut, annotations: PatternMetrics) -> str:
    """Render a normalized cut with its tilt marker and SLL annotation."""
    if not cut.normalized:
        raise ValueError("render_polar_svg: cut must be normalized")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]

    for db in _RING_DB:
        frac = (db - _FLOOR_DB) / (-_FLOOR_DB)
        r = frac * _RADIUS
        x0, y0 = _CX - r, _CY
        x1, y1 = _CX + r, _CY
        parts.append(
            f'<path d="M {_fmt(x0)} {_fmt(y0)} A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x1)} {_fmt(y1)}" '
            f'fill="none" stroke="#cccccc" stroke-width="1"/>'
        )
        lx, ly = _point(0.0, frac)
        parts.append(
            f'<text x="{_fmt(lx + 4.0)}" y="{_fmt(ly + 12.0)}" font-family="monospace" '
            f'font-size="10" fill="#888888">{db:.0f} dB</text>'
        )

    for deg in _SPOKE_DEG:
        th = math.radians(deg)
        x, y = _point(th, 1.0)
        parts.append(
            f'<line x1="{_fmt(_CX)}" y1="{_fmt(_CY)}" x2="{_fmt(x)}" y2="{_fmt(y)}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        lx, ly = _point(th, 1.05)
        parts.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="monospace" font-size="11" '
            f'fill="#444444" text-anchor="middle">{deg:.0f}&#176;</text>'
        )

    mags = np.abs(cut.values)
    coords = [
        _point(float(t), _radial_fraction(float(m)))
        for t, m in zip(cut.theta_grid, mags)
    ]
    if len(coords) == 1:
        x, y = coords[0]
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#c02020"/>')
    else:
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="#c02020" stroke-width="1.5"/>'
        )

    tilt_rad = math.radians(annotations.tilt_deg)
    tx, ty = _point(tilt_rad, 1.0)
    parts.append(
        f'<line x1="{_fmt(_CX)}" y1="{_fmt(_CY)}" x2="{_fmt(tx)}" y2="{_fmt(ty)}" '
        f'stroke="#2040c0" stroke-width="1" stroke-dasharray="6 4"/>'
    )

    sll_text = "none" if annotations.sll_dB == -math.inf else f"{annotations.sll_dB:.2f} dB"
    bw_text = "n/a" if math.isnan(annotations.beamwidth3dB_deg) else f"{annotations.beamwidth3dB_deg:.2f}&#176;"
    parts.append(
        f'<text x="16" y="24" font-family="monospace" font-size="13" fill="#222222">'
        f'tilt {annotations.tilt_deg:.2f}&#176;</text>'
    )
    parts.append(
        f'<text x="16" y="42" font-family="monospace" font-size="13" fill="#222222">'
        f'SLL {sll_text}</text>'
    )
    parts.append(
        f'<text x="16" y="60" font-family="monospace" font-size="13" fill="#222222">'
        f'beamwidth {bw_text}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
