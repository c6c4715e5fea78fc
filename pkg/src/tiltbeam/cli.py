"""Command-line entry point: config in, CSV and SVG artifacts out.

Every command computes its full result first and only then writes files,
each atomically via a temp-then-rename, so no error path leaves a partial
artifact. A lock file serializes runs per output directory. Identical
inputs produce byte-identical outputs.
"""

from __future__ import annotations

import math
import os
import sys
from pathlib import Path

import numpy as np

from .circuitmodel import effective_permittivity, half_wave_resonance, loss_budget
from .config import ConfigError, RunConfig, load_config
from .radiators import FrequencyContext
from .scanstudy import default_scan_study
from .specfun import ConvergenceError
from .svgplot import render_polar_svg
from .synthesis import (
    BAND_CENTER_HZ,
    PatternCut,
    beam_stability,
    pattern_metrics,
    ratio_sweep,
    synthesize_pattern,
)

COMMANDS = ("pattern", "ratio-sweep", "stability", "scan", "resonance", "loss")

_USAGE = "usage: tiltbeam <command> --config <path> [--out <dir>] [--svg]\ncommands: " + ", ".join(COMMANDS)

# CSV floor for log magnitudes of exact pattern nulls.
_DB_FLOOR = -400.0

_LOCK_NAME = ".tiltbeam.lock"


class _UsageError(Exception):
    pass


def _fmt(value) -> str:
    """Nine-significant-digit cell formatting, stable across runs."""
    if isinstance(value, str):
        return value
    v = float(value)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if v == 0.0:
        v = 0.0  # drop the sign of negative zero
    return f"{v:.9g}"


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _mag_db(value: complex) -> float:
    m = abs(value)
    if m == 0.0:
        return _DB_FLOOR
    return max(20.0 * math.log10(m), _DB_FLOOR)


def _first_frequency(cfg: RunConfig) -> float:
    return cfg.frequencies_hz()[0]


def _unit_cut(cut: PatternCut) -> PatternCut:
    if cut.normalized:
        return cut
    peak = float(np.abs(cut.values).max())
    return PatternCut(cut.theta_grid, cut.values / peak, True)


def _build_pattern(cfg: RunConfig, svg: bool) -> dict:
    ctx = FrequencyContext.from_frequency(_first_frequency(cfg))
    grid_deg = cfg.theta_grid_deg()
    cut = synthesize_pattern(
        cfg.excitation_weights(), cfg.theta_grid_rad(),
        cfg.slot_spec(), cfg.monopole_spec(), cfg.array_layout(), ctx,
    )
    rows = [
        (float(d), v.real, v.imag, _mag_db(v))
        for d, v in zip(grid_deg, cut.values)
    ]
    artifacts = {"pattern.csv": _csv(("theta_deg", "re", "im", "mag_db"), rows)}
    if svg:
        artifacts["pattern.svg"] = render_polar_svg(cut, pattern_metrics(cut))
    return artifacts


def _build_ratio_sweep(cfg: RunConfig, svg: bool) -> dict:
    ctx = FrequencyContext.from_frequency(_first_frequency(cfg))
    result = ratio_sweep(cfg.weights.ratios, cfg.geometry(), ctx, cfg.theta_grid_rad())
    rows = [("row", r.ratio, r.tilt_deg, r.sll_dB) for r in result.rows]
    best = next(r for r in result.rows if r.ratio == result.best_ratio)
    rows.append(("best", best.ratio, best.tilt_deg, best.sll_dB))
    return {"ratio_sweep.csv": _csv(("kind", "ratio", "tilt_deg", "sll_db"), rows)}


def _build_stability(cfg: RunConfig, svg: bool) -> dict:
    result = beam_stability(
        cfg.frequencies_hz(), cfg.geometry(), cfg.excitation_weights(), cfg.theta_grid_rad()
    )
    rows = [
        ("row", r.frequency_hz / 1e9, r.tilt_deg, r.sll_dB, r.beamwidth3dB_deg,
         abs(r.tilt_deg - result.reference_tilt_deg))
        for r in result.rows
    ]
    rows.append(
        ("summary", BAND_CENTER_HZ / 1e9, result.reference_tilt_deg, math.nan, math.nan,
         result.max_tilt_deviation_deg)
    )
    header = ("kind", "f_ghz", "tilt_deg", "sll_db", "beamwidth3db_deg", "tilt_deviation_deg")
    return {"stability.csv": _csv(header, rows)}


def _scan_label(commanded_deg: float) -> str:
    return f"{commanded_deg:g}".replace("-", "m").replace(".", "_")


def _build_scan(cfg: RunConfig, svg: bool) -> dict:
    ctx = FrequencyContext.from_frequency(_first_frequency(cfg))
    study = default_scan_study(cfg.geometry(), ctx, theta_grid=cfg.theta_grid_rad())
    rows = [
        (r.commanded_deg, r.achieved_deg, r.pointing_error_deg, r.scan_loss_dB, r.sll_dB)
        for r in study.reports
    ]
    header = ("commanded_deg", "achieved_deg", "pointing_error_deg", "scan_loss_db", "sll_db")
    artifacts = {"scan.csv": _csv(header, rows)}
    if svg:
        for cut, report in zip(study.cuts, study.reports):
            unit = _unit_cut(cut)
            name = f"scan_{_scan_label(report.commanded_deg)}.svg"
            artifacts[name] = render_polar_svg(unit, pattern_metrics(unit))
    return artifacts


def _build_resonance(cfg: RunConfig, svg: bool) -> dict:
    strip = cfg.strip_spec()
    eps_r = strip.substrate.eps_r
    eps_eff = effective_permittivity(strip)
    row = (
        cfg.strip.length_mm,
        eps_r,
        half_wave_resonance(strip.length_l, eps_r) / 1e9,
        eps_eff,
        half_wave_resonance(strip.length_l, eps_eff) / 1e9,
    )
    header = ("length_mm", "eps_r", "f_raw_ghz", "eps_eff", "f_eff_ghz")
    return {"resonance.csv": _csv(header, [row])}


def _build_loss(cfg: RunConfig, svg: bool) -> dict:
    strip = cfg.strip_spec()
    rows = []
    for f in cfg.frequencies_hz():
        b = loss_budget(strip, f)
        rows.append((f / 1e9, b.alpha_c, b.alpha_d, b.alpha_r, b.alpha_l, b.total, b.note))
    header = ("f_ghz", "alpha_c_db", "alpha_d_db", "alpha_r_db", "alpha_l_db", "total_db", "note")
    return {"loss.csv": _csv(header, rows)}


_BUILDERS = {
    "pattern": _build_pattern,
    "ratio-sweep": _build_ratio_sweep,
    "stability": _build_stability,
    "scan": _build_scan,
    "resonance": _build_resonance,
    "loss": _build_loss,
}


def _write_text(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8", newline="\n")
    os.replace(tmp, path)


def run_command(name: str, cfg: RunConfig, out_dir=None, svg: bool = False) -> int:
    """Execute one command against a validated config. Returns exit status."""
    if name not in _BUILDERS:
        print(f"error: unknown command '{name}'\n{_USAGE}", file=sys.stderr)
        return 2
    out = Path(out_dir if out_dir is not None else cfg.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        lock_fd = os.open(out / _LOCK_NAME, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError:
        print(f"error: output directory '{out}' is locked by another run", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot prepare output directory '{out}': {exc}", file=sys.stderr)
        return 2
    try:
        artifacts = _BUILDERS[name](cfg, svg)
        for fname, text in sorted(artifacts.items()):
            _write_text(out / fname, text)
    except ConvergenceError as exc:
        print(
            f"error: convergence failure in {exc.operation} "
            f"(best estimate {exc.estimate}, error bound {exc.error_bound})",
            file=sys.stderr,
        )
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        os.close(lock_fd)
        os.unlink(out / _LOCK_NAME)
    return 0


def _parse_argv(argv):
    if not argv:
        raise _UsageError("missing command")
    command = argv[0]
    config_path = None
    out_dir = None
    svg = False
    i = 1
    while i < len(argv):
        arg = argv[i]
        if arg == "--config":
            if i + 1 >= len(argv):
                raise _UsageError("--config requires a path")
            config_path = argv[i + 1]
            i += 2
        elif arg == "--out":
            if i + 1 >= len(argv):
                raise _UsageError("--out requires a directory")
            out_dir = argv[i + 1]
            i += 2
        elif arg == "--svg":
            svg = True
            i += 1
        else:
            raise _UsageError(f"unrecognized argument '{arg}'")
    if command not in COMMANDS:
        raise _UsageError(f"unknown command '{command}'")
    if config_path is None:
        raise _UsageError("--config is required")
    return command, config_path, out_dir, svg


def main(argv=None) -> int:
    args = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        command, config_path, out_dir, svg = _parse_argv(args)
    except _UsageError as exc:
        print(f"error: {exc}\n{_USAGE}", file=sys.stderr)
        return 2
    try:
        cfg = load_config(config_path)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run_command(command, cfg, out_dir=out_dir, svg=svg)


if __name__ == "__main__":
    sys.exit(main())
