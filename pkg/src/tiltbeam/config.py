"""Run configuration: JSON ingestion, validation, and materialization.

Config files carry external units (millimeters, gigahertz, degrees) and
those values are stored verbatim so a load, serialize, load cycle is the
identity. Conversion to SI happens only in the materializer methods that
build the model-layer spec objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .arrayfactor import ArrayLayout
from .circuitmodel import SUBSTRATE_PRESETS, MicrostripSpec, SubstrateSpec
from .radiators import CurrentModel, MonopoleSpec, SlotSpec
from .synthesis import AntennaGeometry, ExcitationWeights


class ConfigError(ValueError):
    """Raised for config parse or validation failures."""


_CURRENT_MODELS = ("sinusoidal", "triangular")


@dataclass(frozen=True)
class SlotConfig:
    length_mm: float = 4.8
    amplitude_e0: float = 1.0


@dataclass(frozen=True)
class MonopoleConfig:
    height_mm: float = 1.2
    ground_radius_mm: float = 5.0
    current_model: str = "sinusoidal"


@dataclass(frozen=True)
class ArrayConfig:
    count_nx: int = 1
    count_ny: int = 2
    spacing_dx_mm: float = 1.2
    spacing_dy_mm: float = 1.2


@dataclass(frozen=True)
class StripConfig:
    width_mm: float = 0.24
    length_mm: float = 1.98
    substrate: str = "FR4"
    # dielectric height under the strip (the thin top layer of the stack),
    # independent of the named substrate's slab thickness
    substrate_thickness_mm: float = 0.1
    conductivity_s_per_m: float = 5.8e7
    roughness_um: float = 0.0


@dataclass(frozen=True)
class SubstrateConfig:
    eps_r: float
    tan_delta: float
    thickness_mm: float


@dataclass(frozen=True)
class FrequencyGridConfig:
    start_ghz: float = 32.4
    stop_ghz: float = 32.4
    step_ghz: float = 1.0


@dataclass(frozen=True)
class ThetaGridConfig:
    start_deg: float = -90.0
    stop_deg: float = 90.0
    step_deg: float = 0.25


def _default_ratios() -> tuple:
    return tuple(i / 10 for i in range(1, 11))


@dataclass(frozen=True)
class WeightsConfig:
    s1: float = 1.0
    s2: float = 0.3
    ratios: tuple = field(default_factory=_default_ratios)


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration in external units."""

    slot: SlotConfig = SlotConfig()
    monopole: MonopoleConfig = MonopoleConfig()
    array: ArrayConfig = ArrayConfig()
    strip: StripConfig = StripConfig()
    substrates: dict = field(default_factory=dict)
    frequency_grid: FrequencyGridConfig = FrequencyGridConfig()
    theta_grid: ThetaGridConfig = ThetaGridConfig()
    weights: WeightsConfig = WeightsConfig()
    output_dir: str = "out"

    # materializers: external units in, SI spec objects out

    def slot_spec(self) -> SlotSpec:
        return SlotSpec(self.slot.length_mm * 1e-3, self.slot.amplitude_e0)

    def monopole_spec(self) -> MonopoleSpec:
        return MonopoleSpec(
            self.monopole.height_mm * 1e-3,
            self.monopole.ground_radius_mm * 1e-3,
            CurrentModel(self.monopole.current_model),
        )

    def array_layout(self) -> ArrayLayout:
        return ArrayLayout(
            self.array.count_nx,
            self.array.count_ny,
            self.array.spacing_dx_mm * 1e-3,
            self.array.spacing_dy_mm * 1e-3,
        )

    def geometry(self) -> AntennaGeometry:
        return AntennaGeometry(self.slot_spec(), self.monopole_spec(), self.array_layout())

    def substrate_table(self) -> dict:
        table = dict(SUBSTRATE_PRESETS)
        for name, sc in self.substrates.items():
            table[name] = SubstrateSpec(name, sc.eps_r, sc.tan_delta, sc.thickness_mm * 1e-3)
        return table

    def strip_spec(self) -> MicrostripSpec:
        table = self.substrate_table()
        if self.strip.substrate not in table:
            raise ConfigError(
                f"geometry.strip.substrate: unknown substrate '{self.strip.substrate}'"
            )
        material = table[self.strip.substrate]
        layer = SubstrateSpec(
            material.name,
            material.eps_r,
            material.tan_delta,
            self.strip.substrate_thickness_mm * 1e-3,
        )
        return MicrostripSpec(
            self.strip.width_mm * 1e-3,
            self.strip.length_mm * 1e-3,
            layer,
            self.strip.conductivity_s_per_m,
            self.strip.roughness_um * 1e-6,
        )

    def excitation_weights(self) -> ExcitationWeights:
        return ExcitationWeights(self.weights.s1, self.weights.s2)

    def frequencies_hz(self) -> list:
        g = self.frequency_grid
        return [float(v) * 1e9 for v in np.arange(g.start_ghz, g.stop_ghz + 0.5 * g.step_ghz, g.step_ghz)]

    def theta_grid_deg(self) -> np.ndarray:
        g = self.theta_grid
        return np.arange(g.start_deg, g.stop_deg + 0.5 * g.step_deg, g.step_deg)

    def theta_grid_rad(self) -> np.ndarray:
        return np.radians(self.theta_grid_deg())


def _require_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: must be an object")
    return value


def _reject_unknown(mapping: dict, path: str, known) -> None:
    for key in mapping:
        if key not in known:
            where = f"{path}.{key}" if path else str(key)
            raise ConfigError(f"unknown key: {where}")


def _number(mapping: dict, path: str, key: str, default):
    if key not in mapping:
        return default
    v = mapping[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{path}.{key}: must be a number")
    return float(v)


def _integer(mapping: dict, path: str, key: str, default):
    if key not in mapping:
        return default
    v = mapping[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"{path}.{key}: must be an integer")
    return int(v)


def _text(mapping: dict, path: str, key: str, default):
    if key not in mapping:
        return default
    v = mapping[key]
    if not isinstance(v, str):
        raise ConfigError(f"{path}.{key}: must be a string")
    return v


def _positive(value: float, where: str) -> float:
    if not value > 0:
        raise ConfigError(f"{where}: must be > 0")
    return value


def _non_negative(value: float, where: str) -> float:
    if value < 0:
        raise ConfigError(f"{where}: must be >= 0")
    return value


def _parse_slot(data, path) -> SlotConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("length_mm", "amplitude_e0"))
    dft = SlotConfig()
    return SlotConfig(
        _positive(_number(d, path, "length_mm", dft.length_mm), f"{path}.length_mm"),
        _positive(_number(d, path, "amplitude_e0", dft.amplitude_e0), f"{path}.amplitude_e0"),
    )


def _parse_monopole(data, path) -> MonopoleConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("height_mm", "ground_radius_mm", "current_model"))
    dft = MonopoleConfig()
    model = _text(d, path, "current_model", dft.current_model)
    if model not in _CURRENT_MODELS:
        raise ConfigError(f"{path}.current_model: must be one of {_CURRENT_MODELS}")
    return MonopoleConfig(
        _positive(_number(d, path, "height_mm", dft.height_mm), f"{path}.height_mm"),
        _positive(_number(d, path, "ground_radius_mm", dft.ground_radius_mm), f"{path}.ground_radius_mm"),
        model,
    )


def _parse_array(data, path) -> ArrayConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("count_nx", "count_ny", "spacing_dx_mm", "spacing_dy_mm"))
    dft = ArrayConfig()
    nx = _integer(d, path, "count_nx", dft.count_nx)
    ny = _integer(d, path, "count_ny", dft.count_ny)
    if nx < 1:
        raise ConfigError(f"{path}.count_nx: must be >= 1")
    if ny < 1:
        raise ConfigError(f"{path}.count_ny: must be >= 1")
    return ArrayConfig(
        nx,
        ny,
        _positive(_number(d, path, "spacing_dx_mm", dft.spacing_dx_mm), f"{path}.spacing_dx_mm"),
        _positive(_number(d, path, "spacing_dy_mm", dft.spacing_dy_mm), f"{path}.spacing_dy_mm"),
    )


def _parse_strip(data, path) -> StripConfig:
    d = _require_mapping(data, path)
    _reject_unknown(
        d, path,
        ("width_mm", "length_mm", "substrate", "substrate_thickness_mm",
         "conductivity_s_per_m", "roughness_um"),
    )
    dft = StripConfig()
    return StripConfig(
        _positive(_number(d, path, "width_mm", dft.width_mm), f"{path}.width_mm"),
        _positive(_number(d, path, "length_mm", dft.length_mm), f"{path}.length_mm"),
        _text(d, path, "substrate", dft.substrate),
        _positive(
            _number(d, path, "substrate_thickness_mm", dft.substrate_thickness_mm),
            f"{path}.substrate_thickness_mm",
        ),
        _positive(_number(d, path, "conductivity_s_per_m", dft.conductivity_s_per_m), f"{path}.conductivity_s_per_m"),
        _non_negative(_number(d, path, "roughness_um", dft.roughness_um), f"{path}.roughness_um"),
    )


def _parse_substrates(data, path) -> dict:
    d = _require_mapping(data, path)
    out = {}
    for name, entry in d.items():
        sub_path = f"{path}.{name}"
        e = _require_mapping(entry, sub_path)
        _reject_unknown(e, sub_path, ("eps_r", "tan_delta", "thickness_mm"))
        for required in ("eps_r", "tan_delta", "thickness_mm"):
            if required not in e:
                raise ConfigError(f"{sub_path}.{required}: required")
        eps_r = _number(e, sub_path, "eps_r", None)
        if eps_r < 1:
            raise ConfigError(f"{sub_path}.eps_r: must be >= 1")
        out[name] = SubstrateConfig(
            eps_r,
            _non_negative(_number(e, sub_path, "tan_delta", None), f"{sub_path}.tan_delta"),
            _positive(_number(e, sub_path, "thickness_mm", None), f"{sub_path}.thickness_mm"),
        )
    return out


def _parse_frequency_grid(data, path) -> FrequencyGridConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("start_ghz", "stop_ghz", "step_ghz"))
    dft = FrequencyGridConfig()
    start = _positive(_number(d, path, "start_ghz", dft.start_ghz), f"{path}.start_ghz")
    stop = _number(d, path, "stop_ghz", max(dft.stop_ghz, start))
    step = _number(d, path, "step_ghz", dft.step_ghz)
    if not step > 0:
        raise ConfigError(f"{path}.step_ghz: step must be > 0")
    if stop < start:
        raise ConfigError(f"{path}.stop_ghz: must be >= start_ghz")
    return FrequencyGridConfig(start, stop, step)


def _parse_theta_grid(data, path) -> ThetaGridConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("start_deg", "stop_deg", "step_deg"))
    dft = ThetaGridConfig()
    start = _number(d, path, "start_deg", dft.start_deg)
    stop = _number(d, path, "stop_deg", dft.stop_deg)
    step = _number(d, path, "step_deg", dft.step_deg)
    if not step > 0:
        raise ConfigError(f"{path}.step_deg: step must be > 0")
    if stop < start:
        raise ConfigError(f"{path}.stop_deg: must be >= start_deg")
    if start < -90.0 or stop > 90.0:
        raise ConfigError(f"{path}: angles must lie within [-90, 90] degrees")
    return ThetaGridConfig(start, stop, step)


def _parse_weights(data, path) -> WeightsConfig:
    d = _require_mapping(data, path)
    _reject_unknown(d, path, ("s1", "s2", "ratios"))
    dft = WeightsConfig()
    s1 = _non_negative(_number(d, path, "s1", dft.s1), f"{path}.s1")
    s2 = _non_negative(_number(d, path, "s2", dft.s2), f"{path}.s2")
    if s1 == 0 and s2 == 0:
        raise ConfigError(f"{path}: s1 and s2 must not both be zero")
    ratios = dft.ratios
    if "ratios" in d:
        raw = d["ratios"]
        if not isinstance(raw, list) or not raw:
            raise ConfigError(f"{path}.ratios: must be a non-empty array of numbers")
        vals = []
        for i, v in enumerate(raw):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ConfigError(f"{path}.ratios[{i}]: must be a number")
            if not v > 0:
                raise ConfigError(f"{path}.ratios[{i}]: must be > 0")
            vals.append(float(v))
        ratios = tuple(vals)
    return WeightsConfig(s1, s2, ratios)


def parse_config(data: dict) -> RunConfig:
    """Validate a parsed JSON object and fill defaults for absent fields."""
    top = _require_mapping(data, "config")
    _reject_unknown(
        top, "",
        ("geometry", "substrates", "frequency_grid", "theta_grid", "weights", "output_dir"),
    )
    slot, monopole, array, strip = SlotConfig(), MonopoleConfig(), ArrayConfig(), StripConfig()
    if "geometry" in top:
        g = _require_mapping(top["geometry"], "geometry")
        _reject_unknown(g, "geometry", ("slot", "monopole", "array", "strip"))
        if "slot" in g:
            slot = _parse_slot(g["slot"], "geometry.slot")
        if "monopole" in g:
            monopole = _parse_monopole(g["monopole"], "geometry.monopole")
        if "array" in g:
            array = _parse_array(g["array"], "geometry.array")
        if "strip" in g:
            strip = _parse_strip(g["strip"], "geometry.strip")
    substrates = _parse_substrates(top["substrates"], "substrates") if "substrates" in top else {}
    freq = _parse_frequency_grid(top["frequency_grid"], "frequency_grid") if "frequency_grid" in top else FrequencyGridConfig()
    theta = _parse_theta_grid(top["theta_grid"], "theta_grid") if "theta_grid" in top else ThetaGridConfig()
    weights = _parse_weights(top["weights"], "weights") if "weights" in top else WeightsConfig()
    out_dir = _text(top, "config", "output_dir", "out")
    if "output_dir" in top and not out_dir:
        raise ConfigError("output_dir: must be a non-empty string")
    cfg = RunConfig(slot, monopole, array, strip, substrates, freq, theta, weights, out_dir)
    cfg.strip_spec()  # referenced substrate preset must resolve
    return cfg


def load_config(path) -> RunConfig:
    """Read and validate a JSON config file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return parse_config(data)


def serialize_config(cfg: RunConfig) -> dict:
    """Full-form JSON object for a config; inverse of parse_config."""
    return {
        "geometry": {
            "slot": {
                "length_mm": cfg.slot.length_mm,
                "amplitude_e0": cfg.slot.amplitude_e0,
            },
            "monopole": {
                "height_mm": cfg.monopole.height_mm,
                "ground_radius_mm": cfg.monopole.ground_radius_mm,
                "current_model": cfg.monopole.current_model,
            },
            "array": {
                "count_nx": cfg.array.count_nx,
                "count_ny": cfg.array.count_ny,
                "spacing_dx_mm": cfg.array.spacing_dx_mm,
                "spacing_dy_mm": cfg.array.spacing_dy_mm,
            },
            "strip": {
                "width_mm": cfg.strip.width_mm,
                "length_mm": cfg.strip.length_mm,
                "substrate": cfg.strip.substrate,
                "substrate_thickness_mm": cfg.strip.substrate_thickness_mm,
                "conductivity_s_per_m": cfg.strip.conductivity_s_per_m,
                "roughness_um": cfg.strip.roughness_um,
            },
        },
        "substrates": {
            name: {
                "eps_r": sc.eps_r,
                "tan_delta": sc.tan_delta,
                "thickness_mm": sc.thickness_mm,
            }
            for name, sc in sorted(cfg.substrates.items())
        },
        "frequency_grid": {
            "start_ghz": cfg.frequency_grid.start_ghz,
            "stop_ghz": cfg.frequency_grid.stop_ghz,
            "step_ghz": cfg.frequency_grid.step_ghz,
        },
        "theta_grid": {
            "start_deg": cfg.theta_grid.start_deg,
            "stop_deg": cfg.theta_grid.stop_deg,
            "step_deg": cfg.theta_grid.step_deg,
        },
        "weights": {
            "s1": cfg.weights.s1,
            "s2": cfg.weights.s2,
            "ratios": list(cfg.weights.ratios),
        },
        "output_dir": cfg.output_dir,
    }
