"""Config-driven sweeps producing deterministic tables.

A sweep is described by a single JSON document (schema 1).  The device block
is either the lumped parameters inline or a reference to a line-profile file
plus mode index; drive amplitudes may be given directly or as multiples of
the critical amplitude, which are resolved at load time.  Grid points are
evaluated independently and emitted in index order, so outputs are
deterministic byte for byte.
"""

import cmath
import json
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .model import DeviceParams, PumpDrive, validate
from .noise import ThermalEnv, squeeze_vs_pump
from .operating import critical_point
from .smallsignal import intermodulation_gain, parametric_gain
from .steady import reflection_coefficient, steady_states
from .stripline import (derive_device, gamma2_from_profile,
                        gamma3_from_profile, kerr_constant, load_profile,
                        solve_modes)
from .tableio import Table

SCHEMA_VERSION = 1

STEADY_COLUMNS = ["b1_in", "omega_p", "branch", "E", "B", "phi_B",
                  "refl_mag", "refl_phase", "lambda0_re", "lambda0_im", "stable"]
GAIN_COLUMNS = ["b1_in", "omega_p", "branch", "omega", "G_S", "G_I", "diverged"]
SQUEEZE_COLUMNS = ["b1_frac", "p_min0", "p_max0", "phi_min",
                   "above_critical", "diverged"]
CRITICAL_COLUMNS = ["exists", "E_c", "omega_p_c", "b1c_in", "ill_conditioned"]
LINE_COLUMNS = ["omega0", "kerr", "gamma1", "gamma2", "gamma3",
                "quad_u4_dL", "quad_u2_R0", "quad_u4_dR"]


class ConfigError(ValueError):
    """Invalid sweep configuration; the message names the offending field."""

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"config field {field_path!r}: {message}")


@dataclass(frozen=True)
class SweepConfig:
    """Parsed and resolved sweep description."""

    device: DeviceParams
    omega_p_grid: tuple[float, ...] = ()
    amplitudes: tuple[float, ...] = ()
    psi1: float = 0.0
    env: ThermalEnv = field(default_factory=ThermalEnv)
    offsets: tuple[float, ...] = ()
    offsets_absolute: bool = False
    pump_fractions: tuple[float, ...] = ()


def _require(mapping, key, path):
    if key not in mapping:
        raise ConfigError(f"{path}.{key}", "missing")
    return mapping[key]


def _number(value, path, minimum=None, strict=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    v = float(value)
    if minimum is not None:
        if strict and not v > minimum:
            raise ConfigError(path, f"must be > {minimum} (got {v!r})")
        if not strict and not v >= minimum:
            raise ConfigError(path, f"must be >= {minimum} (got {v!r})")
    return v


def _theta(value, path):
    if value in ("inf", "infinity"):
        return math.inf
    return _number(value, path, minimum=0.0, strict=True)


def load_device(block, path, base_dir="."):
    if not isinstance(block, dict):
        raise ConfigError(path, "expected an object")
    if "profile" in block:
        profile_path = os.path.join(base_dir, str(block["profile"]))
        mode_index = int(_number(_require(block, "mode_index", path),
                                 f"{path}.mode_index", minimum=1))
        gamma1 = _number(_require(block, "gamma1", path), f"{path}.gamma1",
                         minimum=0.0)
        return derive_device(load_profile(profile_path), mode_index, gamma1)
    params = DeviceParams(
        omega0=_number(_require(block, "omega0", path), f"{path}.omega0"),
        kerr=_number(_require(block, "kerr", path), f"{path}.kerr"),
        gamma1=_number(_require(block, "gamma1", path), f"{path}.gamma1"),
        gamma2=_number(_require(block, "gamma2", path), f"{path}.gamma2"),
        gamma3=_number(_require(block, "gamma3", path), f"{path}.gamma3"),
        phi1=_number(block.get("phi1", 0.0), f"{path}.phi1"),
        phi2=_number(block.get("phi2", 0.0), f"{path}.phi2"),
        phi3=_number(block.get("phi3", 0.0), f"{path}.phi3"),
    )
    report = validate(params)
    if not report.ok:
        raise ConfigError(path, "; ".join(report.violations))
    return params


def _resolve_amplitude(value, path, device):
    if isinstance(value, dict):
        frac = _number(_require(value, "times_critical", path),
                       f"{path}.times_critical", minimum=0.0)
        crit = critical_point(device)
        if not crit.exists:
            raise ConfigError(path, "times_critical needs a critical point "
                                    "(|kerr| > sqrt(3)*gamma3)")
        return frac * crit.drive
    return _number(value, path, minimum=0.0)


def _load_grid(block, path):
    start = _number(_require(block, "start", path), f"{path}.start")
    stop = _number(_require(block, "stop", path), f"{path}.stop")
    count = _require(block, "count", path)
    if isinstance(count, bool) or not isinstance(count, int):
        raise ConfigError(f"{path}.count", f"expected an integer, got {count!r}")
    if count < 2:
        raise ConfigError(f"{path}.count", f"must be >= 2 (got {count})")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ConfigError(path, "range must be finite")
    step = (stop - start) / (count - 1)
    return tuple(start + step * i for i in range(count))


def load_config(data, base_dir=".") -> SweepConfig:
    """Build a :class:`SweepConfig` from a parsed JSON document."""
    if not isinstance(data, dict):
        raise ConfigError("$", "top level must be an object")
    schema = data.get("schema")
    if schema != SCHEMA_VERSION:
        raise ConfigError("schema", f"expected {SCHEMA_VERSION}, got {schema!r}")
    device = load_device(_require(data, "device", "$"), "device", base_dir)

    omega_grid: tuple[float, ...] = ()
    amplitudes: tuple[float, ...] = ()
    psi1 = 0.0
    if "drive" in data:
        drive = data["drive"]
        if not isinstance(drive, dict):
            raise ConfigError("drive", "expected an object")
        omega_grid = _load_grid(_require(drive, "omega_p", "drive"), "drive.omega_p")
        raw = _require(drive, "b1_in", "drive")
        if not isinstance(raw, list):
            raw = [raw]
        amplitudes = tuple(_resolve_amplitude(v, f"drive.b1_in[{i}]", device)
                           for i, v in enumerate(raw))
        psi1 = _number(drive.get("psi1", 0.0), "drive.psi1")

    env = ThermalEnv()
    if "env" in data:
        block = data["env"]
        if not isinstance(block, dict):
            raise ConfigError("env", "expected an object")
        env = ThermalEnv(
            theta1=_theta(block.get("theta1", "inf"), "env.theta1"),
            theta2=_theta(block.get("theta2", "inf"), "env.theta2"),
            theta3=_theta(block.get("theta3", "inf"), "env.theta3"),
        )

    offsets: tuple[float, ...] = ()
    offsets_absolute = False
    if "offsets" in data and "signal_frequencies" in data:
        raise ConfigError("offsets", "give offsets or signal_frequencies, not both")
    if "offsets" in data:
        offsets = tuple(_number(v, f"offsets[{i}]")
                        for i, v in enumerate(data["offsets"]))
    elif "signal_frequencies" in data:
        offsets = tuple(_number(v, f"signal_frequencies[{i}]")
                        for i, v in enumerate(data["signal_frequencies"]))
        offsets_absolute = True

    fractions = tuple(_number(v, f"pump_fractions[{i}]", minimum=0.0)
                      for i, v in enumerate(data.get("pump_fractions", [])))

    return SweepConfig(device=device, omega_p_grid=omega_grid,
                       amplitudes=amplitudes, psi1=psi1, env=env,
                       offsets=offsets, offsets_absolute=offsets_absolute,
                       pump_fractions=fractions)


def load_config_file(path) -> SweepConfig:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return load_config(data, base_dir=os.path.dirname(os.path.abspath(path)))


def run_steady_sweep(config: SweepConfig) -> Table:
    """Pump response over the frequency grid, one row per branch.

    Multivalued regions appear as several rows at the same frequency; the
    reflection columns are NaN for rows with zero drive, where the
    coefficient is undefined.
    """
    if not config.omega_p_grid or not config.amplitudes:
        raise ConfigError("drive", "steady-sweep needs drive.omega_p and drive.b1_in")
    table = Table(list(STEADY_COLUMNS))
    for amp in config.amplitudes:
        for omega_p in config.omega_p_grid:
            drive = PumpDrive(omega_p=omega_p, amplitude=amp, phase=config.psi1)
            for state in steady_states(config.device, drive):
                if amp > 0.0:
                    refl = reflection_coefficient(state, drive)
                    mag, ang = abs(refl), cmath.phase(refl)
                else:
                    mag = ang = math.nan
                table.append(amp, omega_p, state.branch_index, state.energy,
                             state.amplitude, state.phase, mag, ang,
                             state.lambda_slow.real, state.lambda_slow.imag,
                             state.stable)
    return table


def run_gain_sweep(config: SweepConfig) -> Table:
    """Parametric and intermodulation gain over (drive, frequency, offset).

    Diverged points carry IEEE infinities plus the flag; no grid point is
    dropped.
    """
    if not config.omega_p_grid or not config.amplitudes:
        raise ConfigError("drive", "gain-sweep needs drive.omega_p and drive.b1_in")
    if not config.offsets:
        raise ConfigError("offsets", "gain-sweep needs offsets or signal_frequencies")
    table = Table(list(GAIN_COLUMNS))
    for amp in config.amplitudes:
        for omega_p in config.omega_p_grid:
            drive = PumpDrive(omega_p=omega_p, amplitude=amp, phase=config.psi1)
            for state in steady_states(config.device, drive):
                for value in config.offsets:
                    omega = value - omega_p if config.offsets_absolute else value
                    gs = parametric_gain(config.device, state, drive, omega)
                    gi = intermodulation_gain(config.device, state, drive, omega)
                    diverged = not (math.isfinite(gs) and math.isfinite(gi))
                    table.append(amp, omega_p, state.branch_index, omega,
                                 gs, gi, diverged)
    return table


def run_squeeze_sweep(config: SweepConfig) -> Table:
    """Zero-offset squeezing extrema at the critical pump frequency."""
    if not config.pump_fractions:
        raise ConfigError("pump_fractions", "squeeze-sweep needs pump_fractions")
    crit = critical_point(config.device)
    if not crit.exists:
        raise ConfigError("device", "squeeze-sweep needs a critical point "
                                    "(|kerr| > sqrt(3)*gamma3)")
    table = Table(list(SQUEEZE_COLUMNS))
    for row in squeeze_vs_pump(config.device, config.env,
                               config.pump_fractions, psi1=config.psi1):
        table.append(row.fraction, row.p_min0, row.p_max0, row.phi_min,
                     row.above_critical, row.diverged)
    return table


def run_critical(device: DeviceParams) -> Table:
    """Single-row record of the critical operating point."""
    crit = critical_point(device)
    table = Table(list(CRITICAL_COLUMNS))
    table.append(crit.exists, crit.energy, crit.omega_p, crit.drive,
                 crit.ill_conditioned)
    return table


def run_line_derive(profile_path, mode_index: int, gamma1: float) -> Table:
    """Derived lumped parameters of one line mode, plus the raw quadratures."""
    profile = load_profile(profile_path)
    mode = solve_modes(profile, mode_index)[mode_index - 1]
    x = profile.x
    quad_u4_dl = float(np.trapezoid(mode.u**4 * profile.dL, x))
    quad_u2_r0 = float(np.trapezoid(mode.u**2 * profile.R0, x))
    quad_u4_dr = float(np.trapezoid(mode.u**4 * profile.dR, x))
    table = Table(list(LINE_COLUMNS))
    table.append(mode.omega_n, kerr_constant(profile, mode), float(gamma1),
                 gamma2_from_profile(profile, mode),
                 gamma3_from_profile(profile, mode),
                 quad_u4_dl, quad_u2_r0, quad_u4_dr)
    return table
