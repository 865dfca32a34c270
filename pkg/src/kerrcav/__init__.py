"""Simulation and analysis toolchain for Kerr-cavity parametric amplifiers.

Covers the classical pump response with bistability, the special operating
points of the pulled resonance, small-signal parametric and intermodulation
gain, homodyne squeezing spectra with thermal inputs, and the derivation of
the lumped model from a superconducting transmission-line profile.
"""

from .cubic import cubic_discriminant, real_roots
from .fitting import (FitProblem, FitResult, NonConvergence, load_fit_problem,
                      predict_gain, predict_reflection, run_fit)
from .model import (DeviceParams, DeviceValidation, PumpDrive, validate)
from .noise import (SqueezeAtPump, SqueezeResult, ThermalEnv, lo_phase_extrema,
                    noise_power, noise_power_dc, squeeze_vs_pump,
                    thermal_occupation)
from .operating import (CriticalPoint, coalescence_residual, critical_point,
                        curve_omega_p, fold_condition_residual,
                        instability_locus, max_curve_energy,
                        response_peak_detuning)
from .smallsignal import (SingularResponse, SmallSignalResponse,
                          intermodulation_gain, linearize, parametric_gain,
                          transfer_coefficients)
from .steady import (DegenerateModel, SteadyState, UndefinedForZeroDrive,
                     cubic_coefficients, reflection_coefficient,
                     solve_pump_energy, steady_state, steady_states)
from .stripline import (LineProfile, ModeSolution, ResolutionError,
                        SameModeError, cross_kerr, derive_device,
                        gamma2_from_profile, gamma3_from_profile,
                        kerr_constant, load_profile, solve_modes)
from .sweeps import (ConfigError, SweepConfig, load_config, load_config_file,
                     run_critical, run_gain_sweep, run_line_derive,
                     run_squeeze_sweep, run_steady_sweep)
from .tableio import Table, format_float, parse_json, render, to_csv, to_json

__version__ = "0.1.0"

__all__ = [
    "CriticalPoint", "ConfigError", "DegenerateModel", "DeviceParams",
    "DeviceValidation", "FitProblem", "FitResult", "LineProfile",
    "ModeSolution", "NonConvergence", "PumpDrive", "ResolutionError",
    "SameModeError", "SingularResponse", "SmallSignalResponse",
    "SqueezeAtPump", "SqueezeResult", "SteadyState", "SweepConfig", "Table",
    "ThermalEnv", "UndefinedForZeroDrive", "coalescence_residual",
    "critical_point", "cross_kerr", "cubic_coefficients",
    "cubic_discriminant", "curve_omega_p", "derive_device", "format_float",
    "fold_condition_residual", "gamma2_from_profile", "gamma3_from_profile",
    "instability_locus", "intermodulation_gain", "kerr_constant",
    "linearize", "lo_phase_extrema", "load_config", "load_config_file",
    "load_fit_problem", "load_profile", "max_curve_energy", "noise_power",
    "noise_power_dc", "parametric_gain", "parse_json", "predict_gain",
    "predict_reflection", "real_roots", "reflection_coefficient", "render",
    "response_peak_detuning", "run_critical", "run_fit", "run_gain_sweep",
    "run_line_derive", "run_squeeze_sweep", "run_steady_sweep",
    "solve_modes", "solve_pump_energy", "squeeze_vs_pump", "steady_state",
    "steady_states", "thermal_occupation", "to_csv", "to_json",
    "transfer_coefficients", "validate",
]
