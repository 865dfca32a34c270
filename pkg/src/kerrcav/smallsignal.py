"""Linearized response about the pump: transfer coefficients and gains.

Small signal and noise entering the three ports are carried to the test-port
output by six complex coefficients evaluated at the offset ``omega`` from the
pump frequency.  Each port contributes a direct (signal) coefficient and a
phase-conjugating one; the conjugating channel is what produces
intermodulation gain and squeezing.  All six share the resolvent denominator

    D(omega) = (-i*omega + lambda_slow) * (-i*omega + lambda_fast),

which vanishes only at marginal operating points, where the gains diverge.
"""

import cmath
import math
from dataclasses import dataclass

from .model import DeviceParams, PumpDrive
from .steady import SteadyState

# |D| below this multiple of gamma^2 means operation at an instability.
SINGULAR_TOL = 1e-14


class SingularResponse(ArithmeticError):
    """Resolvent denominator vanished: operating exactly at an instability."""


@dataclass(frozen=True)
class SmallSignalResponse:
    """Transfer coefficients from the three ports at offset ``omega``.

    ``refl_signal``/``refl_conj`` multiply the test-port input at
    omega_p + omega and its conjugate image at omega_p - omega;
    ``loss_*`` and ``tpl_*`` are the analogous coefficients for the linear
    and two-photon loss ports.  ``self_coupling`` and ``conj_coupling`` are
    the linearized drift coefficients the response derives from.
    """

    omega: float
    self_coupling: complex
    conj_coupling: complex
    lambda_slow: complex
    lambda_fast: complex
    refl_signal: complex
    refl_conj: complex
    loss_signal: complex
    loss_conj: complex
    tpl_signal: complex
    tpl_conj: complex

    def commutator_sum(self) -> float:
        """Sum |signal coef|^2 - |conjugate coef|^2 over the three ports.

        Equals 1 identically: the output mode keeps the canonical
        commutator.
        """
        return (
            abs(self.refl_signal) ** 2
            + abs(self.loss_signal) ** 2
            + abs(self.tpl_signal) ** 2
            - abs(self.refl_conj) ** 2
            - abs(self.loss_conj) ** 2
            - abs(self.tpl_conj) ** 2
        )


def linearize(params: DeviceParams, state: SteadyState, drive: PumpDrive):
    """Drift coefficients (self, conjugate) of the linearized dynamics.

    The fluctuation a about the pump obeys
    da/dt + self_coupling * a + conj_coupling * a_dagger = inputs, with

        self_coupling = i*(omega0-omega_p) + gamma + 2*(i*K + g3) * B^2,
        conj_coupling = (i*K + g3) * B^2 * exp(-2i * phase).
    """
    delta = drive.detuning(params)
    b2 = state.energy
    nonlin = (1j * params.kerr + params.gamma3) * b2
    self_coupling = 1j * delta + params.gamma + 2.0 * nonlin
    conj_coupling = nonlin * cmath.exp(-2j * state.phase)
    return self_coupling, conj_coupling


def relaxation_roots_from(self_coupling: complex, conj_coupling: complex):
    """Relaxation roots (slow, fast) from the drift coefficients.

    Roots of lambda^2 - 2*Re(self)*lambda + |self|^2 - |conj|^2, evaluated
    with the complex square root; they satisfy the Vieta relations
    sum = 2*Re(self) and product = |self|^2 - |conj|^2.
    """
    re = self_coupling.real
    radicand = re * re - abs(self_coupling) ** 2 + abs(conj_coupling) ** 2
    s = cmath.sqrt(complex(radicand, 0.0))
    return re - s, re + s


def transfer_coefficients(params: DeviceParams, state: SteadyState,
                          drive: PumpDrive, omega: float) -> SmallSignalResponse:
    """Six port-to-output transfer coefficients at offset ``omega``.

    ``omega`` is the offset from the pump frequency (rotating-frame
    convention); the conjugate coefficients mix in the image at -omega.

    Raises
    ------
    SingularResponse
        If |D(omega)| < SINGULAR_TOL * gamma^2 (operation at an
        instability, where the gain diverges).
    """
    w, v = linearize(params, state, drive)
    lam_slow, lam_fast = relaxation_roots_from(w, v)
    d = (-1j * omega + lam_slow) * (-1j * omega + lam_fast)
    if abs(d) < SINGULAR_TOL * params.gamma**2:
        raise SingularResponse(
            f"resolvent |D({omega:g})| = {abs(d):.3e} is singular")
    zw = -1j * omega + w.conjugate()
    g1 = params.gamma1
    g2 = params.gamma2
    g3 = params.gamma3
    amp = state.amplitude
    phase = state.phase
    p1, p2, p3 = params.phi1, params.phi2, params.phi3
    refl_signal = (d - 2.0 * g1 * zw) / d
    refl_conj = 2.0 * g1 * v * cmath.exp(-2j * p1) / d
    loss_signal = -2.0 * math.sqrt(g1 * g2) * zw * cmath.exp(-1j * (p1 - p2)) / d
    loss_conj = 2.0 * math.sqrt(g1 * g2) * v * cmath.exp(-1j * (p1 + p2)) / d
    tpl_signal = -2.0 * math.sqrt(2.0 * g1 * g3) * amp * zw \
        * cmath.exp(-1j * (p1 - phase - p3)) / d
    tpl_conj = 2.0 * math.sqrt(2.0 * g1 * g3) * amp * v \
        * cmath.exp(-1j * (p1 + p3 + phase)) / d
    return SmallSignalResponse(
        omega=omega,
        self_coupling=w,
        conj_coupling=v,
        lambda_slow=lam_slow,
        lambda_fast=lam_fast,
        refl_signal=refl_signal,
        refl_conj=refl_conj,
        loss_signal=loss_signal,
        loss_conj=loss_conj,
        tpl_signal=tpl_signal,
        tpl_conj=tpl_conj,
    )


def parametric_gain(params: DeviceParams, state: SteadyState,
                    drive: PumpDrive, omega: float) -> float:
    """Reflected power gain |refl_signal|^2 at offset ``omega``.

    Exceeding unity means parametric amplification.  Evaluated through the
    complex resolvent so underdamped (complex-root) operating points are
    handled; returns IEEE infinity at singular points.
    """
    try:
        resp = transfer_coefficients(params, state, drive, omega)
    except SingularResponse:
        return math.inf
    return abs(resp.refl_signal) ** 2


def intermodulation_gain(params: DeviceParams, state: SteadyState,
                         drive: PumpDrive, omega: float) -> float:
    """Image-conversion power gain |refl_conj|^2 at offset ``omega``.

    Power converted from an input at omega_p - omega to the output at
    omega_p + omega; zero without a pump, diverging (IEEE infinity) at the
    instability points.
    """
    try:
        resp = transfer_coefficients(params, state, drive, omega)
    except SingularResponse:
        return math.inf
    return abs(resp.refl_conj) ** 2
