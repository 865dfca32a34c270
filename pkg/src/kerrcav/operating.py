"""Special operating points of the Duffing-like pump response.

The response curve is treated parametrically in the photon number E, where
it is single valued: solving the pump cubic for the detuning gives

    omega_p(E) = omega0 + K*E -/+ sqrt(head(E)),
    head(E)    = 2*gamma1*b_in^2 / E - (gamma + gamma3*E)^2,

with the two signs tracing the low- and high-frequency sides of the pulled
resonance.  Folds (vertical tangents, where the system switches branch) are
the zeros of d(omega_p)/dE on the side the Kerr constant pulls toward; the
critical point is where the two folds coalesce.
"""

import math
from dataclasses import dataclass

from .model import SQRT3, DeviceParams, PumpDrive
from .steady import cubic_coefficients

# Fold pairs closer than this (slope units of |kerr|) cannot be separated
# numerically and are reported as a single tangency point.
TANGENCY_TOL = 1e-5
# Denominator |K| - sqrt(3)*gamma3 below this fraction of |K| makes the
# critical-point formulas numerically explosive.
ILL_CONDITION_TOL = 1e-9

_GRID = 1600


@dataclass(frozen=True)
class CriticalPoint:
    """Coalescence point of the two folds (onset of bistability).

    ``exists`` is False when |kerr| <= sqrt(3)*gamma3, in which case the
    remaining fields are NaN.  ``ill_conditioned`` warns that the defining
    denominator is within ILL_CONDITION_TOL of vanishing.
    """

    exists: bool
    energy: float = math.nan
    omega_p: float = math.nan
    drive: float = math.nan
    ill_conditioned: bool = False


def response_peak_detuning(params: DeviceParams, energy: float) -> float:
    """Pump frequency of the response maximum for peak photon number E.

    The peak sits where omega0 - omega_p + K*E = 0, i.e. pulled by K*E from
    the bare resonance (downward for a softening K < 0).
    """
    return params.omega0 + params.kerr * energy


def curve_head(params: DeviceParams, drive: PumpDrive, energy: float) -> float:
    """Radicand of the detuning solution; nonnegative on the response curve."""
    g3 = params.gamma3
    return 2.0 * params.gamma1 * drive.amplitude**2 / energy \
        - (params.gamma + g3 * energy) ** 2


def max_curve_energy(params: DeviceParams, drive: PumpDrive) -> float:
    """Largest photon number on the response curve (the peak), by bisection."""
    if drive.amplitude == 0.0:
        return 0.0
    hi = 1.0
    while curve_head(params, drive, hi) > 0.0:
        hi *= 2.0
    lo = 1e-300
    for _ in range(220):
        mid = 0.5 * (lo + hi)
        if curve_head(params, drive, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def curve_omega_p(params: DeviceParams, drive: PumpDrive, energy: float):
    """Pump frequencies (low side, high side) at which the curve reaches E."""
    head = max(curve_head(params, drive, energy), 0.0)
    root = math.sqrt(head)
    center = params.omega0 + params.kerr * energy
    return center - root, center + root


def _fold_slope(params: DeviceParams, drive: PumpDrive, energy: float) -> float:
    """d(omega_p)/dE on the fold side, up to the sign of kerr.

    Equals |kerr| + d(sqrt(head))/dE; negative at both curve ends and
    positive between the folds when the drive exceeds critical.
    """
    head = curve_head(params, drive, energy)
    if head <= 0.0:
        return -math.inf
    g3 = params.gamma3
    dhead = -2.0 * params.gamma1 * drive.amplitude**2 / energy**2 \
        - 2.0 * g3 * (params.gamma + g3 * energy)
    return abs(params.kerr) + dhead / (2.0 * math.sqrt(head))


def fold_side_omega_p(params: DeviceParams, drive: PumpDrive, energy: float) -> float:
    """Pump frequency at E on the side of the curve that can fold."""
    lo, hi = curve_omega_p(params, drive, energy)
    return lo if params.kerr < 0.0 else hi


def _bisect_slope_zero(params, drive, lo, hi, f_lo):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = _fold_slope(params, drive, mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, fm
        else:
            hi = mid
        if hi - lo <= 1e-13 * hi:
            break
    return 0.5 * (lo + hi)


def instability_locus(params: DeviceParams, drive: PumpDrive):
    """All (omega_p, E) fold points of the response curve, ascending in E.

    Empty when the drive is sub-critical or when |kerr| <= sqrt(3)*gamma3
    (no fold can exist for any drive).  A maximum slope within TANGENCY_TOL
    of zero is reported as the single coalesced tangency point.
    """
    if drive.amplitude == 0.0:
        return []
    if abs(params.kerr) <= SQRT3 * params.gamma3:
        return []
    e_top = max_curve_energy(params, drive)
    # the lower fold can sit many decades below the curve top at extreme
    # drives; the geometric half of the grid covers that range
    lo_es = [e_top * x for x in _geomspace(1e-14, 0.5, _GRID // 2)]
    hi_es = [e_top * (0.5 + 0.5 * (1.0 - 1e-10) * k / (_GRID // 2))
             for k in range(1, _GRID // 2 + 1)]
    grid = lo_es + hi_es
    slopes = [_fold_slope(params, drive, e) for e in grid]

    zeros = []
    for i in range(len(grid) - 1):
        if slopes[i] == 0.0:
            zeros.append(grid[i])
        elif slopes[i] * slopes[i + 1] < 0.0:
            zeros.append(_bisect_slope_zero(params, drive, grid[i], grid[i + 1], slopes[i]))

    # refine the grid maximum to catch tangencies and unresolved close pairs
    imax = max(range(len(grid)), key=lambda i: slopes[i])
    a = grid[max(0, imax - 1)]
    b = grid[min(len(grid) - 1, imax + 1)]
    e_peak, s_peak = _refine_max(params, drive, a, b)
    tol = TANGENCY_TOL * abs(params.kerr)
    if not zeros:
        if abs(s_peak) <= tol:
            zeros.append(e_peak)
        elif s_peak > tol:
            # positive bump the grid stepped over: bisect both flanks
            zeros.append(_bisect_slope_zero(params, drive, a, e_peak,
                                            _fold_slope(params, drive, a)))
            zeros.append(_bisect_slope_zero(params, drive, e_peak, b, s_peak))

    zeros.sort()
    deduped: list[float] = []
    for z in zeros:
        if deduped and abs(z - deduped[-1]) <= 1e-9 * e_top:
            continue
        deduped.append(z)
    return [(fold_side_omega_p(params, drive, e), e) for e in deduped]


def _refine_max(params, drive, a, b):
    """Golden-section maximization of the fold slope on [a, b]."""
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - gr * (b - a)
    d = a + gr * (b - a)
    fc = _fold_slope(params, drive, c)
    fd = _fold_slope(params, drive, d)
    for _ in range(200):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - gr * (b - a)
            fc = _fold_slope(params, drive, c)
        else:
            a, c, fc = c, d, fd
            d = a + gr * (b - a)
            fd = _fold_slope(params, drive, d)
        if b - a <= 1e-14 * max(abs(a), abs(b)):
            break
    e = 0.5 * (a + b)
    return e, _fold_slope(params, drive, e)


def _geomspace(lo, hi, n):
    ratio = (hi / lo) ** (1.0 / (n - 1))
    return [lo * ratio**k for k in range(n)]


def critical_point(params: DeviceParams) -> CriticalPoint:
    """Closed-form critical operating point (fold coalescence).

    When |kerr| > sqrt(3)*gamma3 the critical photon number, pump frequency
    and drive amplitude are

        E_c         = 2*gamma / (sqrt(3) (|K| - sqrt(3) g3)),
        omega0-w_pc = -gamma*sgn(K) * [4 g3 |K| + sqrt(3)(K^2+g3^2)]
                                      / (K^2 - 3 g3^2),
        b_c^2       = (4 / 3 sqrt(3)) gamma^3 (K^2+g3^2)
                                      / (gamma1 (|K| - sqrt(3) g3)^3).

    Two-photon loss raises the drive needed to reach the fold threshold and
    removes it entirely at |kerr| <= sqrt(3)*gamma3 (``exists=False``).
    """
    k = params.kerr
    g3 = params.gamma3
    margin = abs(k) - SQRT3 * g3
    if not margin > 0.0:
        return CriticalPoint(exists=False)
    g = params.gamma
    energy = 2.0 * g / (SQRT3 * margin)
    sgn = 1.0 if k > 0.0 else -1.0
    detuning = -g * sgn * (4.0 * g3 * abs(k) + SQRT3 * (k * k + g3 * g3)) \
        / (k * k - 3.0 * g3 * g3)
    drive_sq = (4.0 / (3.0 * SQRT3)) * g**3 * (k * k + g3 * g3) \
        / (params.gamma1 * margin**3)
    return CriticalPoint(
        exists=True,
        energy=energy,
        omega_p=params.omega0 - detuning,
        drive=math.sqrt(drive_sq),
        ill_conditioned=margin < ILL_CONDITION_TOL * abs(k),
    )


def fold_condition_residual(params: DeviceParams, drive: PumpDrive,
                            omega_p: float, energy: float) -> float:
    """Normalized residual of the vertical-tangent condition at (omega_p, E).

    The condition (gamma + 2 g3 E)^2 = (K^2+g3^2) E^2 - (delta + 2 K E)^2
    holds exactly on fold points; the residual is scaled by the sum of the
    three squared terms.
    """
    delta = params.omega0 - omega_p
    k = params.kerr
    g3 = params.gamma3
    t1 = (params.gamma + 2.0 * g3 * energy) ** 2
    t2 = (k * k + g3 * g3) * energy * energy
    t3 = (delta + 2.0 * k * energy) ** 2
    return abs(t1 - t2 + t3) / (t1 + t2 + t3)


def coalescence_residual(params: DeviceParams, omega_p: float, energy: float) -> float:
    """Normalized residual of the fold-coalescence condition at (omega_p, E).

    6 (K^2+g3^2) E + 4 [(omega0-omega_p) K + gamma*g3] = 0 exactly where the
    two folds merge.
    """
    delta = params.omega0 - omega_p
    k = params.kerr
    g3 = params.gamma3
    t1 = 6.0 * (k * k + g3 * g3) * energy
    t2 = 4.0 * (delta * k + params.gamma * g3)
    return abs(t1 + t2) / (abs(t1) + abs(t2))


def discriminant_at(params: DeviceParams, drive: PumpDrive) -> float:
    """Discriminant of the pump cubic (sign flips at fold frequencies)."""
    from .cubic import cubic_discriminant

    return cubic_discriminant(*cubic_coefficients(params, drive))
