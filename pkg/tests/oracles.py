"""Independent brute-force oracles used by the tests.

Everything here works from the pump cubic's coefficients or from direct
scanning only, never from the closed-form operating-point formulas it is
used to check.
"""

import math

import numpy as np

from kerrcav import PumpDrive, cubic_coefficients, cubic_discriminant


def disc_at(params, omega_p, amplitude):
    drive = PumpDrive(omega_p=omega_p, amplitude=amplitude)
    return cubic_discriminant(*cubic_coefficients(params, drive))


def _max_on_curve_energy(params, amplitude):
    # largest E solving E*(gamma + gamma3*E)^2 = 2*gamma1*b^2 bounds every
    # steady state (the squared drive balance with zero detuning mismatch)
    def head(energy):
        return 2.0 * params.gamma1 * amplitude**2 / energy \
            - (params.gamma + params.gamma3 * energy) ** 2

    hi = 1.0
    while head(hi) > 0.0:
        hi *= 2.0
    lo = 1e-300
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if head(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return hi


def _scan_window(params, amplitude):
    # at any fold the slow relaxation root vanishes, which forces
    # |delta + 2*K*E| <= sqrt(K^2 + gamma3^2)*E with E below the curve top,
    # so all folds live within this detuning span
    e_top = _max_on_curve_energy(params, amplitude)
    half = 3.0 * (abs(params.kerr) + params.gamma3) * e_top + 3.0 * params.gamma
    return params.omega0 - half, params.omega0 + half


def max_disc_over_omega(params, amplitude, n_grid=2000):
    """Maximum cubic discriminant over pump frequency (grid + golden section)."""
    lo, hi = _scan_window(params, amplitude)
    omegas = np.linspace(lo, hi, n_grid)
    values = [disc_at(params, w, amplitude) for w in omegas]
    i = int(np.argmax(values))
    a = omegas[max(0, i - 1)]
    b = omegas[min(n_grid - 1, i + 1)]
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - gr * (b - a)
    d = a + gr * (b - a)
    fc = disc_at(params, c, amplitude)
    fd = disc_at(params, d, amplitude)
    for _ in range(300):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - gr * (b - a)
            fc = disc_at(params, c, amplitude)
        else:
            a, c, fc = c, d, fd
            d = a + gr * (b - a)
            fd = disc_at(params, d, amplitude)
        if b - a <= 1e-17 * max(1.0, abs(a)):
            break
    best = 0.5 * (a + b)
    return disc_at(params, best, amplitude), best


def brute_force_critical(params, b_lo_factor=0.25, b_hi_factor=4.0,
                         reference_amplitude=1.0):
    """Detect the critical point from discriminant sign changes alone.

    Bisects the smallest drive for which the cubic acquires three real
    roots somewhere, then refines the frequency by bisecting the vanishing
    of the depressed-cubic quadratic coefficient (c2^2 - 3 c3 c1 = 0, the
    condition for the inflection point to be the fold).  Returns
    (amplitude, omega_p, energy).
    """
    b_lo = b_lo_factor * reference_amplitude
    b_hi = b_hi_factor * reference_amplitude
    assert max_disc_over_omega(params, b_lo)[0] < 0.0, "b_lo not sub-critical"
    assert max_disc_over_omega(params, b_hi)[0] > 0.0, "b_hi not super-critical"
    for _ in range(80):
        mid = 0.5 * (b_lo + b_hi)
        if max_disc_over_omega(params, mid)[0] > 0.0:
            b_hi = mid
        else:
            b_lo = mid
    amplitude = 0.5 * (b_lo + b_hi)
    _, omega_seed = max_disc_over_omega(params, amplitude)

    def depressed_quadratic(omega_p):
        drive = PumpDrive(omega_p=omega_p, amplitude=amplitude)
        c3, c2, c1, _ = cubic_coefficients(params, drive)
        return c2 * c2 - 3.0 * c3 * c1

    span = abs(params.omega0 - omega_seed) + params.gamma
    grid = np.linspace(omega_seed - 0.5 * span, omega_seed + 0.5 * span, 2001)
    values = [depressed_quadratic(w) for w in grid]
    zeros = []
    for i in range(len(grid) - 1):
        if values[i] == 0.0:
            zeros.append(grid[i])
        elif values[i] * values[i + 1] < 0.0:
            lo, hi = grid[i], grid[i + 1]
            f_lo = values[i]
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fm = depressed_quadratic(mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if (fm > 0.0) == (f_lo > 0.0):
                    lo, f_lo = mid, fm
                else:
                    hi = mid
            zeros.append(0.5 * (lo + hi))
    assert zeros, "no inflection-fold frequency found near the seed"
    omega_p = min(zeros, key=lambda z: abs(z - omega_seed))
    drive = PumpDrive(omega_p=omega_p, amplitude=amplitude)
    c3, c2, c1, _ = cubic_coefficients(params, drive)
    energy = -c2 / (3.0 * c3)
    amplitude_refined = math.sqrt(
        ((c3 * energy + c2) * energy + c1) * energy / (2.0 * params.gamma1))
    return amplitude_refined, omega_p, energy


def fold_frequencies_from_root_count(params, amplitude, solve, n_grid=4001):
    """Pump frequencies where the root count changes, by discriminant bisection.

    ``solve`` is the root solver under test (count source); the transition
    frequencies themselves come from bisecting the discriminant sign, which
    is independent of how the roots are extracted.
    """
    lo, hi = _scan_window(params, amplitude)
    omegas = np.linspace(lo, hi, n_grid)
    counts = [len(solve(params, PumpDrive(omega_p=w, amplitude=amplitude)))
              for w in omegas]
    transitions = []
    for i in range(len(omegas) - 1):
        if counts[i] == counts[i + 1]:
            continue
        a, b = omegas[i], omegas[i + 1]
        d_lo = disc_at(params, a, amplitude)
        for _ in range(200):
            mid = 0.5 * (a + b)
            dm = disc_at(params, mid, amplitude)
            if (dm > 0.0) == (d_lo > 0.0):
                a, d_lo = mid, dm
            else:
                b = mid
        transitions.append(0.5 * (a + b))
    return sorted(transitions)


def scan_phase_extrema(p_of_phi, n_phases=10_000):
    """Grid minimum/maximum of a phase-periodic function over [0, pi)."""
    phis = np.linspace(0.0, math.pi, n_phases, endpoint=False)
    values = np.array([p_of_phi(p) for p in phis])
    return float(values.min()), float(values.max())
