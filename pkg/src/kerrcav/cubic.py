"""Closed-form real-root solver for cubics with graceful degeneration.

Roots are obtained from the Cardano closed form (evaluated trigonometrically
when all three roots are real, which is the numerically stable variant) and
then polished with a few Newton steps on the original polynomial.  Leading
coefficients of exactly zero degrade to the quadratic/linear cases, so a
vanishing nonlinearity never divides by zero.
"""

import math

# A depressed cubic whose roots all sit within TRIPLE_TOL of each other
# (relative to the inflection point) is treated as a triple root at the
# inflection: such clusters are not resolvable in double precision once
# coefficient and input rounding (one ulp of a detuning difference enters
# cube-root amplified) are accounted for.
TRIPLE_TOL = 1e-4


def cubic_discriminant(c3: float, c2: float, c1: float, c0: float) -> float:
    """Discriminant of c3*x^3 + c2*x^2 + c1*x + c0 (> 0: three distinct real roots)."""
    return (
        18.0 * c3 * c2 * c1 * c0
        - 4.0 * c2**3 * c0
        + c2**2 * c1**2
        - 4.0 * c3 * c1**3
        - 27.0 * c3**2 * c0**2
    )


def _polish(root: float, c3: float, c2: float, c1: float, c0: float) -> float:
    for _ in range(3):
        f = ((c3 * root + c2) * root + c1) * root + c0
        # at a multiple root f and f' are both rounding noise and their
        # ratio is a garbage step; stop once f is below the noise floor
        scale = (abs(c3 * root**3) + abs(c2 * root**2)
                 + abs(c1 * root) + abs(c0))
        if abs(f) <= 1e-15 * scale:
            break
        fp = (3.0 * c3 * root + 2.0 * c2) * root + c1
        if fp == 0.0:
            break
        candidate = root - f / fp
        f_new = ((c3 * candidate + c2) * candidate + c1) * candidate + c0
        if abs(f_new) >= abs(f):
            break
        root = candidate
    return root


def real_roots(c3: float, c2: float, c1: float, c0: float) -> list[float]:
    """Return all real roots of the cubic, ascending.

    Degenerate leading coefficients are handled exactly (quadratic, linear,
    constant).  A cluster of three mutually unresolvable roots is collapsed
    to the inflection point -c2/(3*c3), which is exact for a triple root.
    """
    if c3 == 0.0:
        if c2 == 0.0:
            if c1 == 0.0:
                return []
            return [-c0 / c1]
        disc = c1 * c1 - 4.0 * c2 * c0
        if disc < 0.0:
            return []
        s = math.sqrt(disc)
        pair = [(-c1 - s) / (2.0 * c2), (-c1 + s) / (2.0 * c2)]
        return sorted(pair) if disc > 0.0 else [pair[0]]

    a = c2 / c3
    b = c1 / c3
    c = c0 / c3
    # depressed form t^3 + p t + q with x = t - a/3
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c

    spread = max(math.sqrt(abs(p)), abs(q) ** (1.0 / 3.0))
    if a != 0.0 and spread <= TRIPLE_TOL * abs(a / 3.0):
        return [-a / 3.0]

    disc = -4.0 * p**3 - 27.0 * q * q
    # an exact double root has disc = 0 but rounds either way; a band scaled
    # by the cancelling terms keeps fold pairs from vanishing into the
    # single-root branch
    disc_scale = 4.0 * abs(p) ** 3 + 27.0 * q * q
    if p < 0.0 and disc >= -1e-14 * disc_scale:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        ts = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
    elif p == 0.0 and q == 0.0:
        ts = [0.0]
    else:
        s = math.sqrt(max(q * q / 4.0 + p**3 / 27.0, 0.0))
        ts = [math.copysign(abs(-q / 2.0 + s) ** (1.0 / 3.0), -q / 2.0 + s)
              + math.copysign(abs(-q / 2.0 - s) ** (1.0 / 3.0), -q / 2.0 - s)]

    return sorted(_polish(t - a / 3.0, c3, c2, c1, c0) for t in ts)
