import numpy as np
import pytest

from kerrcav import cubic_discriminant, real_roots


def poly(coeffs, x):
    c3, c2, c1, c0 = coeffs
    return ((c3 * x + c2) * x + c1) * x + c0


def test_random_cubics_match_numpy_roots():
    rng = np.random.default_rng(7)
    for _ in range(300):
        coeffs = rng.uniform(-5.0, 5.0, size=4)
        if abs(coeffs[0]) < 1e-3:
            coeffs[0] = 1e-3
        got = real_roots(*coeffs)
        expected = sorted(r.real for r in np.roots(coeffs)
                          if abs(r.imag) <= 1e-9 * max(1.0, abs(r)))
        assert len(got) == len(expected)
        for g, e in zip(got, expected):
            assert g == pytest.approx(e, rel=1e-7, abs=1e-9)


def test_residuals_are_small():
    rng = np.random.default_rng(11)
    for _ in range(300):
        coeffs = rng.uniform(-3.0, 3.0, size=4) * 10.0 ** rng.integers(-4, 4)
        if coeffs[0] == 0.0:
            continue
        for r in real_roots(*coeffs):
            scale = max(abs(coeffs[0] * r**3), abs(coeffs[1] * r**2),
                        abs(coeffs[2] * r), abs(coeffs[3]), 1e-300)
            assert abs(poly(coeffs, r)) <= 1e-10 * scale


def test_linear_degeneration():
    assert real_roots(0.0, 0.0, 2.0, -6.0) == [3.0]
    assert real_roots(0.0, 0.0, 0.0, 1.0) == []


def test_quadratic_degeneration():
    roots = real_roots(0.0, 1.0, -3.0, 2.0)
    assert roots == pytest.approx([1.0, 2.0])
    assert real_roots(0.0, 1.0, 0.0, 1.0) == []
    # double root reported once
    assert real_roots(0.0, 1.0, -4.0, 4.0) == pytest.approx([2.0])


def test_three_known_roots():
    # (x - 1)(x - 2)(x - 4) = x^3 - 7x^2 + 14x - 8
    assert real_roots(1.0, -7.0, 14.0, -8.0) == pytest.approx([1.0, 2.0, 4.0])


def test_double_root_cubic():
    # (x - 2)^2 (x - 7)
    roots = real_roots(1.0, -11.0, 32.0, -28.0)
    assert len(roots) == 3
    assert roots[0] == pytest.approx(2.0, rel=1e-6)
    assert roots[1] == pytest.approx(2.0, rel=1e-6)
    assert roots[2] == pytest.approx(7.0, rel=1e-10)


def test_triple_root_snaps_to_inflection():
    # (x - 5)^3 = x^3 - 15x^2 + 75x - 125
    roots = real_roots(1.0, -15.0, 75.0, -125.0)
    assert roots == [5.0]


def test_one_real_root():
    # x^3 + x + 10 has the single real root -2 (x = -2: -8 - 2 + 10 = 0)
    roots = real_roots(1.0, 0.0, 1.0, 10.0)
    assert roots == pytest.approx([-2.0])


def test_discriminant_signs():
    assert cubic_discriminant(1.0, -7.0, 14.0, -8.0) > 0.0   # three distinct
    assert cubic_discriminant(1.0, 0.0, 1.0, 10.0) < 0.0     # one real
    assert cubic_discriminant(1.0, -11.0, 32.0, -28.0) == pytest.approx(0.0, abs=1e-9)
