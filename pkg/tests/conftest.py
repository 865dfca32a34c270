import math

import numpy as np
import pytest

from kerrcav import DeviceParams, LineProfile

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def fig_device() -> DeviceParams:
    """Workhorse softening-Kerr device in omega0 = 1 units.

    gamma3 is tied to the Kerr constant so two-photon loss is present but
    the bistability condition |K| > sqrt(3)*gamma3 holds comfortably.
    """
    kerr = -1e-4
    return DeviceParams(omega0=1.0, kerr=kerr, gamma1=0.01, gamma2=0.011,
                        gamma3=0.01 * abs(kerr) / SQRT3)


@pytest.fixture
def lossless_device() -> DeviceParams:
    """Strong-Kerr single-port device (no internal loss)."""
    return DeviceParams(omega0=1.0, kerr=5.0, gamma1=1e-4, gamma2=0.0,
                        gamma3=0.0)


def make_uniform_profile(n_grid=2000, length=1.0, c=1.0, l0=1.0,
                         dl=0.1, r0=0.05, dr=0.02, i_c=1.0, hbar=1.0):
    ones = np.ones(n_grid)
    return LineProfile(length=length, I_c=i_c, hbar=hbar,
                       C=c * ones, L0=l0 * ones, dL=dl * ones,
                       R0=r0 * ones, dR=dr * ones)


@pytest.fixture
def uniform_profile() -> LineProfile:
    return make_uniform_profile()
