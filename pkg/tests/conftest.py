"""Shared fixtures. Expensive brackets and Monte Carlo runs are session-scoped
so the module tests and the acceptance gate reuse one computation."""

import math

import pytest
from scipy import integrate as scipy_integrate

import vacgas as vg


@pytest.fixture(scope="session")
def constants():
    return vg.make_constants()


@pytest.fixture(scope="session")
def fd_spec():
    return vg.DistributionSpec.fermi_dirac(25.0, 2.0)


@pytest.fixture(scope="session")
def fd_direct(fd_spec):
    return vg.bracket_direct(vg.reduce_distribution(fd_spec))


@pytest.fixture(scope="session")
def fd_em(fd_spec):
    return vg.bracket_euler_maclaurin(vg.reduce_distribution(fd_spec))


@pytest.fixture(scope="session")
def fd_direct_by_cutoff(fd_direct):
    out = {25.0: fd_direct}
    for lam in (20.0, 30.0):
        spec = vg.DistributionSpec.fermi_dirac(lam, 2.0)
        out[lam] = vg.bracket_direct(vg.reduce_distribution(spec))
    return out


@pytest.fixture(scope="session")
def mc_sharp_unit():
    """10^7-sample box estimate for the unit sharp cutoff; exact mean pi/24."""
    config = vg.McConfig(vg.DistributionSpec.sharp(1.0), samples=10_000_000, seed=7)
    return vg.estimate_p_in(config)


@pytest.fixture(scope="session")
def mc_fd(fd_spec):
    config = vg.McConfig(fd_spec, samples=10_000_000, seed=11)
    return vg.estimate_p_in(config)


@pytest.fixture(scope="session")
def fd_volume_integral(fd_spec):
    """Quadrature value of the octant integral J = (pi/6) int r^3 f(r) dr."""
    hi = fd_spec.cutoff + 40.0 / fd_spec.sharpness
    value, _ = scipy_integrate.quad(
        lambda r: r**3 * vg.eval_f(fd_spec, r),
        0.0,
        hi,
        points=[fd_spec.cutoff],
        limit=200,
        epsabs=0.0,
        epsrel=1e-12,
    )
    return math.pi / 6.0 * value
