"""Reduction of a distribution to the one-dimensional summand F(u) = u^2 I(u)."""

import math

import numpy as np
import pytest

from vacgas import (
    DistributionSpec,
    DomainError,
    Family,
    ReducedIntegrand,
    SingularityError,
    eval_f,
    inner_integral,
    reduce_distribution,
    reduced_big_f,
)

FD = DistributionSpec.fermi_dirac(25.0, 2.0)


def fd_inner_closed_form(spec, u):
    # I(u) = 2 (cutoff - u) + (2/b) log(1 + exp(-b (cutoff - u)))
    b = spec.sharpness
    z = b * (spec.cutoff - u)
    softplus = math.log1p(math.exp(-abs(z))) + max(-z, 0.0)
    return 2.0 * (spec.cutoff - u) + (2.0 / b) * softplus


# -- closed-form checks -------------------------------------------------------


def test_fd_inner_deep_inside():
    assert inner_integral(FD, 10.0) == pytest.approx(fd_inner_closed_form(FD, 10.0), rel=1e-9)
    assert inner_integral(FD, 10.0) == pytest.approx(30.0 + math.log1p(math.exp(-30.0)), rel=1e-9)


def test_fd_inner_at_cutoff():
    assert inner_integral(FD, 25.0) == pytest.approx(math.log(2.0), rel=1e-9)


def test_fd_inner_tail_positive_and_tiny():
    val = inner_integral(FD, 40.0)
    assert 0.0 < val < 1e-12


def test_sharp_inner_is_linear():
    step = DistributionSpec.sharp(25.0)
    for u in (0.0, 5.0, 24.0):
        assert inner_integral(step, u) == pytest.approx(2.0 * (25.0 - u), rel=1e-12)
    assert inner_integral(step, 30.0) == 0.0


def test_mb_inner_closed_form():
    mb = DistributionSpec.maxwell_boltzmann(25.0, 2.0)
    for u in (10.0, 26.0):
        assert inner_integral(mb, u) == pytest.approx(math.exp(2.0 * (25.0 - u)), rel=1e-9)


def test_be_inner_beyond_pole():
    be = DistributionSpec.bose_einstein(25.0, 2.0)
    expected = -math.log(-math.expm1(-2.0))
    assert inner_integral(be, 26.0) == pytest.approx(expected, rel=1e-9)


def test_be_inner_across_pole_raises():
    be = DistributionSpec.bose_einstein(25.0, 2.0)
    with pytest.raises(SingularityError):
        inner_integral(be, 10.0)


def test_inner_monotone_decreasing():
    vals = [inner_integral(FD, u) for u in (0.0, 10.0, 25.0, 40.0)]
    assert vals == sorted(vals, reverse=True)
    assert vals[-1] >= 0.0


def test_big_f_zero_at_origin():
    assert reduced_big_f(FD, 0.0) == 0.0


def test_big_f_assembly():
    u = 7.0
    assert reduced_big_f(FD, u) == pytest.approx(u * u * inner_integral(FD, u), rel=1e-12)


def test_negative_arguments_rejected():
    with pytest.raises(DomainError):
        inner_integral(FD, -1.0)
    with pytest.raises(DomainError):
        reduced_big_f(FD, -1.0)


# -- substitution identity ----------------------------------------------------


def test_inner_matches_brute_force_substitution():
    """I(u) is the x-integral of f(sqrt(x + u^2))/sqrt(x + u^2); check it
    against a 10^6-panel midpoint rule on randomly drawn smooth cases."""
    rng = np.random.default_rng(2024)
    panels = 1_000_000
    for _ in range(12):
        lam = rng.uniform(5.0, 30.0)
        b = rng.uniform(0.5, 3.0)
        spec = DistributionSpec.fermi_dirac(lam, b)
        u = rng.uniform(2.0, lam)
        top = lam + 60.0 / b
        x_hi = top * top - u * u
        x = (np.arange(panels) + 0.5) * (x_hi / panels)
        t = np.sqrt(x + u * u)
        brute = float(np.sum(eval_f(spec, t) / t)) * (x_hi / panels)
        assert inner_integral(spec, u) == pytest.approx(brute, rel=1e-8)


def test_sharp_inner_matches_brute_force_substitution():
    lam, u = 25.0, 10.0
    panels = 1_000_000
    x_hi = lam * lam - u * u
    x = (np.arange(panels) + 0.5) * (x_hi / panels)
    brute = float(np.sum(1.0 / np.sqrt(x + u * u))) * (x_hi / panels)
    assert inner_integral(DistributionSpec.sharp(lam), u) == pytest.approx(brute, rel=1e-8)


# -- ReducedIntegrand plumbing -------------------------------------------------


def test_reduce_distribution_counts_work():
    integrand = reduce_distribution(FD)
    assert integrand.f_evaluations == 0
    assert integrand.big_f_evaluations == 0
    integrand.big_f(10.0)
    assert integrand.big_f_evaluations == 1
    assert integrand.f_evaluations > 0


def test_tightened_returns_fresh_tolerance():
    integrand = reduce_distribution(FD, rel_tol=1e-8)
    tighter = integrand.tightened(1e-12)
    assert tighter.rel_tol == 1e-12
    assert tighter.spec is FD
    assert integrand.tightened(1e-6) is integrand


def test_default_n_max_covers_tail():
    assert reduce_distribution(FD).default_n_max() == 50
    assert reduce_distribution(DistributionSpec.sharp(5.0)).default_n_max() == 5
    assert reduce_distribution(DistributionSpec.fermi_dirac(25.0, 3.0)).default_n_max() == 42


def test_tail_bound_dominates_remainder():
    integrand = reduce_distribution(FD)
    bound = integrand.tail_bound(50)
    # geometric bound must cover the next actual term
    assert bound > integrand.big_f(51.0)
    assert bound < 1e-6
    sharp = reduce_distribution(DistributionSpec.sharp(5.0))
    assert sharp.tail_bound(5) == 0.0


def test_synthetic_integrand_has_no_inner():
    synthetic = ReducedIntegrand.from_function(lambda u: -2.0 * u**3)
    assert synthetic.big_f(2.0) == -16.0
    assert synthetic.default_n_max() is None
    with pytest.raises(DomainError):
        synthetic.inner(1.0)


def test_constructor_validation():
    with pytest.raises(DomainError):
        ReducedIntegrand()
    with pytest.raises(DomainError):
        ReducedIntegrand(spec=FD, big_f_func=lambda u: u)
    with pytest.raises(DomainError):
        ReducedIntegrand(spec=FD, rel_tol=1e-3)


def test_anchored_short_range_consistency():
    # below cutoff/2 the inner integral is assembled from a cached anchor at
    # zero; both branches must match the closed form where they meet
    integrand = reduce_distribution(FD)
    for u in (12.49, 12.51):
        assert integrand.inner(u) == pytest.approx(fd_inner_closed_form(FD, u), rel=1e-9)


def test_small_negative_arguments_extend_analytically():
    # boundary-derivative stencils straddle zero
    integrand = reduce_distribution(FD)
    assert integrand.inner(-1e-3) > integrand.inner(0.0)
    assert integrand.big_f(-1e-3) == pytest.approx(integrand.big_f(1e-3), rel=1e-3)
