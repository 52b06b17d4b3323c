"""Shared test utilities: independent evaluation pipelines and grids."""

import math

import numpy as np

from horizonent import (
    SqueezingTriple,
    entropy_f,
    partial_trace,
    schwarzschild_state_product,
    symplectic_eigenvalues,
)
from horizonent.states import Mode


def mutual_information_generic(triple: SqueezingTriple) -> float:
    """Mutual information of the outer modes via the matrix pipeline.

    Builds the four-mode state, traces to the outer pair and to each
    single outer mode, and combines entropies of symplectic spectra.
    Completely independent of the closed-form route.
    """
    sigma = schwarzschild_state_product(triple)
    out_pair = partial_trace(sigma, {Mode.LAMBDA_OUT, Mode.NU_OUT})
    pair_spectrum = symplectic_eigenvalues(out_pair).values
    s_joint = sum(entropy_f(max(v, 1.0)) for v in pair_spectrum)
    s_single = 0.0
    for mode in (Mode.LAMBDA_OUT, Mode.NU_OUT):
        single = partial_trace(sigma, {mode})
        nu_val = symplectic_eigenvalues(single).values[0]
        s_single += entropy_f(max(nu_val, 1.0))
    return s_single - s_joint


def out_out_m_exponential(xi, l, n):
    """The closed-form m rewritten purely in exponentials.

    Same function as the hyperbolic form, derived by substituting
    cosh x = (e^x + e^-x)/2 and sinh x = (e^x - e^-x)/2 and regrouping;
    serves as an independent re-derivation for cross-checks.
    """
    e = math.exp
    c2l = 0.5 * (e(2 * l) + e(-2 * l))
    c2n = 0.5 * (e(2 * n) + e(-2 * n))
    sl = 0.5 * (e(l) - e(-l))
    sn = 0.5 * (e(n) - e(-n))
    cxi_sq = 0.25 * (e(xi) + e(-xi)) ** 2
    sxi_sq = 0.25 * (e(xi) - e(-xi)) ** 2
    c2xi = 0.5 * (e(2 * xi) + e(-2 * xi))
    s2xi = 0.5 * (e(2 * xi) - e(-2 * xi))
    num = 2 * c2l * c2n * cxi_sq + 3 * c2xi - 4 * sl * sn * s2xi - 1
    den = 2 * ((c2l + c2n) * cxi_sq - 2 * sxi_sq + 2 * sl * sn * s2xi)
    return num / den


def squeezing_grid(values=(0.0, 0.3, 0.7, 1.2, 2.0)):
    """The 125-point (xi, l, n) cube used by the dual-construction checks."""
    return [(xi, l, n) for xi in values for l in values for n in values]


def random_physical_cm(rng, n_modes):
    """A random physical covariance matrix: squeezers applied to a thermal state."""
    from horizonent import CovarianceMatrix, apply_symplectic, two_mode_squeezer

    diag = np.repeat(1.0 + rng.uniform(0.0, 2.0, n_modes), 2)
    sigma = CovarianceMatrix(np.diag(diag))
    for _ in range(3):
        i, j = rng.choice(n_modes, size=2, replace=False)
        sigma = apply_symplectic(two_mode_squeezer(rng.uniform(-1.0, 1.0), i, j, n_modes), sigma)
    return sigma


def random_symplectic(rng, n_modes):
    """A random symplectic built from two-mode squeezers."""
    from horizonent import SymplecticMatrix, two_mode_squeezer

    total = np.eye(2 * n_modes)
    for _ in range(3):
        i, j = rng.choice(n_modes, size=2, replace=False)
        total = two_mode_squeezer(rng.uniform(-1.0, 1.0), i, j, n_modes).entries @ total
    return SymplecticMatrix(total)
