"""Brute-force number-basis oracle for the two-mode squeezed state.

Everything here works in a truncated Fock basis and knows nothing about
the closed-form machinery: entropies come from the Schmidt spectrum,
covariance entries from ladder-operator matrix elements.  Agreement with
the analytic results anchors both the squeezer and the entropy
conventions against first principles.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .gaussian import CovarianceMatrix

DEFAULT_TRUNCATION = 60


@dataclass(frozen=True)
class TruncatedTwoModeState:
    """Schmidt-diagonal two-mode state with amplitudes on |k>|k>, k < d.

    The norm defect 1 - sum(a_k^2) is bounded by tanh(r)**(2d) for the
    squeezed-vacuum amplitudes.
    """

    truncation: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.truncation < 1:
            raise InvalidArgumentError("truncation must be a positive integer")
        amps = np.asarray(self.amplitudes, dtype=float).copy()
        if amps.shape != (self.truncation,):
            raise InvalidArgumentError("amplitudes must have length equal to the truncation")
        norm_sq = float(np.dot(amps, amps))
        if norm_sq > 1.0 + 1e-12:
            raise InvalidArgumentError(f"state norm exceeds 1: {norm_sq}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm_squared(self) -> float:
        return float(np.dot(self.amplitudes, self.amplitudes))


def truncated_tms(r: float, d: int = DEFAULT_TRUNCATION) -> TruncatedTwoModeState:
    """Two-mode squeezed vacuum amplitudes tanh(r)**k / cosh(r), k < d."""
    if d < 1:
        raise InvalidArgumentError("truncation must be a positive integer")
    if not (math.isfinite(r) and r >= 0.0):
        raise InvalidArgumentError("squeezing must be finite and non-negative")
    amps = np.power(math.tanh(r), np.arange(d)) / math.cosh(r)
    return TruncatedTwoModeState(d, amps)


def reduced_spectrum(state: TruncatedTwoModeState) -> np.ndarray:
    """Eigenvalues of either reduced mode: a geometric distribution."""
    p = state.amplitudes ** 2
    return p / p.sum()


def reduced_entropy(state: TruncatedTwoModeState) -> float:
    """Entropy of either reduced mode in ebits."""
    p = reduced_spectrum(state)
    p = p[p > 0.0]
    return float(-(p * np.log2(p)).sum())


def mean_occupation(state: TruncatedTwoModeState) -> float:
    """Mean photon number of either reduced mode; tends to sinh(r)^2."""
    p = reduced_spectrum(state)
    return float((np.arange(state.truncation) * p).sum())


def second_moments_matrix(state: TruncatedTwoModeState) -> np.ndarray:
    """Raw quadrature second moments from truncated ladder-operator algebra.

    For the Schmidt-diagonal coefficient matrix C the two-mode
    expectation of M (x) N is tr(C M C N^T) / tr(C C); operators are the
    d x d truncations, so leakage past |d-1> is part of the measured
    truncation error.  Deep truncation can leave the matrix marginally
    subphysical, which is why this returns a plain array.
    """
    d = state.truncation
    lower = np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)
    ident = np.eye(d, dtype=complex)
    x_op = lower + lower.conj().T
    p_op = 1j * (lower.conj().T - lower)
    coeff = np.diag(state.amplitudes).astype(complex)
    norm_sq = state.norm_squared

    def expect(m1, m2):
        return np.trace(coeff @ m1 @ coeff @ m2.T) / norm_sq

    quads = [(x_op, ident), (p_op, ident), (ident, x_op), (ident, p_op)]
    sigma = np.zeros((4, 4))
    for i, (a_i, b_i) in enumerate(quads):
        for j, (a_j, b_j) in enumerate(quads):
            if j < i:
                continue
            sym = 0.5 * (expect(a_i @ a_j, b_i @ b_j) + expect(a_j @ a_i, b_j @ b_i))
            sigma[i, j] = sigma[j, i] = sym.real
    return sigma


def second_moments(state: TruncatedTwoModeState) -> CovarianceMatrix:
    """Quadrature covariance matrix of the truncated state (validated)."""
    return CovarianceMatrix(second_moments_matrix(state))
