"""Symplectic algebra over covariance matrices of Gaussian field states.

Conventions, fixed project-wide:

* quadrature ordering is interleaved, (x1, p1, ..., xN, pN);
* vacuum variance is normalized to 1, so the N-mode vacuum covariance
  matrix is the identity;
* first moments are zero everywhere (all states handled here are
  squeezed vacua), so a covariance matrix fully specifies a state.

Matrices are small (N <= 8) and dense; everything is a pure function of
immutable values and safe to call concurrently.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidStateError

SYMMETRY_RTOL = 1e-12
PHYSICALITY_ATOL = 1e-9
PURITY_ATOL = 1e-8
SYMPLECTIC_ATOL = 1e-12
SPECTRUM_DET_RTOL = 1e-9


def symplectic_form(n_modes: int) -> np.ndarray:
    """The 2N x 2N symplectic form for the interleaved quadrature ordering."""
    if n_modes < 1:
        raise InvalidArgumentError("n_modes must be a positive integer")
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def _as_even_square(entries, what: str) -> np.ndarray:
    arr = np.asarray(entries, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2 or arr.shape[0] == 0:
        raise InvalidArgumentError(f"{what} must be a 2N x 2N matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{what} entries must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CovarianceMatrix:
    """Second moments of the quadratures of an N-mode Gaussian state."""

    entries: np.ndarray

    def __post_init__(self):
        arr = _as_even_square(self.entries, "covariance matrix")
        scale = max(1.0, float(np.max(np.abs(arr))))
        if float(np.max(np.abs(arr - arr.T))) > SYMMETRY_RTOL * scale:
            raise InvalidArgumentError("covariance matrix must be symmetric")
        object.__setattr__(self, "entries", arr)
        nu_min = float(np.min(_symplectic_spectrum_raw(arr)))
        if nu_min < 1.0 - PHYSICALITY_ATOL:
            raise InvalidStateError(
                f"unphysical covariance matrix: smallest symplectic eigenvalue {nu_min}"
            )

    @property
    def n_modes(self) -> int:
        return self.entries.shape[0] // 2

    @classmethod
    def vacuum(cls, n_modes: int) -> "CovarianceMatrix":
        if n_modes < 1:
            raise InvalidArgumentError("n_modes must be a positive integer")
        return cls(np.eye(2 * n_modes))


@dataclass(frozen=True)
class SymplecticMatrix:
    """A linear phase-space transformation preserving the symplectic form."""

    entries: np.ndarray

    def __post_init__(self):
        arr = _as_even_square(self.entries, "symplectic matrix")
        omega = symplectic_form(arr.shape[0] // 2)
        defect = float(np.max(np.abs(arr @ omega @ arr.T - omega)))
        if defect > SYMPLECTIC_ATOL:
            raise InvalidStateError(f"matrix is not symplectic: |S Omega S^T - Omega| = {defect}")
        object.__setattr__(self, "entries", arr)

    @property
    def n_modes(self) -> int:
        return self.entries.shape[0] // 2


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic eigenvalues of a physical covariance matrix, sorted descending."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise InvalidArgumentError("spectrum must contain at least one value")
        if any(v < 1.0 - PHYSICALITY_ATOL for v in vals):
            raise InvalidStateError(f"symplectic eigenvalues below 1: {vals}")
        if any(vals[k] < vals[k + 1] for k in range(len(vals) - 1)):
            raise InvalidArgumentError("spectrum values must be sorted descending")
        object.__setattr__(self, "values", vals)


def two_mode_squeezer(r: float, i: int, j: int, n_modes: int) -> SymplecticMatrix:
    """Two-mode squeezing transformation on modes i, j of an N-mode system.

    Acts as the identity elsewhere; on the i, j subspace the diagonal
    2x2 blocks are cosh(r) I and the off-diagonal blocks sinh(r) Z with
    Z = diag(1, -1).
    """
    if n_modes < 1:
        raise InvalidArgumentError("n_modes must be a positive integer")
    if i == j:
        raise InvalidArgumentError("squeezer modes must differ")
    if not (0 <= i < n_modes and 0 <= j < n_modes):
        raise InvalidArgumentError(f"mode indices {i}, {j} out of range for {n_modes} modes")
    if not math.isfinite(r):
        raise InvalidArgumentError("squeezing parameter must be finite")
    ch = math.cosh(r)
    sh = math.sinh(r)
    z2 = np.diag([1.0, -1.0])
    s = np.eye(2 * n_modes)
    s[2 * i:2 * i + 2, 2 * i:2 * i + 2] = ch * np.eye(2)
    s[2 * j:2 * j + 2, 2 * j:2 * j + 2] = ch * np.eye(2)
    s[2 * i:2 * i + 2, 2 * j:2 * j + 2] = sh * z2
    s[2 * j:2 * j + 2, 2 * i:2 * i + 2] = sh * z2
    return SymplecticMatrix(s)


def apply_symplectic(s: SymplecticMatrix, sigma: CovarianceMatrix) -> CovarianceMatrix:
    """Transform a state: sigma -> S sigma S^T."""
    if s.n_modes != sigma.n_modes:
        raise InvalidArgumentError(
            f"mode count mismatch: transformation has {s.n_modes}, state has {sigma.n_modes}"
        )
    return CovarianceMatrix(s.entries @ sigma.entries @ s.entries.T)


def partial_trace(sigma: CovarianceMatrix, keep) -> CovarianceMatrix:
    """Reduced state on the given modes (kept in ascending index order)."""
    modes = sorted(set(int(m) for m in keep))
    if not modes:
        raise InvalidArgumentError("keep must name at least one mode")
    if modes[0] < 0 or modes[-1] >= sigma.n_modes:
        raise InvalidArgumentError(f"mode indices {modes} out of range for {sigma.n_modes} modes")
    idx = [q for m in modes for q in (2 * m, 2 * m + 1)]
    return CovarianceMatrix(sigma.entries[np.ix_(idx, idx)])


def _symplectic_spectrum_raw(arr: np.ndarray) -> np.ndarray:
    """Symplectic eigenvalues of a symmetric matrix, descending, as ndarray.

    Primary route: |eigenvalues| of Omega^-1 sigma, which come in +/-
    pairs.  If the pairing looks degraded, falls back to the spectrum of
    the positive matrix -(Omega sigma)^2, whose eigenvalues are the
    squared symplectic eigenvalues (each twice); this avoids the
    complex-pair ambiguity near purity.
    """
    n = arr.shape[0] // 2
    omega = symplectic_form(n)
    ev = np.abs(np.linalg.eigvals(-omega @ arr))
    ev = np.sort(ev)[::-1]
    pairs = ev.reshape(n, 2)
    spread = float(np.max(np.abs(pairs[:, 0] - pairs[:, 1])))
    if spread > 1e-6 * max(1.0, float(ev[0])):
        prod = omega @ arr
        sq = np.linalg.eigvals(-(prod @ prod))
        ev = np.sqrt(np.abs(sq.real))
        ev = np.sort(ev)[::-1]
        pairs = ev.reshape(n, 2)
    return pairs.mean(axis=1)


def symplectic_eigenvalues(sigma: CovarianceMatrix) -> SymplecticSpectrum:
    """Symplectic spectrum of a physical covariance matrix."""
    arr = sigma.entries
    if float(np.min(np.linalg.eigvalsh(arr))) <= 0.0:
        raise InvalidStateError("covariance matrix must be positive definite")
    values = _symplectic_spectrum_raw(arr)
    det = float(np.linalg.det(arr))
    prod_sq = float(np.prod(values ** 2))
    if abs(prod_sq - det) > SPECTRUM_DET_RTOL * max(1.0, abs(det)):
        raise InvalidStateError(
            f"spectrum failed determinant cross-check: prod nu^2 = {prod_sq}, det = {det}"
        )
    return SymplecticSpectrum(tuple(values))


def is_pure(sigma: CovarianceMatrix) -> bool:
    """True when every symplectic eigenvalue equals 1 within tolerance."""
    values = symplectic_eigenvalues(sigma).values
    return all(abs(v - 1.0) <= PURITY_ATOL for v in values)


def dump_csv(matrix: np.ndarray) -> str:
    """Row-major CSV rendering of a matrix with 17 significant digits."""
    lines = [",".join(format(v, ".17g") for v in row) for row in np.asarray(matrix, dtype=float)]
    return "\n".join(lines) + "\n"
