"""Construction of the Kruskal and Schwarzschild covariance matrices.

The four-mode state is built by two independent routes that must agree:
a product of three two-mode squeezers acting on the four-mode vacuum,
and a direct assembly from the closed-form 2x2 blocks.  The product
route applies the Kruskal squeezer to the slots that become the out
modes, with the in modes starting as vacua; this is the unique slot
convention under which both routes coincide.
"""

import math
from enum import IntEnum

import numpy as np

from .errors import InvalidArgumentError
from .gaussian import CovarianceMatrix, SymplecticMatrix, apply_symplectic, two_mode_squeezer
from .horizon import SqueezingTriple


class Mode(IntEnum):
    """Fixed four-mode layout; all block accessors index against it."""

    LAMBDA_IN = 0
    LAMBDA_OUT = 1
    NU_OUT = 2
    NU_IN = 3


FOUR_MODE_ORDER = ("lambda_in", "lambda_out", "nu_out", "nu_in")

_I2 = np.eye(2)
_Z2 = np.diag([1.0, -1.0])


def _require_finite(triple: SqueezingTriple):
    if triple.xi_infinite:
        raise InvalidArgumentError(
            "state construction needs finite squeezing; the infinite limit "
            "is handled analytically by the correlation functions"
        )


def kruskal_state(xi: float) -> CovarianceMatrix:
    """Two-mode squeezed vacuum seen by freely falling observers.

    Diagonal blocks cosh(2 xi) I, off-diagonal blocks sinh(2 xi) Z; pure
    for every xi.
    """
    if not math.isfinite(xi):
        raise InvalidArgumentError("xi must be finite")
    squeezer = two_mode_squeezer(xi, 0, 1, 2)
    return apply_symplectic(squeezer, CovarianceMatrix.vacuum(2))


def schwarzschild_state_product(triple: SqueezingTriple) -> CovarianceMatrix:
    """Four-mode state as O O^T with O the chain of three squeezers.

    The Kruskal squeezer acts on (lambda_out, nu_out) first, then the
    horizon squeezers pair each in mode with its out mode.
    """
    _require_finite(triple)
    g_xi = two_mode_squeezer(triple.xi, Mode.LAMBDA_OUT, Mode.NU_OUT, 4)
    g_l = two_mode_squeezer(triple.l, Mode.LAMBDA_IN, Mode.LAMBDA_OUT, 4)
    g_n = two_mode_squeezer(triple.n, Mode.NU_IN, Mode.NU_OUT, 4)
    chain = SymplecticMatrix(g_n.entries @ g_l.entries @ g_xi.entries)
    return apply_symplectic(chain, CovarianceMatrix.vacuum(4))


def in_block_scalar(x: float, xi: float) -> float:
    """Variance of an in mode with its own squeezing x."""
    return math.cosh(x) ** 2 + math.cosh(2.0 * xi) * math.sinh(x) ** 2


def out_block_scalar(x: float, xi: float) -> float:
    """Variance of an out mode with its own squeezing x."""
    return math.cosh(x) ** 2 * math.cosh(2.0 * xi) + math.sinh(x) ** 2


def in_out_scalar(x: float, xi: float) -> float:
    """Same-frequency in/out correlation (Z-patterned block)."""
    return math.cosh(xi) ** 2 * math.sinh(2.0 * x)


def in_cross_out_scalar(x: float, y: float, xi: float) -> float:
    """Cross-frequency in/out correlation (identity-patterned block)."""
    return math.cosh(y) * math.sinh(2.0 * xi) * math.sinh(x)


def in_in_scalar(x: float, y: float, xi: float) -> float:
    """Cross-frequency in/in correlation (Z-patterned block)."""
    return math.sinh(2.0 * xi) * math.sinh(x) * math.sinh(y)


def out_out_scalar(x: float, y: float, xi: float) -> float:
    """Cross-frequency out/out correlation (Z-patterned block)."""
    return math.cosh(x) * math.cosh(y) * math.sinh(2.0 * xi)


def schwarzschild_state_blocks(triple: SqueezingTriple) -> CovarianceMatrix:
    """Four-mode state assembled directly from the closed-form blocks."""
    _require_finite(triple)
    xi, l, n = triple.xi, triple.l, triple.n
    sigma = np.zeros((8, 8))

    def put(i, j, block):
        sigma[2 * i:2 * i + 2, 2 * j:2 * j + 2] = block
        if i != j:
            sigma[2 * j:2 * j + 2, 2 * i:2 * i + 2] = block.T

    put(Mode.LAMBDA_IN, Mode.LAMBDA_IN, in_block_scalar(l, xi) * _I2)
    put(Mode.LAMBDA_OUT, Mode.LAMBDA_OUT, out_block_scalar(l, xi) * _I2)
    put(Mode.NU_OUT, Mode.NU_OUT, out_block_scalar(n, xi) * _I2)
    put(Mode.NU_IN, Mode.NU_IN, in_block_scalar(n, xi) * _I2)
    put(Mode.LAMBDA_IN, Mode.LAMBDA_OUT, in_out_scalar(l, xi) * _Z2)
    put(Mode.NU_IN, Mode.NU_OUT, in_out_scalar(n, xi) * _Z2)
    put(Mode.LAMBDA_IN, Mode.NU_OUT, in_cross_out_scalar(l, n, xi) * _I2)
    put(Mode.NU_IN, Mode.LAMBDA_OUT, in_cross_out_scalar(n, l, xi) * _I2)
    put(Mode.LAMBDA_IN, Mode.NU_IN, in_in_scalar(l, n, xi) * _Z2)
    put(Mode.LAMBDA_OUT, Mode.NU_OUT, out_out_scalar(l, n, xi) * _Z2)
    return CovarianceMatrix(sigma)


def block(sigma: CovarianceMatrix, row: Mode, col: Mode) -> np.ndarray:
    """The 2x2 block of a four-mode state for a pair of layout slots."""
    if sigma.n_modes != 4:
        raise InvalidArgumentError("block access expects a four-mode state")
    return sigma.entries[2 * row:2 * row + 2, 2 * col:2 * col + 2]
