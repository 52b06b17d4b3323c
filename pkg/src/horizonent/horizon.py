"""Mapping from black-hole parameters to effective squeezings.

Natural units (G = c = hbar = k_B = 1) throughout; mass and frequency
enter every formula only through the product M * frequency.
"""

import math
from dataclasses import dataclass

from . import _kernels
from .errors import InvalidArgumentError

CRITICAL_MASS_ATOL = 1e-12


@dataclass(frozen=True)
class HorizonParams:
    """Black-hole mass and one field-mode frequency, both in natural units."""

    mass: float
    frequency: float

    def __post_init__(self):
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise InvalidArgumentError("mass must be finite and positive")
        if not (math.isfinite(self.frequency) and self.frequency > 0.0):
            raise InvalidArgumentError("frequency must be finite and positive")


@dataclass(frozen=True)
class SqueezingTriple:
    """Kruskal squeezing xi plus the horizon-induced squeezings l and n.

    The xi -> infinity regime is marked by the explicit xi_infinite flag
    (xi itself stays finite and is ignored when the flag is set); limit
    quantities are computed from dedicated closed forms, never from a
    large-xi stand-in.
    """

    xi: float
    l: float
    n: float
    xi_infinite: bool = False

    def __post_init__(self):
        for name in ("xi", "l", "n"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise InvalidArgumentError(f"{name} must be finite and non-negative")

    @classmethod
    def infinite(cls, l: float, n: float) -> "SqueezingTriple":
        return cls(0.0, l, n, xi_infinite=True)


def squeezing_parameter(params: HorizonParams) -> float:
    """Effective squeezing r with cosh(r) = (1 - exp(-2 pi M f))**-0.5.

    Strictly decreasing in the product M * f; the M -> 0 divergence is a
    caller-side limit, never a non-finite return.
    """
    return _kernels.squeezing_from_mass_freq(params.mass, params.frequency)


def effective_squeezings(mass: float, freq_a: float, freq_b: float) -> tuple:
    """Squeezings (l, n) for two mode frequencies at the same mass."""
    l = squeezing_parameter(HorizonParams(mass, freq_a))
    n = squeezing_parameter(HorizonParams(mass, freq_b))
    return l, n


def triple_from_horizon(xi, mass, freq_a, freq_b, xi_infinite=False) -> SqueezingTriple:
    """Assemble the squeezing coordinates from physical parameters."""
    l, n = effective_squeezings(mass, freq_a, freq_b)
    if xi_infinite:
        return SqueezingTriple.infinite(l, n)
    return SqueezingTriple(xi, l, n)


def _validated_positive(**kwargs):
    for name, v in kwargs.items():
        if not (math.isfinite(v) and v > 0.0):
            raise InvalidArgumentError(f"{name} must be finite and positive")


def survives_at_infinite_squeezing(mass: float, freq_a: float, freq_b: float) -> bool:
    """Whether outer-mode entanglement survives an ideal EPR input.

    True iff exp(2 pi M a) + exp(2 pi M b) - exp(2 pi M (a + b)) < 0,
    evaluated in the overflow-free rescaled form.
    """
    _validated_positive(mass=mass, freq_a=freq_a, freq_b=freq_b)
    return _kernels.survives_infinite_squeezing(mass, freq_a, freq_b)


def survives_from_squeezings(l: float, n: float) -> bool:
    """Equivalent survival predicate, sinh(l) sinh(n) < 1, for cross-checks."""
    return math.sinh(l) * math.sinh(n) < 1.0


def _boundary(mass, freq_a, freq_b):
    # exp(-a) + exp(-b) - 1: positive below the critical mass, negative above
    a = 2.0 * math.pi * mass * freq_a
    b = 2.0 * math.pi * mass * freq_b
    return math.exp(-a) + math.exp(-b) - 1.0


def critical_mass(freq_a: float, freq_b: float) -> float:
    """The unique mass where infinite-squeezing entanglement first survives.

    Found by growing a geometric bracket from 1e-6 and bisecting; the
    boundary function is strictly monotone in the mass, so the root is
    unique.  Scales as critical_mass(c*a, c*b) = critical_mass(a, b)/c.
    """
    _validated_positive(freq_a=freq_a, freq_b=freq_b)
    lo = 1e-6
    while _boundary(lo, freq_a, freq_b) <= 0.0:
        lo /= 2.0
    hi = 2.0 * lo
    while _boundary(hi, freq_a, freq_b) > 0.0:
        lo = hi
        hi *= 2.0
    while hi - lo > 2.0 * CRITICAL_MASS_ATOL:
        mid = 0.5 * (lo + hi)
        if _boundary(mid, freq_a, freq_b) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
