"""Scalar information-theoretic quantities of the horizon-split state.

All entropies and mutual informations use base-2 logarithms (ebits and
bits).  The contangle convention is fixed by internal consistency: it
reproduces 4 xi^2 for the pure two-mode squeezed state and 4 l^2 for
the same-frequency in/out pairs.

Hot closed forms are delegated to the selected kernel backend; the
matrix-pipeline alternatives used for cross-checks live in
``gaussian``/``states``.
"""

import math
from dataclasses import asdict, dataclass, fields

from . import _kernels
from .errors import DegenerateInputError, InvalidArgumentError
from .horizon import SqueezingTriple

INF_BOUNDARY_ATOL = 1e-12


@dataclass(frozen=True)
class CorrelationReport:
    """Every scalar output for one parameter point.

    At the infinite-squeezing limit only tau_out, entangled_out and the
    xi-independent in/out contangles are numbers; diverging quantities
    are +inf and undefined ones are nan.
    """

    s_kruskal: float
    i_kruskal: float
    tau_out: float
    i_out: float
    tau_in_out_lambda: float
    tau_in_out_nu: float
    tau_1v3: float
    tau_residual: float
    tau_tri_upper: float
    entangled_out: bool

    def as_dict(self) -> dict:
        return asdict(self)


REPORT_FIELD_NAMES = tuple(f.name for f in fields(CorrelationReport))


def entropy_f(x: float) -> float:
    """Entropy of a thermal mode with symplectic eigenvalue x, in ebits."""
    if not (math.isfinite(x) and x >= 1.0):
        raise InvalidArgumentError("entropy argument must be >= 1")
    return _kernels.entropy_f(x)


def contangle_g(m_sq: float) -> float:
    """Contangle from the squared parameter m: arcsinh^2(sqrt(m^2 - 1))."""
    if not (math.isfinite(m_sq) and m_sq >= 1.0):
        raise InvalidArgumentError("contangle argument must be >= 1")
    return _kernels.contangle_g(m_sq)


def _require_xi(xi: float):
    if not (math.isfinite(xi) and xi >= 0.0):
        raise InvalidArgumentError("xi must be finite and non-negative")


def kruskal_entanglement(xi: float) -> float:
    """Entropy of entanglement of the two Kruskal modes, in ebits."""
    _require_xi(xi)
    return _kernels.kruskal_entanglement(xi)


def kruskal_mutual_information(xi: float) -> float:
    """Total Kruskal correlations; exactly twice the entanglement."""
    return 2.0 * kruskal_entanglement(xi)


def out_out_contangle(triple: SqueezingTriple) -> float:
    """Entanglement between the two outer modes.

    Positive exactly when tanh(xi) > sinh(l) sinh(n); zero otherwise,
    including on the boundary.
    """
    if triple.xi_infinite:
        return out_out_contangle_inf_squeezing(triple.l, triple.n)
    return _kernels.out_out_contangle(triple.xi, triple.l, triple.n)


def out_out_contangle_inf_squeezing(l: float, n: float) -> float:
    """Outer-mode entanglement for an ideal EPR (infinitely squeezed) input.

    Diverges (returns inf) at l = n = 0; raises on the survival boundary
    sinh(l) sinh(n) = 1 where the limit is not two-sided.
    """
    if abs(math.sinh(l) * math.sinh(n) - 1.0) <= INF_BOUNDARY_ATOL:
        raise DegenerateInputError("sinh(l) sinh(n) = 1 sits on the survival boundary")
    return _kernels.out_out_contangle_inf(l, n)


def out_out_mutual_information(triple: SqueezingTriple) -> float:
    """Total correlations between the two outer modes, in bits."""
    if triple.xi_infinite:
        raise InvalidArgumentError("mutual information needs a finite squeezing triple")
    return _kernels.out_out_mutual_information(triple.xi, triple.l, triple.n)


def in_out_contangle(x: float) -> float:
    """Same-frequency in/out entanglement, 4 x^2 for squeezing x."""
    if not (math.isfinite(x) and x >= 0.0):
        raise InvalidArgumentError("squeezing must be finite and non-negative")
    return 4.0 * x * x


def one_vs_three_contangle(xi: float, l_min: float) -> float:
    """Entanglement of the weaker-squeezed in mode with the other three."""
    _require_xi(xi)
    if not (math.isfinite(l_min) and l_min >= 0.0):
        raise InvalidArgumentError("l_min must be finite and non-negative")
    return _kernels.one_vs_three_contangle(xi, l_min)


def residual_contangle(xi: float, l: float, n: float) -> float:
    """Multipartite entanglement shared across the horizon.

    Uses l_min = min(l, n) internally (modes are labeled so the weaker
    squeezing leads); non-negative by monogamy.
    """
    _require_xi(xi)
    for name, v in (("l", l), ("n", n)):
        if not (math.isfinite(v) and v >= 0.0):
            raise InvalidArgumentError(f"{name} must be finite and non-negative")
    return _kernels.residual_contangle(xi, l, n)


def tripartite_upper_bound(xi: float, l: float, n: float) -> float:
    """Upper bound on the tripartite share of the residual entanglement."""
    _require_xi(xi)
    for name, v in (("l", l), ("n", n)):
        if not (math.isfinite(v) and v >= 0.0):
            raise InvalidArgumentError(f"{name} must be finite and non-negative")
    return _kernels.tripartite_upper_bound(xi, l, n)


def build_report(triple: SqueezingTriple) -> CorrelationReport:
    """Evaluate every report field for one squeezing triple."""
    if triple.xi_infinite:
        tau_out = out_out_contangle_inf_squeezing(triple.l, triple.n)
        return CorrelationReport(
            s_kruskal=math.inf,
            i_kruskal=math.inf,
            tau_out=tau_out,
            i_out=math.nan,
            tau_in_out_lambda=4.0 * triple.l * triple.l,
            tau_in_out_nu=4.0 * triple.n * triple.n,
            tau_1v3=math.nan,
            tau_residual=math.nan,
            tau_tri_upper=math.nan,
            entangled_out=tau_out > 0.0,
        )
    vals = _kernels.report_values(triple.xi, triple.l, triple.n)
    (s_k, i_k, _tau_k, tau_out, i_out, tau_io_l, tau_io_n, tau_1v3, res, tri, ent) = vals
    return CorrelationReport(
        s_kruskal=s_k,
        i_kruskal=i_k,
        tau_out=tau_out,
        i_out=i_out,
        tau_in_out_lambda=tau_io_l,
        tau_in_out_nu=tau_io_n,
        tau_1v3=tau_1v3,
        tau_residual=res,
        tau_tri_upper=tri,
        entangled_out=ent > 0.0,
    )
