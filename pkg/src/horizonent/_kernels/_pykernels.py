"""Pure-Python scalar kernels for the per-point correlation quantities.

This module is the fallback twin of the compiled extension ``_ckernels``.
Both implementations keep the same expressions in the same evaluation
order so that they produce bit-identical doubles; the parity test suite
asserts exact equality.  Every function here is total over its numeric
domain: argument validation and error raising happen in the public
modules, not in the kernels.

Entropies and mutual informations are in base-2 units (ebits / bits).
"""

import math

BACKEND_NAME = "pure"

_TWO_PI = 2.0 * math.pi

#: column order produced by :func:`report_values` and :func:`evaluate_grid`
REPORT_VALUE_NAMES = (
    "s_kruskal",
    "i_kruskal",
    "tau_kruskal",
    "tau_out",
    "i_out",
    "tau_in_out_lambda",
    "tau_in_out_nu",
    "tau_1v3",
    "tau_residual",
    "tau_tri_upper",
    "entangled_out",
)

GRID_COLUMN_NAMES = ("l", "n") + REPORT_VALUE_NAMES


def entropy_f(x):
    """Thermal entropy of a mode with symplectic eigenvalue x (x >= 1)."""
    if x <= 1.0:
        return 0.0
    u = 0.5 * (x + 1.0)
    v = 0.5 * (x - 1.0)
    return u * math.log2(u) - v * math.log2(v)


def contangle_g(m_sq):
    """Squared-arcsinh entanglement monotone; 0 on the separable side."""
    if m_sq <= 1.0:
        return 0.0
    t = math.asinh(math.sqrt(m_sq - 1.0))
    return t * t


def squeezing_from_mass_freq(mass, freq):
    """Effective squeezing seen across the horizon for one mode frequency.

    Equals arccosh((1 - exp(-2*pi*M*f))**-0.5), evaluated through the
    equivalent sinh form, which stays accurate for both tiny and huge
    M*f products.
    """
    return math.asinh(1.0 / math.sqrt(math.expm1(_TWO_PI * mass * freq)))


def survives_infinite_squeezing(mass, freq_a, freq_b):
    """Whether outer-mode entanglement survives for an ideal EPR input."""
    a = _TWO_PI * mass * freq_a
    b = _TWO_PI * mass * freq_b
    return math.exp(-a) + math.exp(-b) < 1.0


def kruskal_entanglement(xi):
    """Entropy of entanglement of the freely-falling two-mode state."""
    return entropy_f(math.cosh(2.0 * xi))


def out_out_m(xi, l, n):
    """Closed-form m for the two outer modes (entangled branch only)."""
    cxi = math.cosh(xi)
    sxi = math.sinh(xi)
    c2xi = math.cosh(2.0 * xi)
    s2xi = math.sinh(2.0 * xi)
    c2l = math.cosh(2.0 * l)
    c2n = math.cosh(2.0 * n)
    sl = math.sinh(l)
    sn = math.sinh(n)
    num = 2.0 * c2l * c2n * cxi * cxi + 3.0 * c2xi - 4.0 * sl * sn * s2xi - 1.0
    den = 2.0 * ((c2l + c2n) * cxi * cxi - 2.0 * sxi * sxi + 2.0 * sl * sn * s2xi)
    return num / den


def out_out_contangle(xi, l, n):
    """Entanglement between the two outer modes; 0 past the threshold."""
    if math.tanh(xi) > math.sinh(l) * math.sinh(n):
        m = out_out_m(xi, l, n)
        return contangle_g(m * m)
    return 0.0


def out_out_m_inf(l, n):
    """Infinite-squeezing limit of out_out_m; inf at l = n = 0 (EPR limit)."""
    c2l = math.cosh(2.0 * l)
    c2n = math.cosh(2.0 * n)
    sl = math.sinh(l)
    sn = math.sinh(n)
    den = c2l + c2n - 2.0 + 4.0 * sl * sn
    if den == 0.0:
        return math.inf
    return (c2l * c2n + 3.0 - 4.0 * sl * sn) / den


def out_out_contangle_inf(l, n):
    """Outer-mode entanglement for an infinitely squeezed input."""
    if math.sinh(l) * math.sinh(n) >= 1.0:
        return 0.0
    m = out_out_m_inf(l, n)
    if m == math.inf:
        return math.inf
    return contangle_g(m * m)


def out_out_reduced(xi, l, n):
    """Scalars (a, b, det_sqrt) of the reduced outer-mode covariance.

    a and b are the single-mode block scalars, det_sqrt = a*b - c*c where
    c is the cross-block scalar, grouped so that no cancellation occurs
    (the naive a*b - c*c loses all digits near the pure two-mode limit).
    """
    cl = math.cosh(l)
    sl = math.sinh(l)
    cn = math.cosh(n)
    sn = math.sinh(n)
    c2xi = math.cosh(2.0 * xi)
    a = cl * cl * c2xi + sl * sl
    b = cn * cn * c2xi + sn * sn
    det_sqrt = (cn * cn + c2xi * sn * sn) * cl * cl + sl * sl * (c2xi * cn * cn + sn * sn)
    return a, b, det_sqrt


def out_out_symplectic_eigenvalues(xi, l, n):
    """Symplectic eigenvalue pair (larger, smaller) of the outer-mode state.

    Uses Delta - 2*det_sqrt = (a - b)**2, which is exact, so the smaller
    eigenvalue is recovered as det_sqrt / eta_plus without cancellation.
    """
    a, b, det_sqrt = out_out_reduced(xi, l, n)
    x = a - b
    x = x * x
    root = math.sqrt(x * (x + 4.0 * det_sqrt))
    ep = math.sqrt(0.5 * (x + 2.0 * det_sqrt + root))
    em = det_sqrt / ep
    return ep, em


def out_out_mutual_information(xi, l, n):
    """Total correlations between the two outer modes, in bits."""
    a, b, det_sqrt = out_out_reduced(xi, l, n)
    x = a - b
    x = x * x
    root = math.sqrt(x * (x + 4.0 * det_sqrt))
    ep = math.sqrt(0.5 * (x + 2.0 * det_sqrt + root))
    em = det_sqrt / ep
    return entropy_f(a) + entropy_f(b) - entropy_f(ep) - entropy_f(em)


def one_vs_three_contangle(xi, l_min):
    """Entanglement of the weaker-squeezed inner mode with the other three."""
    cl = math.cosh(l_min)
    sl = math.sinh(l_min)
    a_in = cl * cl + math.cosh(2.0 * xi) * sl * sl
    return contangle_g(a_in * a_in)


def residual_contangle(xi, l, n):
    """Multipartite entanglement left after the pairwise same-frequency share."""
    lm = l if l <= n else n
    val = one_vs_three_contangle(xi, lm) - 4.0 * lm * lm
    return val if val > 0.0 else 0.0


def tripartite_upper_bound(xi, l, n):
    """Upper bound on the tripartite entanglement of one inner, two outer modes."""
    if l > n:
        l, n = n, l
    th = math.tanh(xi)
    sech_n = 1.0 / math.cosh(n)
    t = sech_n * sech_n * th * th
    den = t - 1.0
    r1 = (t + 1.0) / den
    r2 = (t - math.cosh(2.0 * l)) / den
    b1 = contangle_g(r1 * r1) - out_out_contangle(xi, l, n)
    b2 = contangle_g(r2 * r2) - 4.0 * l * l
    val = b1 if b1 <= b2 else b2
    return val if val > 0.0 else 0.0


def report_values(xi, l, n):
    """All scalar correlation quantities for one finite parameter point.

    Returns the tuple named by REPORT_VALUE_NAMES; entangled_out is
    encoded as 1.0 / 0.0.
    """
    s_k = kruskal_entanglement(xi)
    i_k = 2.0 * s_k
    tau_k = 4.0 * xi * xi
    tau_out = out_out_contangle(xi, l, n)
    i_out = out_out_mutual_information(xi, l, n)
    tau_io_l = 4.0 * l * l
    tau_io_n = 4.0 * n * n
    lm = l if l <= n else n
    tau_1v3 = one_vs_three_contangle(xi, lm)
    res = tau_1v3 - 4.0 * lm * lm
    res = res if res > 0.0 else 0.0
    tri = tripartite_upper_bound(xi, l, n)
    ent = 1.0 if tau_out > 0.0 else 0.0
    return (s_k, i_k, tau_k, tau_out, i_out, tau_io_l, tau_io_n, tau_1v3, res, tri, ent)


def evaluate_grid(xi, mass, lam, nu, out):
    """Fill out[k, :] with (l, n, *report_values) for every grid point k.

    xi, mass, lam, nu are 1-D float64 buffers of equal length; out is a
    C-contiguous float64 buffer of shape (len(xi), 13).
    """
    npts = len(xi)
    for k in range(npts):
        l = squeezing_from_mass_freq(mass[k], lam[k])
        n = squeezing_from_mass_freq(mass[k], nu[k])
        vals = report_values(xi[k], l, n)
        out[k, 0] = l
        out[k, 1] = n
        for j in range(11):
            out[k, 2 + j] = vals[j]
