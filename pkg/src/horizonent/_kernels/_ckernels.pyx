# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels for the per-point correlation quantities.

Twin of ``_pykernels``: same expressions in the same evaluation order,
so both backends produce bit-identical doubles.  All functions are total
over their numeric domain; validation lives in the public modules.
"""

from libc.math cimport asinh, cosh, exp, expm1, log2, sinh, sqrt, tanh, INFINITY, M_PI

BACKEND_NAME = "cython"

cdef double _TWO_PI = 2.0 * M_PI

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


cdef inline double _entropy_f(double x) nogil:
    cdef double u, v
    if x <= 1.0:
        return 0.0
    u = 0.5 * (x + 1.0)
    v = 0.5 * (x - 1.0)
    return u * log2(u) - v * log2(v)


cdef inline double _contangle_g(double m_sq) nogil:
    cdef double t
    if m_sq <= 1.0:
        return 0.0
    t = asinh(sqrt(m_sq - 1.0))
    return t * t


cdef inline double _squeezing_from_mass_freq(double mass, double freq) nogil:
    return asinh(1.0 / sqrt(expm1(_TWO_PI * mass * freq)))


cdef inline double _kruskal_entanglement(double xi) nogil:
    return _entropy_f(cosh(2.0 * xi))


cdef inline double _out_out_m(double xi, double l, double n) nogil:
    cdef double cxi = cosh(xi)
    cdef double sxi = sinh(xi)
    cdef double c2xi = cosh(2.0 * xi)
    cdef double s2xi = sinh(2.0 * xi)
    cdef double c2l = cosh(2.0 * l)
    cdef double c2n = cosh(2.0 * n)
    cdef double sl = sinh(l)
    cdef double sn = sinh(n)
    cdef double num = 2.0 * c2l * c2n * cxi * cxi + 3.0 * c2xi - 4.0 * sl * sn * s2xi - 1.0
    cdef double den = 2.0 * ((c2l + c2n) * cxi * cxi - 2.0 * sxi * sxi + 2.0 * sl * sn * s2xi)
    return num / den


cdef inline double _out_out_contangle(double xi, double l, double n) nogil:
    cdef double m
    if tanh(xi) > sinh(l) * sinh(n):
        m = _out_out_m(xi, l, n)
        return _contangle_g(m * m)
    return 0.0


cdef inline double _out_out_m_inf(double l, double n) nogil:
    cdef double c2l = cosh(2.0 * l)
    cdef double c2n = cosh(2.0 * n)
    cdef double sl = sinh(l)
    cdef double sn = sinh(n)
    cdef double den = c2l + c2n - 2.0 + 4.0 * sl * sn
    if den == 0.0:
        return INFINITY
    return (c2l * c2n + 3.0 - 4.0 * sl * sn) / den


cdef inline double _out_out_contangle_inf(double l, double n) nogil:
    cdef double m
    if sinh(l) * sinh(n) >= 1.0:
        return 0.0
    m = _out_out_m_inf(l, n)
    if m == INFINITY:
        return INFINITY
    return _contangle_g(m * m)


cdef inline void _out_out_reduced(double xi, double l, double n,
                                  double *a, double *b, double *det_sqrt) nogil:
    cdef double cl = cosh(l)
    cdef double sl = sinh(l)
    cdef double cn = cosh(n)
    cdef double sn = sinh(n)
    cdef double c2xi = cosh(2.0 * xi)
    a[0] = cl * cl * c2xi + sl * sl
    b[0] = cn * cn * c2xi + sn * sn
    det_sqrt[0] = (cn * cn + c2xi * sn * sn) * cl * cl + sl * sl * (c2xi * cn * cn + sn * sn)


cdef inline double _out_out_mutual_information(double xi, double l, double n) nogil:
    cdef double a, b, det_sqrt, x, root, ep, em
    _out_out_reduced(xi, l, n, &a, &b, &det_sqrt)
    x = a - b
    x = x * x
    root = sqrt(x * (x + 4.0 * det_sqrt))
    ep = sqrt(0.5 * (x + 2.0 * det_sqrt + root))
    em = det_sqrt / ep
    return _entropy_f(a) + _entropy_f(b) - _entropy_f(ep) - _entropy_f(em)


cdef inline double _one_vs_three_contangle(double xi, double l_min) nogil:
    cdef double cl = cosh(l_min)
    cdef double sl = sinh(l_min)
    cdef double a_in = cl * cl + cosh(2.0 * xi) * sl * sl
    return _contangle_g(a_in * a_in)


cdef inline double _residual_contangle(double xi, double l, double n) nogil:
    cdef double lm = l if l <= n else n
    cdef double val = _one_vs_three_contangle(xi, lm) - 4.0 * lm * lm
    return val if val > 0.0 else 0.0


cdef inline double _tripartite_upper_bound(double xi, double l, double n) nogil:
    cdef double tmp, th, sech_n, t, den, r1, r2, b1, b2, val
    if l > n:
        tmp = l
        l = n
        n = tmp
    th = tanh(xi)
    sech_n = 1.0 / cosh(n)
    t = sech_n * sech_n * th * th
    den = t - 1.0
    r1 = (t + 1.0) / den
    r2 = (t - cosh(2.0 * l)) / den
    b1 = _contangle_g(r1 * r1) - _out_out_contangle(xi, l, n)
    b2 = _contangle_g(r2 * r2) - 4.0 * l * l
    val = b1 if b1 <= b2 else b2
    return val if val > 0.0 else 0.0


cdef inline void _report_values(double xi, double l, double n, double *out) nogil:
    cdef double s_k = _kruskal_entanglement(xi)
    cdef double tau_out = _out_out_contangle(xi, l, n)
    cdef double lm = l if l <= n else n
    cdef double tau_1v3 = _one_vs_three_contangle(xi, lm)
    cdef double res = tau_1v3 - 4.0 * lm * lm
    out[0] = s_k
    out[1] = 2.0 * s_k
    out[2] = 4.0 * xi * xi
    out[3] = tau_out
    out[4] = _out_out_mutual_information(xi, l, n)
    out[5] = 4.0 * l * l
    out[6] = 4.0 * n * n
    out[7] = tau_1v3
    out[8] = res if res > 0.0 else 0.0
    out[9] = _tripartite_upper_bound(xi, l, n)
    out[10] = 1.0 if tau_out > 0.0 else 0.0


def entropy_f(double x):
    """Thermal entropy of a mode with symplectic eigenvalue x (x >= 1)."""
    return _entropy_f(x)


def contangle_g(double m_sq):
    """Squared-arcsinh entanglement monotone; 0 on the separable side."""
    return _contangle_g(m_sq)


def squeezing_from_mass_freq(double mass, double freq):
    """Effective squeezing seen across the horizon for one mode frequency."""
    return _squeezing_from_mass_freq(mass, freq)


def survives_infinite_squeezing(double mass, double freq_a, double freq_b):
    """Whether outer-mode entanglement survives for an ideal EPR input."""
    cdef double a = _TWO_PI * mass * freq_a
    cdef double b = _TWO_PI * mass * freq_b
    return exp(-a) + exp(-b) < 1.0


def kruskal_entanglement(double xi):
    """Entropy of entanglement of the freely-falling two-mode state."""
    return _kruskal_entanglement(xi)


def out_out_m(double xi, double l, double n):
    """Closed-form m for the two outer modes (entangled branch only)."""
    return _out_out_m(xi, l, n)


def out_out_contangle(double xi, double l, double n):
    """Entanglement between the two outer modes; 0 past the threshold."""
    return _out_out_contangle(xi, l, n)


def out_out_m_inf(double l, double n):
    """Infinite-squeezing limit of out_out_m; inf at l = n = 0 (EPR limit)."""
    return _out_out_m_inf(l, n)


def out_out_contangle_inf(double l, double n):
    """Outer-mode entanglement for an infinitely squeezed input."""
    return _out_out_contangle_inf(l, n)


def out_out_reduced(double xi, double l, double n):
    """Scalars (a, b, det_sqrt) of the reduced outer-mode covariance."""
    cdef double a, b, det_sqrt
    _out_out_reduced(xi, l, n, &a, &b, &det_sqrt)
    return a, b, det_sqrt


def out_out_symplectic_eigenvalues(double xi, double l, double n):
    """Symplectic eigenvalue pair (larger, smaller) of the outer-mode state."""
    cdef double a, b, det_sqrt, x, root, ep, em
    _out_out_reduced(xi, l, n, &a, &b, &det_sqrt)
    x = a - b
    x = x * x
    root = sqrt(x * (x + 4.0 * det_sqrt))
    ep = sqrt(0.5 * (x + 2.0 * det_sqrt + root))
    em = det_sqrt / ep
    return ep, em


def out_out_mutual_information(double xi, double l, double n):
    """Total correlations between the two outer modes, in bits."""
    return _out_out_mutual_information(xi, l, n)


def one_vs_three_contangle(double xi, double l_min):
    """Entanglement of the weaker-squeezed inner mode with the other three."""
    return _one_vs_three_contangle(xi, l_min)


def residual_contangle(double xi, double l, double n):
    """Multipartite entanglement left after the pairwise same-frequency share."""
    return _residual_contangle(xi, l, n)


def tripartite_upper_bound(double xi, double l, double n):
    """Upper bound on the tripartite entanglement of one inner, two outer modes."""
    return _tripartite_upper_bound(xi, l, n)


def report_values(double xi, double l, double n):
    """All scalar correlation quantities for one finite parameter point."""
    cdef double vals[11]
    _report_values(xi, l, n, vals)
    return (vals[0], vals[1], vals[2], vals[3], vals[4], vals[5],
            vals[6], vals[7], vals[8], vals[9], vals[10])


def evaluate_grid(double[::1] xi, double[::1] mass, double[::1] lam,
                  double[::1] nu, double[:, ::1] out):
    """Fill out[k, :] with (l, n, *report_values) for every grid point k."""
    cdef Py_ssize_t npts = xi.shape[0]
    cdef Py_ssize_t k
    cdef double l, n
    cdef double vals[11]
    cdef Py_ssize_t j
    with nogil:
        for k in range(npts):
            l = _squeezing_from_mass_freq(mass[k], lam[k])
            n = _squeezing_from_mass_freq(mass[k], nu[k])
            _report_values(xi[k], l, n, vals)
            out[k, 0] = l
            out[k, 1] = n
            for j in range(11):
                out[k, 2 + j] = vals[j]
