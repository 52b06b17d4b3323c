"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure
Python twin is used otherwise, or when HORIZONENT_PURE is set in the
environment.  Both backends produce bit-identical results, so outputs do
not depend on which one is active.
"""

import os

if os.environ.get("HORIZONENT_PURE"):
    from . import _pykernels as impl
else:
    try:
        from . import _ckernels as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as impl

BACKEND_NAME = impl.BACKEND_NAME
REPORT_VALUE_NAMES = impl.REPORT_VALUE_NAMES
GRID_COLUMN_NAMES = impl.GRID_COLUMN_NAMES

entropy_f = impl.entropy_f
contangle_g = impl.contangle_g
squeezing_from_mass_freq = impl.squeezing_from_mass_freq
survives_infinite_squeezing = impl.survives_infinite_squeezing
kruskal_entanglement = impl.kruskal_entanglement
out_out_m = impl.out_out_m
out_out_contangle = impl.out_out_contangle
out_out_m_inf = impl.out_out_m_inf
out_out_contangle_inf = impl.out_out_contangle_inf
out_out_reduced = impl.out_out_reduced
out_out_symplectic_eigenvalues = impl.out_out_symplectic_eigenvalues
out_out_mutual_information = impl.out_out_mutual_information
one_vs_three_contangle = impl.one_vs_three_contangle
residual_contangle = impl.residual_contangle
tripartite_upper_bound = impl.tripartite_upper_bound
report_values = impl.report_values
evaluate_grid = impl.evaluate_grid
