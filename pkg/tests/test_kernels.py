"""Backend parity: the compiled kernels must match the pure twin bit for bit."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from horizonent._kernels import BACKEND_NAME, GRID_COLUMN_NAMES, REPORT_VALUE_NAMES
from horizonent._kernels import _pykernels

ckernels = pytest.importorskip(
    "horizonent._kernels._ckernels", reason="compiled kernel extension not built"
)

SCALAR_POINTS = [
    (0.0, 0.0, 0.0),
    (1.0, 0.0, 0.0),
    (0.5, 0.3, 0.9),
    (1.7, 1.2, 0.4),
    (3.0, 2.0, 0.1),
    (2.0, 4.0, 4.0),
    (0.1, 2.8, 2.8),
]


def grid_arrays(n=4000, seed=42):
    rng = np.random.default_rng(seed)
    return (
        np.ascontiguousarray(rng.uniform(0.0, 3.0, n)),
        np.ascontiguousarray(rng.uniform(0.01, 1.0, n)),
        np.ascontiguousarray(rng.uniform(0.05, 3.0, n)),
        np.ascontiguousarray(rng.uniform(0.05, 3.0, n)),
    )


class TestScalarParity:
    @pytest.mark.parametrize("point", SCALAR_POINTS)
    def test_report_values_identical(self, point):
        assert _pykernels.report_values(*point) == ckernels.report_values(*point)

    @pytest.mark.parametrize("point", SCALAR_POINTS)
    def test_individual_kernels_identical(self, point):
        xi, l, n = point
        for name in (
            "out_out_contangle",
            "out_out_mutual_information",
            "residual_contangle",
            "tripartite_upper_bound",
        ):
            assert getattr(_pykernels, name)(xi, l, n) == getattr(ckernels, name)(xi, l, n)
        assert _pykernels.out_out_contangle_inf(l, n) == ckernels.out_out_contangle_inf(l, n)
        assert _pykernels.kruskal_entanglement(xi) == ckernels.kruskal_entanglement(xi)

    def test_entropy_and_contangle_identical(self):
        for x in (1.0, 1.0 + 1e-12, 2.0, 3.0, 17.5, 4096.0):
            assert _pykernels.entropy_f(x) == ckernels.entropy_f(x)
            assert _pykernels.contangle_g(x) == ckernels.contangle_g(x)

    def test_horizon_map_identical(self):
        for mass in (0.01, 0.11, 1.0):
            for freq in (0.05, 1.0, 2.0, 40.0):
                assert _pykernels.squeezing_from_mass_freq(
                    mass, freq
                ) == ckernels.squeezing_from_mass_freq(mass, freq)
                assert _pykernels.survives_infinite_squeezing(
                    mass, freq, 2 * freq
                ) == ckernels.survives_infinite_squeezing(mass, freq, 2 * freq)

    def test_epr_limit_is_infinite_in_both(self):
        assert _pykernels.out_out_contangle_inf(0.0, 0.0) == math.inf
        assert ckernels.out_out_contangle_inf(0.0, 0.0) == math.inf


class TestBatchParity:
    def test_grids_bit_identical(self):
        xi, mass, lam, nu = grid_arrays()
        out_pure = np.empty((len(xi), 13))
        out_c = np.empty((len(xi), 13))
        _pykernels.evaluate_grid(xi, mass, lam, nu, out_pure)
        ckernels.evaluate_grid(xi, mass, lam, nu, out_c)
        assert np.array_equal(out_pure, out_c)

    def test_batch_matches_scalars(self):
        xi, mass, lam, nu = grid_arrays(n=64, seed=3)
        out = np.empty((64, 13))
        ckernels.evaluate_grid(xi, mass, lam, nu, out)
        for k in (0, 17, 63):
            l = ckernels.squeezing_from_mass_freq(mass[k], lam[k])
            n = ckernels.squeezing_from_mass_freq(mass[k], nu[k])
            assert out[k, 0] == l and out[k, 1] == n
            assert tuple(out[k, 2:]) == ckernels.report_values(xi[k], l, n)


class TestBackendSelection:
    def test_names_consistent(self):
        assert _pykernels.REPORT_VALUE_NAMES == ckernels.REPORT_VALUE_NAMES == REPORT_VALUE_NAMES
        assert GRID_COLUMN_NAMES == ("l", "n") + REPORT_VALUE_NAMES

    def test_compiled_selected_by_default(self):
        if os.environ.get("HORIZONENT_PURE"):
            pytest.skip("pure backend forced via environment")
        assert BACKEND_NAME == "cython"

    def test_env_var_forces_pure(self):
        env = dict(os.environ, HORIZONENT_PURE="1")
        result = subprocess.run(
            [sys.executable, "-c", "from horizonent._kernels import BACKEND_NAME; print(BACKEND_NAME)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert result.stdout.strip() == "pure"
