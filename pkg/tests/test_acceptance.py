"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import math
import time
from pathlib import Path

import numpy as np
from click.testing import CliRunner

from horizonent import (
    SqueezingTriple,
    critical_mass,
    kruskal_entanglement,
    kruskal_mutual_information,
    out_out_mutual_information,
    schwarzschild_state_blocks,
    schwarzschild_state_product,
    symplectic_eigenvalues,
    tripartite_upper_bound,
)
from horizonent import _kernels
from horizonent.cli import main as cli_main
from horizonent.fock import (
    mean_occupation,
    reduced_entropy,
    second_moments_matrix,
    truncated_tms,
)
from horizonent.sweeps import FIGURES

from helpers import mutual_information_generic, squeezing_grid

GOLDEN_DIR = Path(__file__).parent / "golden"

TRI_GOLDEN_L3_N3_XI1 = 0.0229779307652163123


def _report(num, ok, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def _axis_values(figure_name):
    spec = FIGURES[figure_name]
    return {axis.name: axis.values() for axis in spec.axes}, spec.fixed


def test_criterion_1_dual_construction():
    start = time.perf_counter()
    worst_diff = 0.0
    worst_purity = 0.0
    for xi, l, n in squeezing_grid():
        triple = SqueezingTriple(xi, l, n)
        via_product = schwarzschild_state_product(triple)
        via_blocks = schwarzschild_state_blocks(triple)
        worst_diff = max(
            worst_diff, float(np.max(np.abs(via_product.entries - via_blocks.entries)))
        )
        for sigma in (via_product, via_blocks):
            values = np.array(symplectic_eigenvalues(sigma).values)
            worst_purity = max(worst_purity, float(np.max(np.abs(values - 1.0))))
    elapsed = time.perf_counter() - start
    ok = worst_diff <= 1e-12 and worst_purity <= 1e-8 and elapsed < 1.0
    detail = (
        f"125-point grid, max |product - blocks| = {worst_diff:.3e} (<= 1e-12), "
        f"max |nu - 1| = {worst_purity:.3e} (<= 1e-8), runtime {elapsed:.3f} s (< 1 s)"
    )
    assert _report(1, ok, detail), detail


def test_criterion_2_kruskal_recovery():
    worst = 0.0
    for k in range(1, 31):
        xi = 0.1 * k
        tau = _kernels.out_out_contangle(xi, 0.0, 0.0)
        worst = max(worst, abs(tau - 4.0 * xi * xi))
    ok = worst <= 1e-10
    detail = f"xi in 0.1..3.0, max |tau(xi,0,0) - 4 xi^2| = {worst:.3e} (<= 1e-10)"
    assert _report(2, ok, detail), detail


def test_criterion_3_threshold_law():
    mismatches = 0
    checked = 0
    for xi in np.linspace(0.05, 2.5, 10):
        for l in np.linspace(0.0, 2.0, 10):
            for n in np.linspace(0.0, 2.0, 10):
                margin = math.tanh(xi) - math.sinh(l) * math.sinh(n)
                if abs(margin) <= 1e-9:
                    continue
                checked += 1
                entangled = _kernels.out_out_contangle(float(xi), float(l), float(n)) > 0.0
                if entangled != (margin > 0.0):
                    mismatches += 1
    inf_mismatches = 0
    inf_checked = 0
    for mass in np.linspace(0.01, 1.0, 10):
        for lam in np.linspace(0.1, 3.0, 10):
            for nu in np.linspace(0.1, 3.0, 10):
                a = 2.0 * math.pi * mass * lam
                b = 2.0 * math.pi * mass * nu
                expression = math.exp(a) + math.exp(b) - math.exp(a + b)
                if abs(expression) <= 1e-9 * math.exp(a + b):
                    continue
                inf_checked += 1
                l = _kernels.squeezing_from_mass_freq(float(mass), float(lam))
                n = _kernels.squeezing_from_mass_freq(float(mass), float(nu))
                entangled = _kernels.out_out_contangle_inf(l, n) > 0.0
                survives = _kernels.survives_infinite_squeezing(float(mass), float(lam), float(nu))
                if entangled != (expression < 0.0) or survives != (expression < 0.0):
                    inf_mismatches += 1
    err_equal = abs(critical_mass(1.0, 1.0) - math.log(2.0) / (2.0 * math.pi))
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    err_phi = abs(critical_mass(1.0, 2.0) - math.log(phi) / (2.0 * math.pi))
    ok = (
        mismatches == 0
        and inf_mismatches == 0
        and checked >= 900
        and inf_checked >= 900
        and err_equal <= 1e-9
        and err_phi <= 1e-9
    )
    detail = (
        f"finite grid {checked} pts {mismatches} mismatches; EPR-limit grid {inf_checked} pts "
        f"{inf_mismatches} mismatches; |M* - ln2/2pi| = {err_equal:.2e}, "
        f"|M* - ln(phi)/2pi| = {err_phi:.2e} (<= 1e-9)"
    )
    assert _report(3, ok, detail), detail


def test_criterion_4_mutual_information_dual_path():
    worst = 0.0
    count = 0
    for xi in np.linspace(0.05, 2.5, 8):
        for l in np.linspace(0.0, 2.0, 8):
            for n in np.linspace(0.0, 2.0, 8):
                triple = SqueezingTriple(float(xi), float(l), float(n))
                closed = out_out_mutual_information(triple)
                generic = mutual_information_generic(triple)
                worst = max(worst, abs(closed - generic))
                count += 1
    identical = all(
        kruskal_mutual_information(float(xi)) == 2.0 * kruskal_entanglement(float(xi))
        for xi in np.linspace(0.0, 3.0, 31)
    )
    ok = worst <= 1e-10 and count >= 500 and identical
    detail = (
        f"{count}-point grid, max |closed - generic| = {worst:.3e} (<= 1e-10); "
        f"I = 2S identically: {identical}"
    )
    assert _report(4, ok, detail), detail


def test_criterion_5_fock_oracle():
    start = time.perf_counter()
    worst_entropy = (0.0, 0.0)
    worst_occupation = (0.0, 0.0)
    worst_cm = (0.0, 0.0)
    for k in range(13):
        r = 1.5 * k / 12.0
        state = truncated_tms(r, 60)
        entropy_err = abs(reduced_entropy(state) - _kernels.entropy_f(math.cosh(2.0 * r)))
        occupation_err = abs(mean_occupation(state) - math.sinh(r) ** 2)
        target = math.cosh(2.0 * r) * np.eye(4)
        target[0, 2] = target[2, 0] = math.sinh(2.0 * r)
        target[1, 3] = target[3, 1] = -math.sinh(2.0 * r)
        cm_err = float(np.max(np.abs(second_moments_matrix(state) - target)))
        if entropy_err > worst_entropy[0]:
            worst_entropy = (entropy_err, r)
        if occupation_err > worst_occupation[0]:
            worst_occupation = (occupation_err, r)
        if cm_err > worst_cm[0]:
            worst_cm = (cm_err, r)
    elapsed = time.perf_counter() - start
    ok = (
        worst_entropy[0] <= 1e-8
        and worst_occupation[0] <= 1e-8
        and worst_cm[0] <= 1e-7
        and elapsed < 1.0
    )
    detail = (
        f"d=60, r in [0, 1.5]: max entropy err {worst_entropy[0]:.3e} at r={worst_entropy[1]:.3f} "
        f"(<= 1e-8), max occupation err {worst_occupation[0]:.3e} at r={worst_occupation[1]:.3f} "
        f"(<= 1e-8), max CM err {worst_cm[0]:.3e} at r={worst_cm[1]:.3f} (<= 1e-7), "
        f"runtime {elapsed:.3f} s (< 1 s)"
    )
    assert _report(5, ok, detail), detail


def test_criterion_6_monogamy_and_redistribution():
    grid = np.linspace(0.0, 2.5, 15)
    min_res = math.inf
    for xi in grid:
        for l in grid:
            for n in grid:
                min_res = min(min_res, _kernels.residual_contangle(float(xi), float(l), float(n)))
    zero_xi_worst = max(
        abs(_kernels.residual_contangle(0.0, float(l), float(n)))
        for l in grid
        for n in grid
    )
    zero_lmin_worst = max(abs(_kernels.residual_contangle(float(xi), 0.0, 2.0)) for xi in grid)

    lam3 = 1.0 / (8.0 * math.pi)
    res_by_mass = []
    for mass in (0.5, 0.2, 0.1, 0.05):
        l = _kernels.squeezing_from_mass_freq(mass, lam3)
        res_by_mass.append(_kernels.residual_contangle(1.0, l, l))
    strictly_growing = all(a < b for a, b in zip(res_by_mass, res_by_mass[1:]))

    axes, fixed = _axis_values("fig3")
    exceeds = False
    for xi in axes["xi"]:
        for mass in axes["mass"]:
            l = _kernels.squeezing_from_mass_freq(float(mass), fixed["lambda"])
            if _kernels.residual_contangle(float(xi), l, l) > 4.0 * float(xi) ** 2:
                exceeds = True
                break
        if exceeds:
            break

    ok = (
        min_res >= -1e-10
        and zero_xi_worst <= 1e-10
        and zero_lmin_worst == 0.0
        and strictly_growing
        and exceeds
    )
    detail = (
        f"min residual on 15^3 grid = {min_res:.3e} (>= -1e-10); |res| at xi=0 <= "
        f"{zero_xi_worst:.3e} (<= 1e-10); res at l_min=0 max {zero_lmin_worst:.1e} (= 0); "
        f"residual strictly grows as M drops {res_by_mass}; exceeds 4 xi^2 in fig3 grid: {exceeds}"
    )
    assert _report(6, ok, detail), detail


def test_criterion_7_degradation_ordering():
    axes, fixed = _axis_values("fig2")
    worst_excess = -math.inf
    worst_gap = (-math.inf, 0.0, 0.0)
    for mass in axes["mass"]:
        l = _kernels.squeezing_from_mass_freq(float(mass), fixed["lambda"])
        n = _kernels.squeezing_from_mass_freq(float(mass), fixed["nu"])
        for xi in axes["xi"]:
            tau_out = _kernels.out_out_contangle(float(xi), l, n)
            worst_excess = max(worst_excess, tau_out - 4.0 * float(xi) ** 2)
            gap = _kernels.kruskal_entanglement(float(xi)) - _kernels.out_out_mutual_information(
                float(xi), l, n
            )
            if gap > worst_gap[0]:
                worst_gap = (gap, float(mass), float(xi))
    ok = worst_excess <= 1e-10 and worst_gap[0] <= 1.0 + 1e-9
    detail = (
        f"fig2 grid: max tau_out - 4 xi^2 = {worst_excess:.3e} (<= 1e-10); "
        f"max S - I_out = {worst_gap[0]:.6f} ebits at (M={worst_gap[1]:.4g}, xi={worst_gap[2]:.4g}) "
        f"(<= 1 + 1e-9)"
    )
    assert _report(7, ok, detail), detail


def test_criterion_8_tripartite_decay():
    value = tripartite_upper_bound(1.0, 3.0, 3.0)
    ok = abs(value - TRI_GOLDEN_L3_N3_XI1) <= 1e-12 and value < 0.05
    detail = (
        f"tripartite bound at (xi=1, l=n=3) = {value:.16f}, pinned {TRI_GOLDEN_L3_N3_XI1} "
        f"(|diff| <= 1e-12), < 0.05"
    )
    assert _report(8, ok, detail), detail


def _load_columns(text):
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    names = lines[0].split(",")
    columns = {name: [] for name in names}
    for line in lines[1:]:
        for name, token in zip(names, line.split(",")):
            if token in ("true", "false"):
                columns[name].append(token == "true")
            else:
                columns[name].append(float(token))
    return {name: np.array(vals) for name, vals in columns.items()}


def test_criterion_9_figure_goldens(tmp_path):
    runner = CliRunner()
    start = time.perf_counter()
    regenerated = {}
    identical = {}
    for name in ("fig1b", "fig2", "fig3"):
        out = tmp_path / f"{name}.csv"
        result = runner.invoke(cli_main, ["figure", name, "--out", str(out)])
        assert result.exit_code == 0, result.output
        regenerated[name] = out.read_bytes()
        golden_path = GOLDEN_DIR / f"{name}.csv"
        identical[name] = golden_path.exists() and regenerated[name] == golden_path.read_bytes()
    elapsed = time.perf_counter() - start

    fig1b = _load_columns(regenerated["fig1b"].decode())
    degradation_ok = bool(np.all(fig1b["tau_out"] <= fig1b["tau_kruskal"] + 1e-10))

    fig2 = _load_columns(regenerated["fig2"].decode())
    smallest_mass = fig2["mass"].min()
    sel = fig2["mass"] == smallest_mass
    ratio = fig2["i_out"][sel] / fig2["s_kruskal"][sel]
    below = bool(np.all(fig2["i_out"][sel] < fig2["s_kruskal"][sel]))
    approaching = bool(np.all(np.diff(ratio) > 0.0)) and ratio[-1] > 0.8

    fig3 = _load_columns(regenerated["fig3"].decode())
    surpasses = bool(np.any(fig3["tau_residual"] > fig3["tau_kruskal"]))

    ok = all(identical.values()) and degradation_ok and below and approaching and surpasses
    detail = (
        f"byte-identical goldens: {identical}; fig1b tau_out <= 4 xi^2: {degradation_ok}; "
        f"fig2 I_out below S and approaching at M={smallest_mass:.3g} "
        f"(ratio {ratio[0]:.3f} -> {ratio[-1]:.3f}): {below and approaching}; "
        f"fig3 residual surpasses 4 xi^2: {surpasses}; regeneration {elapsed:.2f} s"
    )
    assert _report(9, ok, detail), detail
