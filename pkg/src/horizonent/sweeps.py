"""Deterministic parameter sweeps over the horizon correlation quantities.

A sweep walks a 1- or 2-axis grid over (xi, mass, lambda, nu), maps each
point to effective squeezings and emits one CSV row per point.  Rows are
ordered with the first axis slowest, every numeric field is printed with
a fixed 13-significant-digit format, and evaluation is a pure function
of the SweepSpec, so identical invocations produce byte-identical output
regardless of worker count or kernel backend.
"""

import math
import multiprocessing
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InvalidArgumentError

PARAM_NAMES = ("xi", "mass", "lambda", "nu")

SWEEP_COLUMNS = (
    "xi",
    "mass",
    "lambda",
    "nu",
    "l",
    "n",
    "s_kruskal",
    "i_kruskal",
    "tau_kruskal",
    "tau_out",
    "i_out",
    "tau_1v3",
    "tau_residual",
    "tau_tri_upper",
    "entangled_out",
)

INSET_COLUMNS = ("lambda", "nu", "mass", "survives")

#: columns that diverge at xi -> infinity (emitted as the token "inf")
_INF_AT_LIMIT = ("s_kruskal", "i_kruskal", "tau_kruskal")
#: columns undefined at xi -> infinity (emitted as the token "nan")
_NAN_AT_LIMIT = ("i_out", "tau_1v3", "tau_residual", "tau_tri_upper")

_CHUNK = 4096


def format_value(v) -> str:
    """Fixed-width token for one CSV field; locale independent."""
    if isinstance(v, bool):
        return "true" if v else "false"
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".12e")


@dataclass(frozen=True)
class Axis:
    """One swept parameter: an inclusive range with fixed point count."""

    name: str
    start: float
    stop: float
    count: int
    spacing: str = "lin"

    def __post_init__(self):
        if self.name not in PARAM_NAMES:
            raise InvalidArgumentError(f"unknown axis name {self.name!r}")
        if self.count < 2:
            raise InvalidArgumentError("axis count must be at least 2")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InvalidArgumentError("axis bounds must be finite")
        if not self.start < self.stop:
            raise InvalidArgumentError("axis start must be below stop")
        if self.spacing not in ("lin", "log"):
            raise InvalidArgumentError("axis spacing must be 'lin' or 'log'")
        floor = 0.0 if self.name == "xi" and self.spacing == "lin" else None
        if floor is not None:
            if self.start < floor:
                raise InvalidArgumentError("xi axis must start at or above 0")
        elif self.start <= 0.0:
            raise InvalidArgumentError(f"{self.name} axis must be positive")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)

    def describe(self) -> str:
        return f"{self.name}={format(self.start, '.12g')}:{format(self.stop, '.12g')}:{self.count}:{self.spacing}"


@dataclass(frozen=True)
class SweepSpec:
    """Axes plus fixed values for the remaining parameters."""

    axes: tuple
    fixed: dict = field(default_factory=dict)
    xi_infinite: bool = False

    def __post_init__(self):
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        if not 1 <= len(axes) <= 2:
            raise InvalidArgumentError("a sweep takes one or two axes")
        axis_names = [a.name for a in axes]
        if len(set(axis_names)) != len(axis_names):
            raise InvalidArgumentError("axis names must be distinct")
        if self.xi_infinite and "xi" in axis_names:
            raise InvalidArgumentError("xi cannot be swept in the infinite-squeezing regime")
        fixed = dict(self.fixed)
        for name, v in fixed.items():
            if name not in PARAM_NAMES:
                raise InvalidArgumentError(f"unknown parameter {name!r}")
            if name in axis_names:
                raise InvalidArgumentError(f"{name} is both an axis and a fixed value")
            floor_ok = v >= 0.0 if name == "xi" else v > 0.0
            if not (math.isfinite(v) and floor_ok):
                raise InvalidArgumentError(f"fixed {name} is out of range: {v}")
        needed = set(PARAM_NAMES) - set(axis_names)
        if self.xi_infinite:
            needed.discard("xi")
            fixed.pop("xi", None)
        missing = needed - set(fixed)
        if missing:
            raise InvalidArgumentError(f"missing values for {sorted(missing)}")
        object.__setattr__(self, "fixed", fixed)

    @property
    def n_points(self) -> int:
        n = 1
        for a in self.axes:
            n *= a.count
        return n

    def describe(self) -> str:
        parts = [f"axis:{a.describe()}" for a in self.axes]
        if self.xi_infinite:
            parts.append("xi=inf")
        for name in PARAM_NAMES:
            if name in self.fixed:
                parts.append(f"{name}={format(self.fixed[name], '.12g')}")
        return " ".join(parts)


def _flat_params(spec: SweepSpec) -> dict:
    """Per-point parameter arrays in row order (first axis slowest)."""
    npts = spec.n_points
    columns = {}
    if len(spec.axes) == 1:
        columns[spec.axes[0].name] = spec.axes[0].values()
    else:
        a, b = spec.axes
        av, bv = np.meshgrid(a.values(), b.values(), indexing="ij")
        columns[a.name] = av.ravel()
        columns[b.name] = bv.ravel()
    for name, v in spec.fixed.items():
        columns[name] = np.full(npts, float(v))
    return columns


def _compute_chunk(args):
    xi, mass, lam, nu = args
    out = np.empty((len(xi), 13))
    _kernels.evaluate_grid(xi, mass, lam, nu, out)
    return out


def _evaluate_finite(params: dict, workers: int) -> np.ndarray:
    arrays = tuple(
        np.ascontiguousarray(params[name], dtype=np.float64)
        for name in ("xi", "mass", "lambda", "nu")
    )
    npts = len(arrays[0])
    if workers <= 1 or npts <= _CHUNK:
        return _compute_chunk(arrays)
    bounds = list(range(0, npts, _CHUNK)) + [npts]
    chunks = [tuple(a[lo:hi] for a in arrays) for lo, hi in zip(bounds, bounds[1:])]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_compute_chunk, chunks)
    return np.concatenate(parts, axis=0)


def sweep_lines(spec: SweepSpec, provenance: str, workers: int = 1):
    """Yield the CSV lines (comments, header, rows) for a sweep."""
    yield f"# {provenance}"
    if spec.xi_infinite:
        yield (
            "# xi=inf limit: tau_out and entangled_out are exact limit values; "
            + "/".join(_INF_AT_LIMIT)
            + " diverge (token inf); "
            + "/".join(_NAN_AT_LIMIT)
            + " are undefined (token nan)"
        )
    yield ",".join(SWEEP_COLUMNS)
    params = _flat_params(spec)
    if spec.xi_infinite:
        yield from _infinite_rows(params)
    else:
        values = _evaluate_finite(params, workers)
        for k in range(values.shape[0]):
            row = values[k]
            tokens = [
                format_value(params["xi"][k]),
                format_value(params["mass"][k]),
                format_value(params["lambda"][k]),
                format_value(params["nu"][k]),
                format_value(row[0]),   # l
                format_value(row[1]),   # n
                format_value(row[2]),   # s_kruskal
                format_value(row[3]),   # i_kruskal
                format_value(row[4]),   # tau_kruskal
                format_value(row[5]),   # tau_out
                format_value(row[6]),   # i_out
                format_value(row[9]),   # tau_1v3
                format_value(row[10]),  # tau_residual
                format_value(row[11]),  # tau_tri_upper
                format_value(bool(row[12] > 0.0)),
            ]
            yield ",".join(tokens)


def _infinite_rows(params: dict):
    npts = len(params["mass"])
    for k in range(npts):
        mass = float(params["mass"][k])
        lam = float(params["lambda"][k])
        nu = float(params["nu"][k])
        l = _kernels.squeezing_from_mass_freq(mass, lam)
        n = _kernels.squeezing_from_mass_freq(mass, nu)
        tau = _kernels.out_out_contangle_inf(l, n)
        yield ",".join(
            [
                "inf",
                format_value(mass),
                format_value(lam),
                format_value(nu),
                format_value(l),
                format_value(n),
                "inf",
                "inf",
                "inf",
                format_value(tau),
                "nan",
                "nan",
                "nan",
                "nan",
                format_value(tau > 0.0),
            ]
        )


def inset_lines(provenance: str):
    """Survival sign over a (lambda, nu, mass) lattice for the EPR limit."""
    yield f"# {provenance}"
    yield ",".join(INSET_COLUMNS)
    freqs = np.linspace(0.05, 3.0, 30)
    masses = np.linspace(0.01, 0.5, 30)
    for lam in freqs:
        for nu in freqs:
            for mass in masses:
                survives = _kernels.survives_infinite_squeezing(float(mass), float(lam), float(nu))
                yield ",".join(
                    [
                        format_value(float(lam)),
                        format_value(float(nu)),
                        format_value(float(mass)),
                        format_value(bool(survives)),
                    ]
                )


FIGURE_GRID = 60

FIGURES = {
    "fig1a": SweepSpec(
        axes=(
            Axis("lambda", 0.05, 3.0, FIGURE_GRID),
            Axis("nu", 0.05, 3.0, FIGURE_GRID),
        ),
        fixed={"mass": 1.0 / (2.0 * math.pi)},
        xi_infinite=True,
    ),
    "fig1b": SweepSpec(
        axes=(
            Axis("xi", 0.1, 3.0, FIGURE_GRID),
            Axis("mass", 0.01, 1.0, FIGURE_GRID),
        ),
        fixed={"lambda": 1.0, "nu": 2.0},
    ),
    "fig2": SweepSpec(
        axes=(
            Axis("mass", 0.01, 1.0, FIGURE_GRID),
            Axis("xi", 0.1, 3.0, FIGURE_GRID),
        ),
        fixed={"lambda": 1.0, "nu": 2.0},
    ),
    "fig3": SweepSpec(
        axes=(
            Axis("xi", 0.1, 3.0, FIGURE_GRID),
            Axis("mass", 0.01, 1.0, FIGURE_GRID),
        ),
        # the residual depends only on the weaker squeezing, so the second
        # frequency is inert; it is pinned to the first and reported as-is
        fixed={"lambda": 1.0 / (8.0 * math.pi), "nu": 1.0 / (8.0 * math.pi)},
    ),
}

FIGURE_NAMES = tuple(list(FIGURES) + ["fig1a-inset"])


def figure_lines(name: str, version: str, workers: int = 1):
    """CSV lines for one named figure grid."""
    if name == "fig1a-inset":
        return inset_lines(f"horizonent {version} figure fig1a-inset")
    if name not in FIGURES:
        raise InvalidArgumentError(f"unknown figure {name!r}")
    spec = FIGURES[name]
    return sweep_lines(spec, f"horizonent {version} figure {name} {spec.describe()}", workers)
