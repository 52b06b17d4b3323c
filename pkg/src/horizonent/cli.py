"""Command-line front end.

Subcommands: measure, sweep, figure, critical-mass, oracle, state.
Output is CSV (with a #-prefixed provenance line) or flat JSON.  Exit
codes: 0 success, 2 usage error, 3 numerical domain error, 4 unwritable
output path.

Option values can also come from a plain key=value config file passed
with --config; explicit flags win over the config, which wins over
built-in defaults.
"""

import json
import math
import sys

import click

from . import __version__
from .correlations import REPORT_FIELD_NAMES, build_report
from .errors import HorizonentError, InvalidArgumentError
from .fock import mean_occupation, reduced_entropy, second_moments_matrix, truncated_tms
from .gaussian import dump_csv
from .horizon import SqueezingTriple, critical_mass, triple_from_horizon
from ._kernels import BACKEND_NAME, entropy_f as _entropy_f_kernel
from .sweeps import (
    FIGURE_NAMES,
    Axis,
    SweepSpec,
    figure_lines,
    format_value,
    sweep_lines,
)
from .states import schwarzschild_state_blocks, schwarzschild_state_product

EXIT_DOMAIN_ERROR = 3
EXIT_UNWRITABLE = 4

_CONFIG_KEYS = ("xi", "mass", "lambda", "nu", "l", "n", "format", "out", "workers")


def _load_config(path):
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise click.UsageError(f"{path}:{lineno}: expected key=value")
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _CONFIG_KEYS:
                    raise click.UsageError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = value
    except OSError as exc:
        raise click.UsageError(f"cannot read config file: {exc}")
    return values


def _merge(flag_value, config, key, default=None):
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _parse_float(text, name):
    try:
        return float(text)
    except (TypeError, ValueError):
        raise click.UsageError(f"{name} must be a number, got {text!r}")


def _parse_xi(text):
    if text is None:
        return None, False
    if str(text).strip().lower() == "inf":
        return None, True
    return _parse_float(text, "xi"), False


def _write_lines(lines, out_path):
    try:
        if out_path is None:
            for line in lines:
                click.echo(line)
        else:
            with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
                for line in lines:
                    fh.write(line + "\n")
    except OSError as exc:
        click.echo(f"error: cannot write output: {exc}", err=True)
        sys.exit(EXIT_UNWRITABLE)


def _fail_domain(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_DOMAIN_ERROR)


def _json_value(v):
    if isinstance(v, bool):
        return v
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


@click.group()
@click.version_option(version=__version__, prog_name="horizonent")
def main():
    """Entanglement and correlations of a squeezed field across a horizon."""


_common_point_options = [
    click.option("--xi", "xi_text", default=None, help="Kruskal squeezing, or 'inf'."),
    click.option("--mass", "mass_text", default=None, help="Black-hole mass (natural units)."),
    click.option("--lambda", "lam_text", default=None, help="First mode frequency."),
    click.option("--nu", "nu_text", default=None, help="Second mode frequency."),
    click.option("--config", "config_path", default=None, help="key=value defaults file."),
    click.option("--out", "out_path", default=None, help="Output file (default: stdout)."),
]


def _add_options(options):
    def wrap(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn

    return wrap


@main.command()
@_add_options(_common_point_options)
@click.option("--l", "l_text", default=None, help="Effective squeezing of the first mode.")
@click.option("--n", "n_text", default=None, help="Effective squeezing of the second mode.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default=None,
    help="Output format (default json).",
)
def measure(xi_text, mass_text, lam_text, nu_text, config_path, out_path, l_text, n_text, fmt):
    """Evaluate every correlation quantity at one parameter point.

    Give either the physical set (--mass, --lambda, --nu) or the
    squeezings (--l, --n) directly, plus --xi.
    """
    config = _load_config(config_path) if config_path else {}
    xi_text = _merge(xi_text, config, "xi")
    mass_text = _merge(mass_text, config, "mass")
    lam_text = _merge(lam_text, config, "lambda")
    nu_text = _merge(nu_text, config, "nu")
    l_text = _merge(l_text, config, "l")
    n_text = _merge(n_text, config, "n")
    fmt = _merge(fmt, config, "format", "json")
    out_path = _merge(out_path, config, "out")
    if fmt not in ("csv", "json"):
        raise click.UsageError(f"unknown format {fmt!r}")

    physical = [v is not None for v in (mass_text, lam_text, nu_text)]
    direct = [v is not None for v in (l_text, n_text)]
    if any(physical) and any(direct):
        raise click.UsageError("give either (--mass, --lambda, --nu) or (--l, --n), not both")
    if not (all(physical) or all(direct)):
        raise click.UsageError("give all of (--mass, --lambda, --nu) or all of (--l, --n)")
    xi, xi_infinite = _parse_xi(xi_text)
    if xi is None and not xi_infinite:
        raise click.UsageError("--xi is required (a number or 'inf')")

    try:
        if all(physical):
            triple = triple_from_horizon(
                0.0 if xi_infinite else xi,
                _parse_float(mass_text, "mass"),
                _parse_float(lam_text, "lambda"),
                _parse_float(nu_text, "nu"),
                xi_infinite=xi_infinite,
            )
        else:
            l = _parse_float(l_text, "l")
            n = _parse_float(n_text, "n")
            triple = (
                SqueezingTriple.infinite(l, n)
                if xi_infinite
                else SqueezingTriple(xi, l, n)
            )
        report = build_report(triple)
    except HorizonentError as exc:
        _fail_domain(exc)

    payload = report.as_dict()
    if fmt == "json":
        body = json.dumps({k: _json_value(v) for k, v in payload.items()})
        _write_lines([body], out_path)
    else:
        lines = [
            f"# horizonent {__version__} measure "
            + ("xi=inf " if xi_infinite else f"xi={format(triple.xi, '.12g')} ")
            + f"l={format(triple.l, '.12g')} n={format(triple.n, '.12g')}",
            ",".join(REPORT_FIELD_NAMES),
            ",".join(format_value(payload[k]) for k in REPORT_FIELD_NAMES),
        ]
        _write_lines(lines, out_path)


def _parse_axis(text):
    parts = text.split("=", 1)
    if len(parts) != 2:
        raise click.UsageError(f"bad axis spec {text!r}, expected name=start:stop:count[:lin|log]")
    name, rng = parts
    bits = rng.split(":")
    if len(bits) not in (3, 4):
        raise click.UsageError(f"bad axis spec {text!r}, expected name=start:stop:count[:lin|log]")
    spacing = bits[3] if len(bits) == 4 else "lin"
    try:
        axis = Axis(
            name.strip(),
            float(bits[0]),
            float(bits[1]),
            int(bits[2]),
            spacing.strip(),
        )
    except (ValueError, InvalidArgumentError) as exc:
        raise click.UsageError(f"bad axis spec {text!r}: {exc}")
    return axis


@main.command()
@_add_options(_common_point_options)
@click.option(
    "--axis",
    "axis_texts",
    multiple=True,
    help="Swept parameter, name=start:stop:count[:lin|log]; repeat for a second axis.",
)
@click.option("--workers", type=int, default=1, show_default=True, help="Worker processes.")
def sweep(xi_text, mass_text, lam_text, nu_text, config_path, out_path, axis_texts, workers):
    """Emit one CSV row per point of a 1- or 2-axis parameter grid."""
    config = _load_config(config_path) if config_path else {}
    xi_text = _merge(xi_text, config, "xi")
    mass_text = _merge(mass_text, config, "mass")
    lam_text = _merge(lam_text, config, "lambda")
    nu_text = _merge(nu_text, config, "nu")
    out_path = _merge(out_path, config, "out")
    workers = int(_merge(workers if workers != 1 else None, config, "workers", 1))

    if not axis_texts:
        raise click.UsageError("at least one --axis is required")
    axes = tuple(_parse_axis(t) for t in axis_texts)
    axis_names = {a.name for a in axes}
    xi, xi_infinite = _parse_xi(xi_text)
    fixed = {}
    for name, text in (("mass", mass_text), ("lambda", lam_text), ("nu", nu_text)):
        if text is not None:
            if name in axis_names:
                raise click.UsageError(f"{name} is both an axis and a fixed value")
            fixed[name] = _parse_float(text, name)
    if xi is not None or xi_infinite:
        if "xi" in axis_names:
            raise click.UsageError("xi is both an axis and a fixed value")
        if not xi_infinite:
            fixed["xi"] = xi

    try:
        spec = SweepSpec(axes=axes, fixed=fixed, xi_infinite=xi_infinite)
    except InvalidArgumentError as exc:
        raise click.UsageError(str(exc))
    try:
        provenance = f"horizonent {__version__} sweep {spec.describe()}"
        lines = sweep_lines(spec, provenance, workers=workers)
        _write_lines(lines, out_path)
    except HorizonentError as exc:
        _fail_domain(exc)


@main.command()
@click.argument("name")
@click.option("--out", "out_path", default=None, help="Output file (default: <name>.csv).")
@click.option("--workers", type=int, default=1, show_default=True, help="Worker processes.")
def figure(name, out_path, workers):
    """Regenerate one of the canned figure grids (fig1a, fig1a-inset, fig1b, fig2, fig3)."""
    if name not in FIGURE_NAMES:
        raise click.UsageError(f"unknown figure {name!r}; choose from {', '.join(FIGURE_NAMES)}")
    if out_path is None:
        out_path = f"{name}.csv"
    try:
        lines = figure_lines(name, __version__, workers=workers)
        _write_lines(lines, out_path)
    except HorizonentError as exc:
        _fail_domain(exc)


@main.command("critical-mass")
@click.option("--lambda", "lam", type=float, required=True, help="First mode frequency.")
@click.option("--nu", type=float, required=True, help="Second mode frequency.")
def critical_mass_cmd(lam, nu):
    """Mass below which no outer-mode entanglement survives, even for EPR input."""
    if lam is None or nu is None or lam <= 0.0 or nu <= 0.0:
        raise click.UsageError("--lambda and --nu must be positive")
    try:
        value = critical_mass(lam, nu)
    except HorizonentError as exc:
        _fail_domain(exc)
    click.echo('{"critical_mass": %s}' % format(value, ".12g"))


@main.command()
@click.option("--out", "out_path", default=None, help="Output file (default: stdout).")
def oracle(out_path):
    """Convergence table of the number-basis oracle against the closed forms."""
    import numpy as np

    lines = [
        f"# horizonent {__version__} oracle convergence table",
        "r,d,norm_defect,entropy_error,occupation_error,cm_max_error",
    ]
    for r in (0.25, 0.5, 0.75, 1.0, 1.25, 1.5):
        for d in (10, 20, 40, 60, 80):
            state = truncated_tms(r, d)
            norm_defect = 1.0 - state.norm_squared
            entropy_err = abs(reduced_entropy(state) - _entropy_f_kernel(math.cosh(2.0 * r)))
            occ_err = abs(mean_occupation(state) - math.sinh(r) ** 2)
            cm = second_moments_matrix(state)
            target = np.zeros((4, 4))
            c2r, s2r = math.cosh(2.0 * r), math.sinh(2.0 * r)
            np.fill_diagonal(target, c2r)
            target[0, 2] = target[2, 0] = s2r
            target[1, 3] = target[3, 1] = -s2r
            cm_err = float(np.max(np.abs(cm - target)))
            lines.append(
                ",".join(
                    [
                        format(r, ".12g"),
                        str(d),
                        format_value(norm_defect),
                        format_value(entropy_err),
                        format_value(occ_err),
                        format_value(cm_err),
                    ]
                )
            )
    _write_lines(lines, out_path)


@main.command()
@_add_options(_common_point_options)
@click.option("--l", "l_text", default=None, help="Effective squeezing of the first mode.")
@click.option("--n", "n_text", default=None, help="Effective squeezing of the second mode.")
@click.option(
    "--route",
    type=click.Choice(["product", "blocks"]),
    default="product",
    show_default=True,
    help="Construction route for the four-mode state.",
)
def state(xi_text, mass_text, lam_text, nu_text, config_path, out_path, l_text, n_text, route):
    """Dump the four-mode covariance matrix as raw CSV (17 significant digits)."""
    config = _load_config(config_path) if config_path else {}
    xi_text = _merge(xi_text, config, "xi")
    mass_text = _merge(mass_text, config, "mass")
    lam_text = _merge(lam_text, config, "lambda")
    nu_text = _merge(nu_text, config, "nu")
    l_text = _merge(l_text, config, "l")
    n_text = _merge(n_text, config, "n")
    out_path = _merge(out_path, config, "out")

    physical = [v is not None for v in (mass_text, lam_text, nu_text)]
    direct = [v is not None for v in (l_text, n_text)]
    if any(physical) and any(direct):
        raise click.UsageError("give either (--mass, --lambda, --nu) or (--l, --n), not both")
    if not (all(physical) or all(direct)):
        raise click.UsageError("give all of (--mass, --lambda, --nu) or all of (--l, --n)")
    xi, xi_infinite = _parse_xi(xi_text)
    if xi_infinite:
        raise click.UsageError("the state dump needs a finite --xi")
    if xi is None:
        raise click.UsageError("--xi is required")

    try:
        if all(physical):
            triple = triple_from_horizon(
                xi,
                _parse_float(mass_text, "mass"),
                _parse_float(lam_text, "lambda"),
                _parse_float(nu_text, "nu"),
            )
        else:
            triple = SqueezingTriple(xi, _parse_float(l_text, "l"), _parse_float(n_text, "n"))
        build = schwarzschild_state_product if route == "product" else schwarzschild_state_blocks
        sigma = build(triple)
    except HorizonentError as exc:
        _fail_domain(exc)
    _write_lines(dump_csv(sigma.entries).splitlines(), out_path)


@main.command()
def backend():
    """Print which kernel backend (compiled or pure Python) is active."""
    click.echo(BACKEND_NAME)


if __name__ == "__main__":
    main()
