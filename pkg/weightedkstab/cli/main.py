"""
Command-line interface for weightedkstab.

Usage:
    wkstab catalog --mm 1-16                   # both spherical actions on the quadric threefold
    wkstab measures 3-2-17                     # exact μ and ν densities
    wkstab check 3-2-18 --weight cosh:a=3      # classify one weight, exit code = verdict
    wkstab threshold 3-2-19                    # a0 where μ(cosh(a·)) changes sign
    wkstab certify 3-2-21                      # λ with μ + λν >= 0
    wkstab logpair                             # the pair (2-29, t0 E)
    wkstab quadric 5                           # destabilizing weight for Q^3
"""
import logging
import sys
from functools import wraps
from typing import Optional

import click

from weightedkstab import __version__
from weightedkstab.config import Config
from weightedkstab.exceptions import KStabException, UnknownCaseError
from weightedkstab.measures import catalog as catalog_rows, find_by_mori_mukai, lookup, quadric_mu_density
from weightedkstab.stability import (
    StabilityCase,
    analyze_logpair,
    classify,
    destabilizing_weight,
    find_threshold,
    insensitivity_certificate,
)
from weightedkstab.stability.destabilize import DEFAULT_SEARCH_BUDGET
from weightedkstab.stability.logpair import DEFAULT_BUMP_HALF_WIDTH
from weightedkstab.utils import status
from weightedkstab.weights import parse_weight
from weightedkstab.cli.params import (
    FLOAT_PAIR,
    RATIONAL,
    RATIONAL_PAIR,
    configure_logging,
    emit,
    load_config,
    load_polytope_file,
    write_plot_csv,
)
from weightedkstab.cli.schemas import (
    CaseSchema,
    CertificateSchema,
    DestabilizingWeightSchema,
    LogPairSchema,
    PiecewisePolySchema,
    SignedMeasureSchema,
    ThresholdSchema,
    VerdictSchema,
)

__all__ = [
    "cli",
]

logger = logging.getLogger(__name__)

NO_CERTIFICATE = "no certificate found on search set"

EXIT_CODES = "\b\nExit codes:\n" + "\n".join(
    f"  {value}  {info['description']}" for code in status for value, info in status[code].items()
)

MEASURE_PROVENANCE = {
    "mu": "fiber integral of (x - kappa_x) x^k over the slices of the polytope",
    "nu": "(y - kappa_y) times the fiber integral of x^k over the slices of the polytope",
}


def handle_errors(func):
    """Report library errors on stderr and exit with their status"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except KStabException as e:
            click.echo(f"Error: {e.title}: {e.detail}", err=True)
            sys.exit(int(e.exit_code))

    return wrapper


def case_selector(func):
    """Exactly one of a catalog id, --logpair T, --quadric N or --polytope-file PATH"""
    func = click.option("--polytope-file", type=click.Path(dir_okay=False), help="JSON moment polytope")(func)
    func = click.option("--quadric", "quadric", type=int, help="quadric Q^{N-2}, N >= 5")(func)
    func = click.option("--logpair", "logpair", type=RATIONAL, help="log pair (2-29, tE), 0 <= t < 1")(func)
    func = click.argument("case_id", required=False)(func)
    return func


def resolve_case(case_id: Optional[str], logpair, quadric: Optional[int], polytope_file: Optional[str]):
    selected = [value is not None for value in (case_id, logpair, quadric, polytope_file)]
    if sum(selected) != 1:
        raise click.UsageError("Give exactly one of CASE_ID, --logpair, --quadric or --polytope-file")
    if case_id is not None:
        return StabilityCase.from_catalog(case_id), {"case": case_id}
    if logpair is not None:
        return StabilityCase.logpair(logpair), {"logpair": str(logpair)}
    if quadric is not None:
        return StabilityCase.quadric(quadric), {"quadric": quadric}
    return StabilityCase.from_polytope(load_polytope_file(polytope_file)), {"polytope_file": polytope_file}


@click.group(epilog=EXIT_CODES)
@click.version_option(version=__version__, prog_name="wkstab")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="JSON object overriding defaults")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")
@click.pass_context
@handle_errors
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool):
    """
    Weighted K-polystability of rank two spherical Fano threefolds.

    JSON results go to stdout, diagnostics to stderr.
    """
    configure_logging(verbose)
    if config_path:
        # overrides only last for this invocation
        ctx.call_on_close(Config.reset)
        load_config(config_path)


@cli.command()
@click.option("--id", "dm_id", help="spherical action id, e.g. 3-2-19")
@click.option("--mm", "mori_mukai", help="Mori-Mukai id, e.g. 1-16")
@handle_errors
def catalog(dm_id: Optional[str], mori_mukai: Optional[str]):
    """List the rank two cases with their polytopes and notes."""
    rows = catalog_rows()
    if dm_id is not None:
        rows = [row for row in rows if row.dm_id == dm_id]
        if not rows:
            raise UnknownCaseError(f"No case with id {dm_id!r}")
    if mori_mukai is not None:
        rows = [row for row in rows if row in find_by_mori_mukai(mori_mukai)]
        if not rows:
            raise UnknownCaseError(f"No case with Mori-Mukai id {mori_mukai!r}")
    inputs = {"id": dm_id, "mm": mori_mukai}
    emit("catalog", inputs, {"cases": CaseSchema(many=True).dump(rows)})


@cli.command()
@case_selector
@click.option("--plot-csv", type=click.Path(dir_okay=False), help="Write sampled densities to this CSV file")
@click.option("--samples", type=click.IntRange(min=2), default=201, show_default=True, help="CSV rows")
@handle_errors
def measures(case_id, logpair, quadric, polytope_file, plot_csv: Optional[str], samples: int):
    """Exact densities of μ and ν as breakpoints and ascending coefficients."""
    case, inputs = resolve_case(case_id, logpair, quadric, polytope_file)
    results = {
        "mu": SignedMeasureSchema().dump(case.mu),
        "nu": SignedMeasureSchema().dump(case.nu),
    }
    provenance = dict(MEASURE_PROVENANCE)
    if quadric is not None:
        results["mu_folded"] = SignedMeasureSchema().dump(quadric_mu_density(quadric))
        provenance["mu_folded"] = "y >= 0 half of mu(y) + mu(-y), checked against its closed form"
    if plot_csv:
        write_plot_csv(plot_csv, (case.mu.density, case.nu.density), samples)
        inputs.update(plot_csv=plot_csv, samples=samples)
    emit("measures", inputs, results, provenance)


@cli.command()
@case_selector
@click.option("--weight", "weight_spec", default="const:1", show_default=True, help="e.g. cosh:a=1.5 or sech")
@click.option("--tol", type=float, default=None, help="Relative tolerance of the verdict")
@handle_errors
def check(case_id, logpair, quadric, polytope_file, weight_spec: str, tol: Optional[float]):
    """Classify one case for one weight; the exit code encodes the verdict."""
    case, inputs = resolve_case(case_id, logpair, quadric, polytope_file)
    weight = parse_weight(weight_spec)
    verdict = classify(case, weight, tol)
    inputs.update(weight=weight_spec, tol=tol)
    provenance = {
        "futaki": f"nu({verdict.weight}) by {verdict.futaki_method.value}",
        "margin": f"mu({verdict.weight}) by {verdict.margin_method.value}",
    }
    emit("check", inputs, VerdictSchema().dump(verdict), provenance)
    sys.exit(int(verdict.exit_code))


@cli.command()
@click.argument("case_id")
@click.option("--family", type=click.Choice(["cosh"]), default="cosh", show_default=True)
@click.option("--bracket", type=FLOAT_PAIR, default=None, help="a,b with a sign change of μ(cosh(a·))")
@click.option("--tol", type=float, default=None, help="|μ(g_a0)| <= tol * μ(1)")
@handle_errors
def threshold(case_id: str, family: str, bracket, tol: Optional[float]):
    """Parameter a0 where the cosh weights stop being stabilizing (3-2-18 and 3-2-19)."""
    result = find_threshold(case_id, bracket, tol)
    inputs = {"case": case_id, "family": family, "bracket": list(bracket) if bracket else None, "tol": tol}
    provenance = {
        "a0": "bisection and secant steps on the closed form of mu(cosh(a y))",
        "quadrature_check": "Gauss-Legendre pairing of the exact density with cosh(a0 y)",
    }
    emit("threshold", inputs, ThresholdSchema().dump(result), provenance)


@cli.command()
@case_selector
@click.option("--lambda-range", type=RATIONAL_PAIR, default=None, help="lo,hi of the λ grid")
@click.option("--grid", type=click.IntRange(min=1), default=None, help="Number of grid steps")
@handle_errors
def certify(case_id, logpair, quadric, polytope_file, lambda_range, grid: Optional[int]):
    """Search λ such that μ + λν is a positive measure."""
    case, inputs = resolve_case(case_id, logpair, quadric, polytope_file)
    certificate = insensitivity_certificate(case, lambda_range, grid)
    inputs.update(lambda_range=[str(b) for b in lambda_range] if lambda_range else None, grid=grid)
    if certificate is None:
        results = {"certificate": None, "message": NO_CERTIFICATE}
    else:
        results = {"certificate": CertificateSchema().dump(certificate), "message": "certificate found"}
    emit("certify", inputs, results, {"certificate": "exact root isolation on every piece of mu + lambda nu"})


@cli.command()
@click.option("--tol", type=float, default=None, help="Relative tolerance of the verdicts")
@click.option("--eps", type=RATIONAL, default=DEFAULT_BUMP_HALF_WIDTH, show_default=True, help="Half-width of the bump")
@handle_errors
def logpair(tol: Optional[float], eps):
    """The pair (2-29, t0 E) where μ_t(1) vanishes."""
    report = analyze_logpair(tol, eps)
    provenance = {
        "t0": "positive root of 3t^2 + 4t - 2 isolated in exact arithmetic",
        "verdicts": "pairings of the log pair measures at the rational t0",
    }
    emit("logpair", {"tol": tol, "eps": str(eps)}, LogPairSchema().dump(report), provenance)


@cli.command()
@click.argument("n", type=int)
@click.option("--search-budget", type=click.IntRange(min=1), default=DEFAULT_SEARCH_BUDGET, show_default=True)
@handle_errors
def quadric(n: int, search_budget: int):
    """μ(1) and a destabilizing weight for the quadric Q^{N-2}."""
    case = StabilityCase.quadric(n)
    folded = quadric_mu_density(n)
    found = destabilizing_weight(case, search_budget)
    results = {
        "n": n,
        "mu_one": str(case.mu.total()),
        "mu_one_exact": True,
        "mu_folded": PiecewisePolySchema().dump(folded.density),
        "destabilizing": DestabilizingWeightSchema().dump(found),
    }
    provenance = {"destabilizing": "even bump on the interval where the folded mu is negative"}
    emit("quadric", {"n": n, "search_budget": search_budget}, results, provenance)


if __name__ == "__main__":
    cli()
