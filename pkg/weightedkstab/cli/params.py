"""click parameter types, the stderr log handler and the file helpers shared by the commands."""
import json
import logging
from fractions import Fraction
from typing import Iterable, Optional

import click
import numpy as np
from marshmallow import ValidationError

from weightedkstab.config import Config
from weightedkstab.exceptions import InputError, PolytopeFileError
from weightedkstab.geometry import MomentPolytope
from weightedkstab.weights import density_values
from weightedkstab.cli.schemas import OutputRecordSchema, PolytopeFileSchema

logger = logging.getLogger(__name__)

CSV_HEADER = "y,density_mu,density_nu"


class RationalType(click.ParamType):
    """``p/q``, integer or finite decimal, converted exactly"""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


class PairType(click.ParamType):
    """Two comma separated numbers ``a,b``"""

    name = "a,b"

    def __init__(self, exact: bool = False):
        self.exact = exact

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = [part.strip() for part in str(value).split(",")]
        if len(parts) != 2:
            self.fail(f"expected two comma separated numbers, got {value!r}", param, ctx)
        try:
            if self.exact:
                return tuple(Fraction(part) for part in parts)
            return tuple(float(part) for part in parts)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a pair of numbers", param, ctx)


RATIONAL = RationalType()
FLOAT_PAIR = PairType()
RATIONAL_PAIR = PairType(exact=True)


class ClickEchoHandler(logging.Handler):
    """Writes records to whatever stream click currently treats as stderr"""

    def emit(self, record):
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


_handler = ClickEchoHandler()
_handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))


def configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger("weightedkstab")
    if _handler not in package_logger.handlers:
        package_logger.addHandler(_handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def load_config(path: str) -> None:
    try:
        with open(path, encoding="utf-8") as f:
            overrides = json.load(f)
    except (OSError, ValueError) as e:
        raise InputError(f"Cannot read configuration {path}: {e}")
    if not isinstance(overrides, dict):
        raise InputError(f"Configuration {path} must hold a JSON object")
    Config.update(overrides)
    logger.debug("configuration loaded from %s", path)


def load_polytope_file(path: str) -> MomentPolytope:
    """
    Read a custom moment polytope
    :param path: JSON document {"vertices": [[x, y], ...], "kappa": [x, y], "dh_exponent": k}
    :return:
    """
    try:
        with open(path, encoding="utf-8") as f:
            document = json.load(f)
    except (OSError, ValueError) as e:
        raise PolytopeFileError(f"Cannot read {path}: {e}")
    if not isinstance(document, dict):
        raise PolytopeFileError(f"{path} must hold a JSON object")
    document.setdefault("label", path)
    try:
        return PolytopeFileSchema().load(document)
    except ValidationError as e:
        raise PolytopeFileError(f"{path}: {e.messages}")


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2)


def emit(command: str, inputs: dict, results, provenance: Optional[dict] = None) -> None:
    record = OutputRecordSchema().dump(
        {
            "schema_version": Config.SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "results": results,
            "provenance": provenance or {},
        }
    )
    click.echo(dumps(record))


def write_plot_csv(path: str, densities: Iterable, samples: int) -> None:
    """
    Sample μ and ν at evenly spaced points of their common support
    :param path: output file
    :param densities: (μ density, ν density)
    :param samples: number of rows, at least 2
    :return:
    """
    mu, nu = densities
    lo, hi = (float(b) for b in mu.support)
    ys = np.linspace(lo, hi, samples)
    table = np.column_stack([ys, density_values(mu, ys), density_values(nu, ys)])
    np.savetxt(path, table, fmt="%.17g", delimiter=",", header=CSV_HEADER, comments="", newline="\n")
    logger.info("wrote %d samples to %s", samples, path)
