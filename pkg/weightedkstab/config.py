"""Process-wide numerical defaults.

Every tunable used by the library is a class attribute of :class:`Config`. Functions read them at
call time, so :meth:`Config.update` (or the CLI ``--config`` option) changes the behaviour of
subsequent calls.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Mapping

from marshmallow import Schema, fields, validate, ValidationError, RAISE

from weightedkstab.exceptions import InputError
from weightedkstab.utils.marshmallow_fields import RationalField

logger = logging.getLogger(__name__)


class Config:
    # verdict tolerance, relative to the weighted mass of the measure
    DEFAULT_TOLERANCE: float = 1e-9
    GAUSS_LEGENDRE_ORDER: int = 32
    QUADRATURE_PANEL_BUDGET: int = 2 ** 16
    MOLLIFIER_FLOOR: float = 1e-6
    # mpmath working precision (decimal digits) for closed forms
    CLOSED_FORM_DPS: int = 50
    SERIES_RADIUS: float = 0.25
    THRESHOLD_BRACKET = (0.1, 4.0)
    THRESHOLD_TOLERANCE: float = 1e-10
    LAMBDA_RANGE = (Fraction(-10), Fraction(10))
    LAMBDA_GRID: int = 1000
    # tried in this order before the grid; 3-2-17 is certified by both 2 and 2/3
    KNOWN_LAMBDAS = (Fraction(0), Fraction(2), Fraction(2, 3))
    ROOT_RESOLUTION: Fraction = Fraction(1, 2 ** 64)
    SCHEMA_VERSION: str = "1.0"

    _defaults: Dict[str, Any] = {}

    @classmethod
    def as_dict(cls) -> Dict[str, Any]:
        return {name: getattr(cls, name) for name in ConfigSchema().fields}

    @classmethod
    def update(cls, mapping: Mapping[str, Any]) -> None:
        """
        Override defaults from a (JSON-like) mapping
        :param mapping: keys are attribute names of Config
        :return:
        """
        try:
            values = ConfigSchema().load(dict(mapping), unknown=RAISE)
        except ValidationError as e:
            raise InputError(f"Invalid configuration: {e.messages}")
        for name, value in values.items():
            logger.debug("config %s = %r", name, value)
            setattr(cls, name, value)

    @classmethod
    def reset(cls) -> None:
        for name, value in cls._defaults.items():
            setattr(cls, name, value)


class ConfigSchema(Schema):
    DEFAULT_TOLERANCE = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    GAUSS_LEGENDRE_ORDER = fields.Integer(validate=validate.Range(min=2))
    QUADRATURE_PANEL_BUDGET = fields.Integer(validate=validate.Range(min=1))
    MOLLIFIER_FLOOR = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    CLOSED_FORM_DPS = fields.Integer(validate=validate.Range(min=15))
    SERIES_RADIUS = fields.Float(validate=validate.Range(min=0))
    THRESHOLD_BRACKET = fields.Tuple((fields.Float(), fields.Float()))
    THRESHOLD_TOLERANCE = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    LAMBDA_RANGE = fields.Tuple((RationalField(), RationalField()))
    LAMBDA_GRID = fields.Integer(validate=validate.Range(min=1))
    KNOWN_LAMBDAS = fields.List(RationalField())
    ROOT_RESOLUTION = RationalField()
    SCHEMA_VERSION = fields.String()


Config._defaults = Config.as_dict()
