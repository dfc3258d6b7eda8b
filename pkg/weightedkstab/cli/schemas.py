"""Marshmallow schemas of every JSON document read or written by the command line."""
from marshmallow import Schema, fields, post_load, validate, ValidationError, RAISE

from weightedkstab.config import Config
from weightedkstab.exceptions import KStabException
from weightedkstab.geometry import MomentPolytope
from weightedkstab.poly import Polynomial, PiecewisePoly
from weightedkstab.utils import PointField, RationalField
from weightedkstab.weights import format_weight


class PiecewisePolySchema(Schema):
    """``pieces[i]`` lists the coefficients of the i-th piece in ascending degree"""

    breakpoints = fields.List(RationalField(), required=True)
    pieces = fields.List(fields.List(RationalField()), required=True)

    def get_attribute(self, obj, attr, default):
        if attr == "pieces":
            return [list(piece.coefficients) for piece in obj.pieces]
        return super().get_attribute(obj, attr, default)

    @post_load
    def make_piecewise(self, data, **kwargs):
        try:
            return PiecewisePoly(data["breakpoints"], [Polynomial(c) for c in data["pieces"]])
        except KStabException as e:
            raise ValidationError(e.detail)


class SignedMeasureSchema(Schema):
    kind = fields.Function(lambda m: m.kind.value)
    folded = fields.Boolean()
    support = fields.List(RationalField())
    density = fields.Nested(PiecewisePolySchema)
    total = fields.Function(lambda m: str(m.total()))
    exact = fields.Function(lambda m: True)


class PolytopeFileSchema(Schema):
    class Meta:
        unknown = RAISE

    vertices = fields.List(PointField(), required=True, validate=validate.Length(min=3))
    kappa = PointField(missing=lambda: (2, 0))
    dh_exponent = fields.Integer(missing=1, validate=validate.Range(min=0))
    label = fields.String(missing="custom polytope")

    @post_load
    def make_polytope(self, data, **kwargs):
        try:
            return MomentPolytope(**data)
        except KStabException as e:
            raise ValidationError(e.detail)


class PolytopeSchema(Schema):
    vertices = fields.List(PointField())
    kappa = PointField()
    dh_exponent = fields.Integer()


class CaseSchema(Schema):
    dm_id = fields.String()
    mori_mukai = fields.String()
    polytope = fields.Nested(PolytopeSchema)
    symmetric = fields.Function(lambda case: case.polytope.is_y_symmetric())
    notes = fields.List(fields.String())


class VerdictSchema(Schema):
    case = fields.String()
    weight = fields.String()
    futaki = fields.Float()
    margin = fields.Float()
    classification = fields.Function(lambda v: v.classification.value)
    tolerance = fields.Float()
    futaki_method = fields.Function(lambda v: v.futaki_method.value)
    margin_method = fields.Function(lambda v: v.margin_method.value)
    futaki_exact = RationalField(allow_none=True)
    margin_exact = RationalField(allow_none=True)
    exit_code = fields.Function(lambda v: int(v.exit_code))


class ThresholdSchema(Schema):
    case = fields.String()
    family = fields.Function(lambda r: "cosh")
    a0 = fields.Float()
    bracket = fields.List(fields.Float())
    residual = fields.Float()
    iterations = fields.Integer()
    tolerance = fields.Float()
    quadrature_check = fields.Float(allow_none=True)


class RootIntervalSchema(Schema):
    lo = RationalField()
    hi = RationalField()
    multiplicity = fields.Integer()


class PieceWitnessSchema(Schema):
    lo = RationalField()
    hi = RationalField()
    identically_zero = fields.Boolean()
    roots = fields.List(fields.Nested(RootIntervalSchema))
    samples = fields.List(PointField())


class CertificateSchema(Schema):
    case = fields.String()
    lam = RationalField(data_key="lambda")
    combined_density = fields.Nested(PiecewisePolySchema)
    per_interval_proofs = fields.List(fields.Nested(PieceWitnessSchema))
    valid = fields.Boolean()


class DestabilizingWeightSchema(Schema):
    weight = fields.Function(lambda d: format_weight(d.weight))
    verdict = fields.Nested(VerdictSchema)
    attempts = fields.Integer()


class LogPairSchema(Schema):
    t0 = fields.Float()
    t0_rational = RationalField()
    resolution = RationalField()
    constant = fields.Nested(VerdictSchema)
    sech = fields.Nested(VerdictSchema)
    bump = fields.Nested(VerdictSchema)


class OutputRecordSchema(Schema):
    schema_version = fields.String(missing=lambda: Config.SCHEMA_VERSION)
    command = fields.String(required=True)
    inputs = fields.Dict(keys=fields.String())
    results = fields.Raw()
    provenance = fields.Dict(keys=fields.String(), values=fields.String())
