from fractions import Fraction

from marshmallow import fields, ValidationError


class RationalField(fields.Field):
    """Exact rational number, dumped as a ``"p/q"`` string (``"p"`` for integers).

    Loading accepts the same strings and plain JSON integers, never floats.
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(Fraction(value))

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, bool) or isinstance(value, float):
            raise ValidationError("Rationals must be given as integers or 'p/q' strings")
        if isinstance(value, int):
            return Fraction(value)
        if not isinstance(value, str):
            raise ValidationError("Rationals must be given as integers or 'p/q' strings")
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Not a rational number: {value!r}")


class PointField(fields.List):
    """A point of the plane as a pair of rationals"""

    def __init__(self, **kwargs):
        super().__init__(RationalField(), **kwargs)

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return super()._serialize(list(value), attr, obj, **kwargs)

    def _deserialize(self, value, attr, data, **kwargs):
        point = super()._deserialize(value, attr, data, **kwargs)
        if len(point) != 2:
            raise ValidationError("A point has exactly two coordinates")
        return tuple(point)
