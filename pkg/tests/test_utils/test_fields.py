from fractions import Fraction

import pytest
from marshmallow import Schema, ValidationError

from weightedkstab.config import Config
from weightedkstab.exceptions import InputError, KStabException, WeightSyntaxError
from weightedkstab.utils import ExitCode, PointField, RationalField, status


class PointSchema(Schema):
    value = RationalField(allow_none=True)
    point = PointField()


class TestRationalField:
    @pytest.mark.parametrize("raw, expected", [("3/4", Fraction(3, 4)), (" -2 ", Fraction(-2)), (5, Fraction(5))])
    def test_load(self, raw, expected):
        assert PointSchema().load({"value": raw})["value"] == expected

    @pytest.mark.parametrize("raw", [0.5, True, "x", "1/0", [1]])
    def test_invalid(self, raw):
        with pytest.raises(ValidationError):
            PointSchema().load({"value": raw})

    def test_dump(self):
        assert PointSchema().dump({"value": Fraction(-64, 3)}) == {"value": "-64/3"}
        assert PointSchema().dump({"value": 4}) == {"value": "4"}
        assert PointSchema().dump({"value": None}) == {"value": None}


class TestPointField:
    def test_round_trip(self):
        data = PointSchema().load({"point": ["1/2", 3]})
        assert data["point"] == (Fraction(1, 2), Fraction(3))
        assert PointSchema().dump(data) == {"point": ["1/2", "3"]}

    def test_wrong_length(self):
        with pytest.raises(ValidationError):
            PointSchema().load({"point": [1, 2, 3]})


class TestExitStatus:
    def test_codes(self):
        assert [int(code) for code in ExitCode] == [0, 1, 2, 3, 4, 5, 6]

    def test_descriptions(self):
        assert status[ExitCode.POLYSTABLE][0]["description"] == "Success (polystable)"
        assert status[ExitCode.FUTAKI_NONZERO][5]["description"] == "Futaki nonzero"

    def test_exception_codes(self):
        error = WeightSyntaxError("bad weight")
        assert error.exit_code is ExitCode.USAGE_ERROR
        assert error.to_dict() == {"title": "Invalid weight specification", "detail": "bad weight", "exit_code": 2}
        assert KStabException("boom").exit_code is ExitCode.INTERNAL_ERROR
        assert KStabException("boom", title="Custom", exit_code=ExitCode.UNSTABLE).to_dict()["exit_code"] == 4


class TestConfig:
    def test_update_and_reset(self):
        Config.update({"DEFAULT_TOLERANCE": 1e-6, "KNOWN_LAMBDAS": ["1/2"], "ROOT_RESOLUTION": "1/1024"})
        assert Config.DEFAULT_TOLERANCE == 1e-6
        assert Config.KNOWN_LAMBDAS == [Fraction(1, 2)]
        assert Config.ROOT_RESOLUTION == Fraction(1, 1024)
        Config.reset()
        assert Config.DEFAULT_TOLERANCE == 1e-9
        assert Config.KNOWN_LAMBDAS == (Fraction(0), Fraction(2), Fraction(2, 3))

    @pytest.mark.parametrize(
        "overrides",
        [{"UNKNOWN": 1}, {"DEFAULT_TOLERANCE": 0}, {"GAUSS_LEGENDRE_ORDER": 1}, {"LAMBDA_RANGE": [0.5, 1]}],
    )
    def test_invalid(self, overrides):
        with pytest.raises(InputError):
            Config.update(overrides)

    def test_as_dict(self):
        settings = Config.as_dict()
        assert settings["CLOSED_FORM_DPS"] == 50
        assert settings["SCHEMA_VERSION"] == "1.0"
