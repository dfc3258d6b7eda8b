from .exit_status import ExitCode, status
from .marshmallow_fields import RationalField, PointField


__all__ = [
    "ExitCode",
    "status",
    "RationalField",
    "PointField",
]
