from enum import IntEnum


class ExitCode(IntEnum):
    POLYSTABLE = 0
    INTERNAL_ERROR = 1
    USAGE_ERROR = 2
    STRICTLY_SEMISTABLE = 3
    UNSTABLE = 4
    FUTAKI_NONZERO = 5
    NO_SIGN_CHANGE = 6


status = {
    code: {code.value: {"description": code.name.replace("_", " ").capitalize()}}
    for code in ExitCode
}

status[ExitCode.POLYSTABLE][ExitCode.POLYSTABLE.value]["description"] = "Success (polystable)"
