"""Weight mini-language of the command line.

    const:1                            Constant(1)
    poly:1,0,2                         1 + 2y² (coefficients in ascending degree, rationals allowed)
    cosh:a=1.5                         cosh(1.5 y)
    sech                               1 / cosh(y)
    expsum:(0.5,2);(0.5,-2)            Σ c e^{r y}
    bump:lo=1.5,hi=3,eps=0.05,sym=true mollified indicator, optional floor=1e-6
"""
import re
from fractions import Fraction
from typing import Dict

from weightedkstab.exceptions import WeightSyntaxError
from weightedkstab.poly import Polynomial
from weightedkstab.weights.spec import WeightSpec, Constant, PolynomialWeight, CoshFamily, Sech, ExpSum, MollifiedIndicator

TERM_RE = re.compile(r"^\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)$")
BOOLEANS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise WeightSyntaxError(f"Not a rational number: {text!r}")


def _float(text: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise WeightSyntaxError(f"Not a number: {text!r}")


def _options(body: str, required, optional=()) -> Dict[str, str]:
    options = {}
    for item in filter(None, (part.strip() for part in body.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip().lower()
        if not sep or key not in (*required, *optional):
            raise WeightSyntaxError(f"Unexpected option {item!r}")
        options[key] = value.strip()
    missing = [key for key in required if key not in options]
    if missing:
        raise WeightSyntaxError(f"Missing option(s): {', '.join(missing)}")
    return options


def _parse_expsum(body: str) -> ExpSum:
    terms = []
    for item in filter(None, (part.strip() for part in body.split(";"))):
        match = TERM_RE.match(item)
        if match is None:
            raise WeightSyntaxError(f"Expected a (coefficient,rate) pair, got {item!r}")
        terms.append((_float(match.group(1)), _float(match.group(2))))
    return ExpSum(tuple(terms))


def parse_weight(text: str) -> WeightSpec:
    """
    Parse a weight specification
    :param text:
    :return:
    """
    kind, _, body = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "const":
        return Constant(_rational(body))
    if kind == "poly":
        coefficients = [_rational(c) for c in body.split(",") if c.strip()]
        if not coefficients:
            raise WeightSyntaxError("poly: needs at least one coefficient")
        return PolynomialWeight(Polynomial(coefficients))
    if kind == "cosh":
        return CoshFamily(_float(_options(body, ("a",))["a"]))
    if kind == "sech":
        if body.strip():
            raise WeightSyntaxError("sech takes no parameters")
        return Sech()
    if kind == "expsum":
        return _parse_expsum(body)
    if kind == "bump":
        options = _options(body, ("lo", "hi", "eps"), ("sym", "floor"))
        symmetrize = options.get("sym", "false").lower()
        if symmetrize not in BOOLEANS:
            raise WeightSyntaxError(f"sym must be true or false, got {symmetrize!r}")
        floor = _float(options["floor"]) if "floor" in options else None
        return MollifiedIndicator(
            _float(options["lo"]), _float(options["hi"]), _float(options["eps"]), BOOLEANS[symmetrize], floor
        )
    raise WeightSyntaxError(f"Unknown weight kind {kind!r} in {text!r}")


def format_weight(g: WeightSpec) -> str:
    """Inverse of parse_weight"""
    if isinstance(g, Constant):
        return f"const:{g.value}"
    if isinstance(g, PolynomialWeight):
        return "poly:" + ",".join(str(c) for c in g.polynomial.coefficients or (0,))
    if isinstance(g, CoshFamily):
        return f"cosh:a={g.a!r}"
    if isinstance(g, Sech):
        return "sech"
    if isinstance(g, ExpSum):
        return "expsum:" + ";".join(f"({c!r},{r!r})" for c, r in g.terms)
    if isinstance(g, MollifiedIndicator):
        sym = "true" if g.symmetrize else "false"
        return f"bump:lo={g.lo!r},hi={g.hi!r},eps={g.epsilon!r},sym={sym},floor={g.floor!r}"
    raise WeightSyntaxError(f"No textual form for {type(g).__name__}")
