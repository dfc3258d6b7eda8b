from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Tuple, Union

from weightedkstab.exceptions import ZeroPolynomialError

RationalLike = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string to Fraction. Floats are rejected.
    :param value:
    :return:
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """
    Univariate polynomial with Fraction coefficients, ``coefficients[i]`` is the coefficient of y**i.
    Trailing zeros are trimmed, so the zero polynomial has no coefficients. Instances are immutable.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coefficients = [as_rational(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients: Tuple[Fraction, ...] = tuple(coefficients)

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def identity(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], leading: RationalLike = 1) -> "Polynomial":
        result = cls.constant(leading)
        for root in roots:
            result = result * cls([-as_rational(root), 1])
        return result

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coefficients[-1] if self._coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coefficients

    def eval(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation"""
        x = as_rational(x)
        result = Fraction(0)
        for coefficient in reversed(self._coefficients):
            result = result * x + coefficient
        return result

    __call__ = eval

    def eval_float(self, x: float) -> float:
        result = 0.0
        for coefficient in reversed(self._coefficients):
            result = result * x + float(coefficient)
        return result

    def float_coefficients(self) -> List[float]:
        return [float(c) for c in self._coefficients]

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self._coefficients), len(other._coefficients))
        a = self._coefficients + (Fraction(0),) * (size - len(self._coefficients))
        b = other._coefficients + (Fraction(0),) * (size - len(other._coefficients))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coefficients)

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = as_rational(factor)
        return Polynomial(c * factor for c in self._coefficients)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self._coefficients) if i > 0)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative vanishing at 0"""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self._coefficients)])

    def integrate(self, a: RationalLike, b: RationalLike) -> Fraction:
        primitive = self.antiderivative()
        return primitive.eval(b) - primitive.eval(a)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(y))"""
        result = Polynomial()
        for coefficient in reversed(self._coefficients):
            result = result * inner + coefficient
        return result

    def substitute_affine(self, scale: RationalLike, shift: RationalLike) -> "Polynomial":
        """self(scale * y + shift)"""
        return self.compose(Polynomial([shift, scale]))

    def reflect(self) -> "Polynomial":
        """self(-y)"""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self._coefficients))

    def reciprocal(self, degree: int) -> "Polynomial":
        """y**degree * self(1/y)"""
        padded = self._coefficients + (Fraction(0),) * (degree + 1 - len(self._coefficients))
        return Polynomial(reversed(padded))

    def taylor_shift(self, shift: RationalLike = 1) -> "Polynomial":
        return self.substitute_affine(1, shift)

    def is_even(self) -> bool:
        return all(c == 0 for i, c in enumerate(self._coefficients) if i % 2 == 1)

    def is_odd(self) -> bool:
        return all(c == 0 for i, c in enumerate(self._coefficients) if i % 2 == 0)

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if divisor.is_zero():
            raise ZeroPolynomialError("Division by the zero polynomial")
        remainder = list(self._coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - len(divisor._coefficients) + 1, 0)
        lead = divisor.leading_coefficient
        shift_max = len(remainder) - len(divisor._coefficients)
        for shift in range(shift_max, -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            quotient[shift] = factor
            if factor == 0:
                continue
            for i, c in enumerate(divisor._coefficients):
                remainder[shift + i] -= factor * c
        return Polynomial(quotient), Polynomial(remainder[: max(divisor.degree, 0)])

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (Euclid)"""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def sign_variations(self) -> int:
        """Number of sign changes in the coefficient sequence, zeros skipped"""
        variations = 0
        previous = 0
        for c in self._coefficients:
            if c == 0:
                continue
            sign = 1 if c > 0 else -1
            if previous and sign != previous:
                variations += 1
            previous = sign
        return variations

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coefficients)}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*y")
            else:
                terms.append(f"{c}*y^{i}")
        return " + ".join(terms)


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented

