"""Exact integer and rational helpers shared by the whole package.

Everything here is arbitrary-precision: integers are plain Python ints and
rationals are fractions.Fraction. No floats anywhere; the only decimal output
is decimal_string, which does long division digit by digit.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "gcd",
    "rat_reduce",
    "geometric_sum_finite",
    "geometric_sum_infinite",
    "decimal_string",
]

Rational = Fraction


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) = 0."""
    return math.gcd(a, b)


def rat_reduce(num: int, den: int) -> Fraction:
    """num/den in lowest terms, denominator positive, sign on the numerator.

    Raises ZeroDivisionError when den == 0.
    """
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def geometric_sum_finite(x: Fraction | int, n: int) -> Fraction:
    """Sum of x**i for i in [0, n), exactly.

    The x == 1 branch returns n directly; the closed form (1-x^n)/(1-x)
    covers everything else.
    """
    if n < 0:
        raise ValueError("term count must be nonnegative")
    x = Fraction(x)
    if x == 1:
        return Fraction(n)
    return (1 - x**n) / (1 - x)


def geometric_sum_infinite(x: Fraction | int) -> Fraction:
    """Sum of x**i over all i >= 0; requires |x| < 1."""
    x = Fraction(x)
    if abs(x) >= 1:
        raise ValueError("divergent series")
    return 1 / (1 - x)


def decimal_string(x: Fraction | int, digits: int = 30) -> str:
    """Decimal rendering of x with `digits` significant digits.

    Long division on integers: deterministic, truncating, no floats.
    Stops early when the expansion terminates.
    """
    if digits < 1:
        raise ValueError("need at least one significant digit")
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    n, d = abs(x.numerator), x.denominator
    whole, rem = divmod(n, d)
    if whole > 0:
        out = str(whole)
        significant = len(out)
        if rem == 0 or significant >= digits:
            return sign + out
        frac_digits = []
        while rem != 0 and significant < digits:
            rem *= 10
            digit, rem = divmod(rem, d)
            frac_digits.append(str(digit))
            significant += 1
        return sign + out + "." + "".join(frac_digits)
    # No integer part: skip leading zeros, then take significant digits.
    frac_digits = []
    significant = 0
    while rem != 0 and significant < digits:
        rem *= 10
        digit, rem = divmod(rem, d)
        if digit == 0 and significant == 0:
            frac_digits.append("0")
            continue
        frac_digits.append(str(digit))
        significant += 1
    return sign + "0." + "".join(frac_digits)
