"""
Rational helpers - точные числа и их строковое представление
"""
import re
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

Rational = Fraction

NumberLike = Union[int, float, str, Fraction, Decimal]

# "p/q" с целыми p, q или десятичная дробь без экспоненты
_NUMBER_RE = re.compile(r"[+-]?(?:\d+/\d+|\d+(?:\.\d*)?|\.\d+)")


def to_rational(value: NumberLike) -> Fraction:
    """
    Точное преобразование в Fraction
    
    Args:
        value: int, Fraction, Decimal, строка "p/q" или конечная десятичная дробь "0.25"
            без экспоненты ("1e-5" отклоняется);
            float преобразуется через repr, т.е. 0.1 -> 1/10
    
    Returns:
        Fraction в несократимом виде
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"not a finite number: {value}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"not a finite number: {value}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _NUMBER_RE.fullmatch(text):
            raise ValueError(f"not an exact number: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def format_exact(value: Fraction) -> str:
    """Строка без потерь: "0", "1", "-3/4" """
    return str(value)


def format_rounded(value: Fraction, digits: int) -> str:
    """
    Округление для отображения: "0.133", "0.25", "0"
    
    Округление банковское; хвостовые нули убираются.
    """
    with localcontext() as ctx:
        ctx.prec = 50 + digits
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        rounded = exact.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    if rounded == 0:
        return "0"
    return format(rounded.normalize(), "f")


def format_number(value: Fraction, digits: Optional[int] = None) -> str:
    """Точная строка или округленная, если задано digits"""
    if digits is None:
        return format_exact(value)
    return format_rounded(value, digits)
