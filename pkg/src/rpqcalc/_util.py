"""Small shared helpers."""

import sys
from fractions import Fraction


def exact_str(x) -> str:
    """Decimal string of an exact value, however large.

    Temporarily lifts the interpreter's int-to-str digit cap; measured
    residuals are reported as exact rationals, never rounded."""
    if isinstance(x, Fraction):
        need = max(x.numerator.bit_length(), x.denominator.bit_length())
    elif isinstance(x, int):
        need = x.bit_length()
    else:
        return str(x)
    digits = need // 3 + 16
    old = sys.get_int_max_str_digits()
    if digits <= old:
        return str(x)
    try:
        sys.set_int_max_str_digits(digits)
        return str(x)
    finally:
        sys.set_int_max_str_digits(old)
