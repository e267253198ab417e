"""Pure-Python kernel backend.

Same contract as the compiled backend ``_core``: all inputs are plain
integers already reduced modulo ``mod`` (a prime power), results are
returned reduced modulo ``mod``.
"""

BACKEND = "python"


def power_table(base, count, mod):
    """[base^0, base^1, ..., base^(count-1)] modulo mod."""
    out = [0] * count
    acc = 1 % mod
    for i in range(count):
        out[i] = acc
        acc = (acc * base) % mod
    return out


def elementwise_mulmod(a, b, mod):
    """[a[i]*b[i] mod mod] for equal-length integer lists."""
    return [(x * y) % mod for x, y in zip(a, b, strict=True)]


def weighted_sum(weights, values, mod):
    """Sum of weights[i]*values[i] modulo mod."""
    acc = 0
    for w, v in zip(weights, values, strict=True):
        acc += w * v
    return acc % mod


def pow_weighted_sum(values, exponent, weights, mod):
    """Sum of weights[i]*values[i]^exponent modulo mod."""
    acc = 0
    for w, v in zip(weights, values, strict=True):
        acc += w * pow(v, exponent, mod)
    return acc % mod


def alt_sum(values, mod):
    """Alternating sum values[0] - values[1] + values[2] - ... modulo mod."""
    acc = 0
    sign = 1
    for v in values:
        acc += sign * v
        sign = -sign
    return acc % mod
