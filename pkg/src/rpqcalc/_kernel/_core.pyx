# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Hot inner loops of the truncated p-adic arithmetic: power tables,
weighted moment sums and alternating sums modulo a prime power.  When
the modulus fits a machine word the loops run on C integers with
128-bit intermediates; otherwise the same loops run on Python objects.
"""

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

DEF WORD_LIMIT = 0x8000000000000000  # 2^63


cdef inline u64 _mulmod_u64(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * b) % m)


cdef inline u64 _powmod_u64(u64 base, unsigned long long e, u64 m) nogil:
    cdef u64 acc = 1 % m
    cdef u64 b = base % m
    while e:
        if e & 1:
            acc = _mulmod_u64(acc, b, m)
        b = _mulmod_u64(b, b, m)
        e >>= 1
    return acc


def power_table(base, count, mod):
    """[base^0, base^1, ..., base^(count-1)] modulo mod."""
    cdef Py_ssize_t n = count, i
    cdef list out = [0] * n
    cdef u64 cacc, cb, cm
    if 0 < mod < WORD_LIMIT:
        cm = mod
        cb = base % cm
        cacc = 1 % cm
        for i in range(n):
            out[i] = cacc
            cacc = _mulmod_u64(cacc, cb, cm)
        return out
    acc = 1 % mod
    for i in range(n):
        out[i] = acc
        acc = (acc * base) % mod
    return out


def elementwise_mulmod(a, b, mod):
    """[a[i]*b[i] mod mod] for equal-length integer lists."""
    cdef Py_ssize_t n = len(a), i
    if len(b) != n:
        raise ValueError("length mismatch")
    cdef list out = [0] * n
    cdef u64 cm
    if 0 < mod < WORD_LIMIT:
        cm = mod
        for i in range(n):
            out[i] = _mulmod_u64(a[i], b[i], cm)
        return out
    for i in range(n):
        out[i] = (a[i] * b[i]) % mod
    return out


def weighted_sum(weights, values, mod):
    """Sum of weights[i]*values[i] modulo mod."""
    cdef Py_ssize_t n = len(weights), i
    if len(values) != n:
        raise ValueError("length mismatch")
    cdef u64 cacc, cm
    if 0 < mod < WORD_LIMIT:
        cm = mod
        cacc = 0
        for i in range(n):
            cacc = (cacc + _mulmod_u64(weights[i], values[i], cm)) % cm
        return cacc
    acc = 0
    for i in range(n):
        acc += weights[i] * values[i]
    return acc % mod


def pow_weighted_sum(values, exponent, weights, mod):
    """Sum of weights[i]*values[i]^exponent modulo mod."""
    cdef Py_ssize_t n = len(values), i
    if len(weights) != n:
        raise ValueError("length mismatch")
    cdef u64 cacc, cm
    cdef unsigned long long ce
    if 0 < mod < WORD_LIMIT and exponent >= 0:
        cm = mod
        ce = exponent
        cacc = 0
        for i in range(n):
            cacc = (cacc + _mulmod_u64(weights[i],
                                       _powmod_u64(values[i], ce, cm),
                                       cm)) % cm
        return cacc
    acc = 0
    for i in range(n):
        acc += weights[i] * pow(values[i], exponent, mod)
    return acc % mod


def alt_sum(values, mod):
    """Alternating sum values[0] - values[1] + ... modulo mod."""
    cdef Py_ssize_t n = len(values), i
    cdef u64 cm
    cdef long long cacc
    if 0 < mod < WORD_LIMIT:
        cm = mod
        cacc = 0
        for i in range(n):
            if i & 1:
                cacc = (cacc - <long long>(values[i] % cm)) % <long long>cm
            else:
                cacc = (cacc + <long long>(values[i] % cm)) % <long long>cm
        return (cacc + <long long>cm) % <long long>cm
    acc = 0
    sign = 1
    for i in range(n):
        acc += sign * values[i]
        sign = -sign
    return acc % mod
