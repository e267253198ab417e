"""Exact rational and truncated p-adic arithmetic.

Rationals are plain ``fractions.Fraction`` (numerator/denominator kept
coprime with positive denominator by the stdlib, which is exactly the
invariant needed here).  p-adic numbers use a fixed-precision digit
model: a nonzero value is ``unit * p^val`` with ``unit`` a p-adic unit
known modulo ``p^prec``, i.e. the value is known modulo
``p^(val+prec)``.  All values are immutable; arithmetic returns fresh
objects carrying the precision actually guaranteed by the operands.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (ConvergenceDomainError, InvalidParameterError,
                     PrecisionError)

DEFAULT_PRECISION = 32

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond any prime used here)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidParameterError(f"p = {p!r} is not prime")


def int_valuation(n: int, p: int) -> int:
    """Largest e with p^e | n, for n != 0."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(x, p: int):
    """v_p(x) for a rational x: the n in x = p^n * a/b with p dividing
    neither a nor b.  Returns ``math.inf`` for x = 0."""
    _check_prime(p)
    x = Fraction(x)
    if x == 0:
        return math.inf
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def padic_norm(x) -> Fraction:
    """|x|_p = p^(-v_p(x)); 0 for the zero element."""
    if isinstance(x, PadicNumber):
        if x.is_zero():
            return Fraction(0)
        return Fraction(1, x.prime) ** x._val if x._val >= 0 \
            else Fraction(x.prime) ** (-x._val)
    raise InvalidParameterError("padic_norm expects a PadicNumber")


def _exp_domain_bound(p: int) -> Fraction:
    # convergence of exp needs v(x) > 1/(p-1)
    return Fraction(1, p - 1)


class PadicNumber:
    """A truncated p-adic number.

    Nonzero: ``unit * p^val`` with ``1 <= unit < p^prec``, ``p`` not
    dividing ``unit``; the value is guaranteed modulo ``p^(val+prec)``.
    The zero element has ``unit == 0`` and ``val`` holding its absolute
    precision (it is known to vanish modulo ``p^val``).
    """

    __slots__ = ("prime", "_val", "unit", "prec")
    __hash__ = None  # equality is precision-aware, so not hashable

    def __init__(self, prime: int, val: int, unit: int, prec: int):
        _check_prime(prime)
        if unit == 0:
            self.prime, self._val, self.unit, self.prec = prime, val, 0, 0
            return
        if prec < 1:
            raise PrecisionError("nonzero value needs at least one digit")
        unit %= prime ** prec
        if unit == 0:  # cancelled at this precision: zero mod p^(val+prec)
            self.prime, self._val, self.unit, self.prec = \
                prime, val + prec, 0, 0
            return
        shift = int_valuation(unit, prime)
        if shift:  # keep the leading digit nonzero
            val += shift
            prec -= shift
            unit //= prime ** shift
        self.prime, self._val, self.unit, self.prec = prime, val, unit, prec

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, prime: int, abs_precision: int = DEFAULT_PRECISION):
        return cls(prime, abs_precision, 0, 0)

    @classmethod
    def one(cls, prime: int, prec: int = DEFAULT_PRECISION):
        return cls(prime, 0, 1, prec)

    @classmethod
    def from_rational(cls, x, prime: int, prec: int = DEFAULT_PRECISION):
        """Embed a rational with p not dividing the reduced denominator's
        prime-to-p part (any rational is fine: p-powers go to the
        valuation)."""
        x = Fraction(x)
        if x == 0:
            return cls.zero(prime, prec)
        vn = int_valuation(x.numerator, prime)
        vd = int_valuation(x.denominator, prime)
        num = x.numerator // prime ** vn
        den = x.denominator // prime ** vd
        m = prime ** prec
        unit = num * pow(den, -1, m) % m
        return cls(prime, vn - vd, unit, prec)

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return self.unit == 0

    def is_unit(self) -> bool:
        return self.unit != 0 and self._val == 0

    @property
    def valuation(self):
        """Valuation; ``math.inf`` for the zero element."""
        return math.inf if self.unit == 0 else self._val

    @property
    def absolute_precision(self) -> int:
        return self._val if self.unit == 0 else self._val + self.prec

    @property
    def precision(self) -> int:
        return self.prec

    @property
    def digits(self) -> list[int]:
        """Base-p digits of the unit part, least significant first."""
        out, u = [], self.unit
        for _ in range(self.prec):
            out.append(u % self.prime)
            u //= self.prime
        return out

    def norm(self) -> Fraction:
        return padic_norm(self)

    def residue(self, k: int) -> int:
        """The integer in [0, p^k) congruent to self mod p^k.

        Requires v >= 0 and k within the guaranteed precision."""
        if k > self.absolute_precision:
            raise PrecisionError(
                f"residue mod p^{k} exceeds precision O(p^{self.absolute_precision})")
        if self.unit == 0:
            return 0
        if self._val < 0:
            raise PrecisionError("negative valuation: not a p-adic integer")
        return self.unit * self.prime ** self._val % self.prime ** k

    def to_rational_approx(self) -> Fraction:
        """The exact rational the stored digits denote."""
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.prime) ** self._val

    def with_precision(self, prec: int) -> "PadicNumber":
        """Truncate to at most ``prec`` significant digits."""
        if self.unit == 0:
            return self
        if prec >= self.prec:
            return self
        return PadicNumber(self.prime, self._val, self.unit, prec)

    # -- coercion ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise InvalidParameterError(
                    f"mixed primes {self.prime} and {other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicNumber.from_rational(
                other, self.prime, max(self.prec, DEFAULT_PRECISION))
        return None

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.prime
        if self.unit == 0 and o.unit == 0:
            return PadicNumber.zero(p, min(self._val, o._val))
        if self.unit == 0:
            return o._truncate_abs(min(self._val, o.absolute_precision))
        if o.unit == 0:
            return self._truncate_abs(min(o._val, self.absolute_precision))
        abs_prec = min(self.absolute_precision, o.absolute_precision)
        v = min(self._val, o._val)
        if v >= abs_prec:
            return PadicNumber.zero(p, abs_prec)
        m = p ** (abs_prec - v)
        s = (self.unit * p ** (self._val - v)
             + o.unit * p ** (o._val - v)) % m
        if s == 0:
            return PadicNumber.zero(p, abs_prec)
        return PadicNumber(p, v, s, abs_prec - v)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.prime, self._val,
                           self.prime ** self.prec - self.unit, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.prime
        if self.unit == 0 or o.unit == 0:
            # O(p^a) * (u p^v + ...) = O(p^(a+v)); O(p^a) * O(p^b) = O(p^(a+b))
            return PadicNumber.zero(p, self._val + o._val)
        prec = min(self.prec, o.prec)
        unit = self.unit * o.unit % p ** prec
        return PadicNumber(p, self._val + o._val, unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.unit == 0:
            raise ZeroDivisionError("inverse of p-adic zero")
        m = self.prime ** self.prec
        return PadicNumber(self.prime, -self._val,
                           pow(self.unit, -1, m), self.prec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return PadicNumber.one(self.prime,
                                   self.prec or DEFAULT_PRECISION)
        if n < 0:
            return self.inverse() ** (-n)
        if self.unit == 0:
            return PadicNumber.zero(self.prime, self._val * n)
        m = self.prime ** self.prec
        return PadicNumber(self.prime, self._val * n,
                           pow(self.unit, n, m), self.prec)

    def _truncate_abs(self, abs_prec: int) -> "PadicNumber":
        if self.unit == 0:
            return PadicNumber.zero(self.prime, min(self._val, abs_prec))
        if abs_prec <= self._val:
            return PadicNumber.zero(self.prime, abs_prec)
        return PadicNumber(self.prime, self._val, self.unit,
                           min(self.prec, abs_prec - self._val))

    # -- comparison --------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, PadicNumber) \
            else (other if other.prime == self.prime else None)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def agreement_valuation(self, other):
        """Valuation of the difference (``math.inf`` if equal to the
        common precision)."""
        d = self - self._coerce(other)
        return d.valuation

    # -- special functions -------------------------------------------

    def exp(self) -> "PadicNumber":
        """exp(x) = sum x^n/n!, truncated at the stored precision.

        Per-term valuation is n*v(x) - v(n!); the series converges iff
        v(x) > 1/(p-1).
        """
        p = self.prime
        if self.unit == 0:
            return PadicNumber.one(p, self._val)
        bound = _exp_domain_bound(p)
        if Fraction(self._val) <= bound:
            raise ConvergenceDomainError(
                f"exp requires |x|_p < p^(-1/(p-1)), i.e. v(x) > {bound}; "
                f"got v(x) = {self._val}")
        A = self.absolute_precision
        m = p ** A
        u, v = self.unit % m, self._val
        acc = 1 % m
        upow = 1
        fact_unit = 1      # n! = p^fact_val * fact_unit
        fact_val = 0
        n = 0
        while True:
            n += 1
            if n * (v * (p - 1) - 1) >= A * (p - 1):
                break
            upow = upow * u % m
            k = n
            while k % p == 0:
                fact_val += 1
                k //= p
            fact_unit = fact_unit * k % m
            exponent = n * v - fact_val
            if exponent < A:
                acc = (acc + upow * pow(fact_unit, -1, m)
                       * p ** exponent) % m
        return PadicNumber(p, 0, acc, A)

    def log(self) -> "PadicNumber":
        """log(u) = sum (-1)^(n-1) (u-1)^n / n for |u - 1|_p < 1."""
        p = self.prime
        x = self - 1
        if x.is_zero():
            return PadicNumber.zero(p, x._val)
        if x._val < 1:
            raise ConvergenceDomainError(
                f"log requires |u - 1|_p < 1; got v(u-1) = {x._val}")
        A = min(self.absolute_precision, x.absolute_precision)
        m = p ** A
        a, w = x.unit % m, x._val
        acc = 0
        apow = 1
        # first n with n*w - floor(log_p n) >= A; the gap is nondecreasing
        # in n (each step adds w >= 1 and the log term grows by at most 1)
        n_max = 2
        while n_max * w - (len(_base_digits(n_max, p)) - 1) < A:
            n_max += 1
        for n in range(1, n_max + 1):
            apow = apow * a % m
            f = 0
            k = n
            while k % p == 0:
                f += 1
                k //= p
            exponent = n * w - f
            if exponent < A:
                term = apow * pow(k, -1, m) % m * p ** exponent % m
                acc = (acc - term if n % 2 == 0 else acc + term) % m
        if acc == 0:
            return PadicNumber.zero(p, A)
        t = int_valuation(acc, p)
        return PadicNumber(p, t, acc // p ** t, A - t)

    def sqrt(self) -> "PadicNumber":
        """Square root by Hensel lifting (odd p, square unit, even
        valuation)."""
        p = self.prime
        if p == 2:
            raise InvalidParameterError("sqrt implemented for odd p only")
        if self.unit == 0:
            return PadicNumber.zero(p, self._val // 2)
        if self._val % 2:
            raise ConvergenceDomainError(
                "odd valuation: square root not in Q_p")
        u0 = self.unit % p
        r = _sqrt_mod_p(u0, p)
        if r is None:
            raise ConvergenceDomainError(
                "unit part is not a quadratic residue mod p")
        prec = self.prec
        known = 1
        m = p ** prec
        inv2 = pow(2, -1, m)
        while known < prec:
            known = min(2 * known, prec)
            mk = p ** known
            r = (r + self.unit % mk * pow(r, -1, mk)) * inv2 % mk
        return PadicNumber(p, self._val // 2, r, prec)

    # -- external forms ----------------------------------------------

    def __repr__(self):
        return f"PadicNumber({self})"

    def __str__(self):
        if self.unit == 0:
            return f"0 [zero mod {self.prime}^{self._val}]"
        terms = []
        for i, d in enumerate(self.digits):
            if i == 0:
                terms.append(str(d))
            elif i == 1:
                terms.append(f"{d}*{self.prime}")
            else:
                terms.append(f"{d}*{self.prime}^{i}")
        return (f"{self.prime}^{self._val} * ({' + '.join(terms)}) "
                f"[{self.prec} digits]")

    def to_json(self) -> dict:
        if self.unit == 0:
            return {"prime": self.prime, "precision": 0,
                    "valuation": None, "digits": [],
                    "zero_mod": self._val}
        return {"prime": self.prime, "precision": self.prec,
                "valuation": self._val, "digits": self.digits}

    @classmethod
    def from_json(cls, obj: dict) -> "PadicNumber":
        if obj.get("valuation") is None:
            return cls.zero(obj["prime"], obj.get("zero_mod",
                                                  DEFAULT_PRECISION))
        p = obj["prime"]
        unit = 0
        for i, d in enumerate(obj["digits"]):
            unit += d * p ** i
        return cls(p, obj["valuation"], unit, obj["precision"])


def _base_digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out or [0]


def _sqrt_mod_p(a: int, p: int):
    """Tonelli-Shanks; None when a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        t = t * b * b % p
        c = b * b % p
        m = i
    return x


def padic_exp(x: PadicNumber) -> PadicNumber:
    return x.exp()


def padic_log(u: PadicNumber) -> PadicNumber:
    return u.log()


def padic_power(q: PadicNumber, x) -> PadicNumber:
    """q^x = exp(x log q); requires |q - 1|_p < p^(-1/(p-1))."""
    p = q.prime
    d = q - 1
    bound = _exp_domain_bound(p)
    if not d.is_zero() and Fraction(d._val) <= bound:
        raise ConvergenceDomainError(
            f"q^x requires |q-1|_p < p^(-1/(p-1)), i.e. v(q-1) > {bound}; "
            f"got v(q-1) = {d._val}")
    if not isinstance(x, PadicNumber):
        x = PadicNumber.from_rational(x, p, max(q.prec, 1))
    return (x * q.log()).exp()
