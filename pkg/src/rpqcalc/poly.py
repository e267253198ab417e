"""Exact univariate polynomials over any exact scalar domain.

Sparse coefficient map keyed by degree; zero coefficients are never
stored.  Used as the exact carrier for derivative/integral rules and
the power-basis expansions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularDeformationError


class Polynomial:
    """Immutable sparse polynomial sum(c_n z^n)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for n, c in (coeffs.items() if isinstance(coeffs, dict)
                         else enumerate(coeffs)):
                if not _is_zero(c):
                    clean[int(n)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, n: int, c=Fraction(1)) -> "Polynomial":
        return cls({n: c})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({0: c})

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def coefficient(self, n: int):
        return self.coeffs.get(n, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(_eq(self.coefficient(k), other.coefficient(k))
                   for k in keys)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial({n: c * other
                               for n, c in self.coeffs.items()})
        out = {}
        for n, a in self.coeffs.items():
            for m, b in other.coeffs.items():
                out[n + m] = out.get(n + m, 0) + a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self * other

    def scale_arg(self, c) -> "Polynomial":
        """f(c z)."""
        return Polynomial({n: coef * c ** n
                           for n, coef in self.coeffs.items()})

    def shift_arg(self, a) -> "Polynomial":
        """f(z + a) by binomial expansion."""
        out = Polynomial({})
        for n, coef in self.coeffs.items():
            binom = 1
            for k in range(n + 1):
                out = out + Polynomial({n - k: coef * binom * a ** k})
                binom = binom * (n - k) // (k + 1)
        return out

    def __call__(self, x):
        """Horner evaluation at a scalar."""
        if not self.coeffs:
            return Fraction(0) if not hasattr(x, "prime") else x * 0
        acc = None
        for n in sorted(self.coeffs, reverse=True):
            c = self.coeffs[n]
            if acc is None:
                acc, last = c, n
            else:
                acc = acc * x ** (last - n) + c
                last = n
        return acc * x ** last if last else acc

    def classical_derivative(self) -> "Polynomial":
        return Polynomial({n - 1: n * c
                           for n, c in self.coeffs.items() if n >= 1})

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        parts = [f"{c}*z^{n}" for n, c in sorted(self.coeffs.items())]
        return "Polynomial(" + " + ".join(parts) + ")"


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


def _eq(a, b) -> bool:
    if hasattr(a, "is_zero") or hasattr(b, "is_zero"):
        d = a - b
        return d.is_zero() if hasattr(d, "is_zero") else d == 0
    return a == b


def rpq_derivative_poly(f: Polynomial, params) -> Polynomial:
    """Spectral derivative: z^n -> [n] z^(n-1)."""
    from .deform import rpq_number
    return Polynomial({n - 1: c * rpq_number(params, n)
                       for n, c in f.coeffs.items() if n >= 1})


def rpq_antiderivative_poly(f: Polynomial, params) -> Polynomial:
    """z^n -> z^(n+1)/[n+1], integration constant 0."""
    from .deform import rpq_number
    out = {}
    for n, c in f.coeffs.items():
        d = rpq_number(params, n + 1)
        if _is_zero(d):
            raise SingularDeformationError(
                f"[{n + 1}] = 0: antiderivative undefined at degree {n}")
        out[n + 1] = c / d
    return Polynomial(out)
