"""Deformed power basis, gamma and beta functions, Taylor expansions.

The gamma function takes the exact finite-product (factorial) path at
positive integers.  At rational arguments it is evaluated through the
normalized product ratio in the reduced base xh = xi2/xi1,

    Gamma(z) = c^(z-1) xi1^((z-1)(z-2)/2) (1-xh)^(1-z)
               prod_{i>=0} (1 - xh^(i+1)) / (1 - xh^(z+i)),

with c = [1] the twist scale; this is the unique continuation of the
product-ratio definition consistent with Gamma(n+1) = [n]! and
Gamma(z+1) = [z] Gamma(z) for every preset.  All scalar powers are
taken exactly: rational arguments must admit exact rational roots of
the bases involved, otherwise an error explains the constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .deform import (DeformParams, IdentityResult, SuiteReport,
                     rpq_factorial, rpq_number)
from .errors import (ConvergenceDomainError, InvalidParameterError,
                     PoleError)
from ._util import exact_str
from .poly import Polynomial, rpq_derivative_poly

DEFAULT_TRUNCATION = 256
DEFAULT_REL_TOL = Fraction(1, 10 ** 30)


# -- exact rational powers ----------------------------------------------

def _int_nth_root(n: int, b: int) -> Optional[int]:
    """Exact integer b-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n in (0, 1) or b == 1:
        return n
    lo, hi = 0, 1
    while hi ** b < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** b < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** b == n else None


def rational_pow_exact(x: Fraction, e: Fraction) -> Fraction:
    """x^e as an exact rational, for x > 0 (x = 0 with e > 0 gives 0).

    Raises when the required root is irrational: exact arithmetic can
    only evaluate gamma/beta at arguments whose twist-base powers are
    rational."""
    x, e = Fraction(x), Fraction(e)
    if x == 0:
        if e > 0:
            return Fraction(0)
        raise InvalidParameterError("0 to a nonpositive power")
    if x < 0:
        raise InvalidParameterError("negative base in rational power")
    if e.denominator == 1:
        return x ** e.numerator
    num = _int_nth_root(x.numerator, e.denominator)
    den = _int_nth_root(x.denominator, e.denominator)
    if num is None or den is None:
        raise InvalidParameterError(
            f"{x}^{e} is irrational; pick parameters whose "
            f"{e.denominator}-th roots are exact")
    return Fraction(num, den) ** e.numerator


def rpq_number_at(params: DeformParams, z: Fraction) -> Fraction:
    """The deformed number at a rational argument,
    [z] = c (xi1^z - xi2^z)/(xi1 - xi2); agrees with the integer
    deformed numbers for every preset."""
    z = Fraction(z)
    if z.denominator == 1 and z >= 0:
        return rpq_number(params, z.numerator)
    c = params.twist_scale()
    x1, x2 = params.xi1, params.xi2
    return c * (rational_pow_exact(x1, z) - rational_pow_exact(x2, z)) \
        / (x1 - x2)


# -- power basis ----------------------------------------------------------

def power_basis(x, y, n: int, mode: str, params: DeformParams):
    """(x (-) y)^n = prod_{i=0}^{n-1} (x xi1^i -+ y xi2^i); the plus
    mode flips the sign.  Negative n takes the reciprocal product over
    the indices -|n|..-1."""
    if mode not in ("minus", "plus"):
        raise InvalidParameterError("mode must be 'minus' or 'plus'")
    sign = -1 if mode == "minus" else 1
    x1, x2 = params.xi1, params.xi2
    if n >= 0:
        acc = Fraction(1)
        for i in range(n):
            acc = acc * (x * x1 ** i + sign * y * x2 ** i)
        return acc
    acc = Fraction(1)
    for i in range(-n):
        factor = x * x1 ** (i + n) + sign * y * x2 ** (i + n)
        if factor == 0:
            raise ZeroDivisionError(
                f"zero factor at index {i + n} in reciprocal power basis")
        acc = acc * factor
    return 1 / acc


def power_basis_poly(a, n: int, mode: str,
                     params: DeformParams) -> Polynomial:
    """The same product expanded as a polynomial in the first slot."""
    sign = -1 if mode == "minus" else 1
    x1, x2 = params.xi1, params.xi2
    acc = Polynomial.constant(Fraction(1))
    for i in range(n):
        acc = acc * Polynomial({1: x1 ** i, 0: sign * a * x2 ** i})
    return acc


def power_basis_poly_reversed(a, n: int,
                              params: DeformParams) -> Polynomial:
    """(a (-) x)^n = prod (a xi1^i - x xi2^i), expanded in x."""
    x1, x2 = params.xi1, params.xi2
    acc = Polynomial.constant(Fraction(1))
    for i in range(n):
        acc = acc * Polynomial({0: a * x1 ** i, 1: -(x2 ** i)})
    return acc


@dataclass(frozen=True)
class InfiniteProduct:
    """Truncated infinite power-basis product with its tail ratio."""

    partial: Fraction
    truncation: int
    tail_ratio: Fraction  # |last factor - 1| style geometric ratio


def power_basis_infinite(x, y, mode: str, params: DeformParams,
                         truncation: int = DEFAULT_TRUNCATION
                         ) -> InfiniteProduct:
    """prod_{i=0}^{M-1} (x xi1^i -+ y xi2^i) with the geometric ratio of
    the first omitted correction as the tail certificate.  Converges
    (to a nonzero limit) when xi1 = 1 and |y xi2^i| -> 0."""
    sign = -1 if mode == "minus" else 1
    x1, x2 = params.xi1, params.xi2
    acc = Fraction(1)
    for i in range(truncation):
        acc = acc * (x * x1 ** i + sign * y * x2 ** i)
    ratio = abs(Fraction(y) * Fraction(x2) ** truncation)
    return InfiniteProduct(acc, truncation, ratio)


# -- gamma ----------------------------------------------------------------

@dataclass(frozen=True)
class GammaValue:
    value: Fraction
    terms: int
    tail_bound: Fraction  # relative; 0 on the exact integer path
    exact: bool

    def __mul__(self, other: "GammaValue") -> "GammaValue":
        b = (1 + self.tail_bound) * (1 + other.tail_bound) - 1
        return GammaValue(self.value * other.value,
                          max(self.terms, other.terms), b,
                          self.exact and other.exact)

    def __truediv__(self, other: "GammaValue") -> "GammaValue":
        if other.tail_bound >= 1:
            raise ConvergenceDomainError("divisor bound too loose")
        b = (1 + self.tail_bound) / (1 - other.tail_bound) - 1
        return GammaValue(self.value / other.value,
                          max(self.terms, other.terms), b,
                          self.exact and other.exact)


def gamma_rpq(z, params: DeformParams,
              truncation: int = DEFAULT_TRUNCATION,
              rel_tol: Fraction = DEFAULT_REL_TOL) -> GammaValue:
    """Deformed gamma.  Positive integers take the exact factorial
    path Gamma(n+1) = [n]!; rational arguments use the truncated
    normalized product with a reported geometric tail bound."""
    z = Fraction(z)
    if z.denominator == 1:
        n = z.numerator - 1
        if n < 0:
            raise PoleError(f"gamma has a pole at z = {z}")
        return GammaValue(rpq_factorial(params, n), n, Fraction(0), True)
    if not params.is_twist_consistent():
        raise ConvergenceDomainError(
            "kernel is not consistent with its twist bases; the "
            "product-ratio gamma is undefined for it")
    x1, x2 = params.xi1, params.xi2
    xh = x2 / x1
    if not 0 < abs(xh) < 1:
        raise ConvergenceDomainError(
            f"product ratio needs |xi2/xi1| < 1; got {xh}")
    c = params.twist_scale()
    pre = (rational_pow_exact(c, z - 1)
           * rational_pow_exact(x1, (z - 1) * (z - 2) / 2)
           * rational_pow_exact(1 - xh, 1 - z))
    xh_z = rational_pow_exact(xh, z)
    # tail of the normalized product: factors 1 + O(xh^i); relative
    # bound 2 xh^M/(1-xh)^2 once that is below 1/2
    terms = min(32, truncation)
    while True:
        bound = 2 * abs(xh) ** terms / (1 - abs(xh)) ** 2
        if bound <= rel_tol or terms >= truncation:
            break
        terms = min(2 * terms, truncation)
    prod = Fraction(1)
    top, bot = Fraction(1), xh_z
    for _ in range(terms):
        top = top * xh          # xh^(i+1)
        prod = prod * (1 - top) / (1 - bot)
        bot = bot * xh          # xh^(z+i)
    return GammaValue(pre * prod, terms, bound, False)


@dataclass(frozen=True)
class BetaValue:
    value: Fraction
    tail_bound: Fraction
    exact: bool


def beta_rpq(x, y, params: DeformParams,
             truncation: int = DEFAULT_TRUNCATION) -> BetaValue:
    """beta(x, y) = Gamma(x) Gamma(y) / Gamma(x+y)."""
    gx = gamma_rpq(x, params, truncation)
    gy = gamma_rpq(y, params, truncation)
    gxy = gamma_rpq(Fraction(x) + Fraction(y), params, truncation)
    out = gx * gy / gxy
    return BetaValue(out.value, out.tail_bound, out.exact)


# -- identity suites --------------------------------------------------------

def power_basis_identity_suite(params: DeformParams, n: int, k: int,
                               x=Fraction(2, 3),
                               y=Fraction(1, 5)) -> SuiteReport:
    """Exact checks of the splitting, quotient, doubling and k-fold
    regrouping identities of the power products."""
    if n < 0 or k < 1:
        raise InvalidParameterError("need n >= 0 and k >= 1")
    x1, x2 = params.xi1, params.xi2
    p2 = params.powered(2)
    pk = params.powered(k)
    results = []
    # (viii) (x (-) y)^(n+k) = (x (-) y)^n (x xi1^n (-) y xi2^n)^k
    results.append(IdentityResult(
        "splitting (viii)",
        power_basis(x, y, n + k, "minus", params),
        power_basis(x, y, n, "minus", params)
        * power_basis(x * x1 ** n, y * x2 ** n, k, "minus", params)))
    # (ix) (x xi1^k (-) y xi2^k)^(n-k) = (x (-) y)^n / (x (-) y)^k
    if n >= k:
        results.append(IdentityResult(
            "quotient (ix)",
            power_basis(x * x1 ** k, y * x2 ** k, n - k, "minus", params),
            power_basis(x, y, n, "minus", params)
            / power_basis(x, y, k, "minus", params)))
    # (xi) (x (-) y)^(2n) = (x (-) y)^n_{R(p^2,q^2)} (x xi1 (-) y xi2)^n_{R(p^2,q^2)}
    results.append(IdentityResult(
        "doubling (xi)",
        power_basis(x, y, 2 * n, "minus", params),
        power_basis(x, y, n, "minus", p2)
        * power_basis(x * x1, y * x2, n, "minus", p2)))
    # (xiv) (x (+) y)^(kn) = prod_i (x xi1^i (+) y xi2^i)^n_{R(p^k,q^k)}
    rhs = Fraction(1)
    for i in range(k):
        rhs = rhs * power_basis(x * x1 ** i, y * x2 ** i, n, "plus", pk)
    results.append(IdentityResult(
        "k-fold (xiv)",
        power_basis(x, y, k * n, "plus", params), rhs))
    # n = 0 degeneracies
    results.append(IdentityResult(
        "empty product", power_basis(x, y, 0, "minus", params),
        Fraction(1)))
    return SuiteReport("power_basis_identities", tuple(results))


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _iterate_derivative(f: Polynomial, params: DeformParams,
                        k: int) -> Polynomial:
    for _ in range(k):
        f = rpq_derivative_poly(f, params)
    return f


def power_basis_derivative_suite(params: DeformParams, n: int, k: int,
                                 a=Fraction(3, 7)) -> SuiteReport:
    """Exact polynomial checks of the derivative rules of the power
    basis, including the k-fold forms with their xi^C(k,2) prefactors
    and the reciprocal rules (verified at sample points)."""
    if not n >= k >= 1:
        raise InvalidParameterError("need n >= k >= 1")
    x1, x2 = params.xi1, params.xi2
    results = []
    base = power_basis_poly(a, n, "minus", params)
    # D (x (-) a)^n = [n] (xi1 x (-) a)^(n-1)
    lhs = rpq_derivative_poly(base, params)
    rhs = rpq_number(params, n) * power_basis_poly(
        a, n - 1, "minus", params).scale_arg(x1)
    results.append(IdentityResult("forward n=1 rule", lhs, rhs))
    # D^k (x (-) a)^n = xi1^C(k,2) [n]!/[n-k]! (xi1^k x (-) a)^(n-k)
    lhs_k = _iterate_derivative(base, params, k)
    coeff = x1 ** _binom2(k) * rpq_factorial(params, n) \
        / rpq_factorial(params, n - k)
    rhs_k = coeff * power_basis_poly(
        a, n - k, "minus", params).scale_arg(x1 ** k)
    results.append(IdentityResult(f"forward k={k} rule", lhs_k, rhs_k))
    # D (a (-) x)^n = -[n] (a (-) xi2 x)^(n-1)
    rev = power_basis_poly_reversed(a, n, params)
    lhs_r = rpq_derivative_poly(rev, params)
    rhs_r = -rpq_number(params, n) * power_basis_poly_reversed(
        a, n - 1, params).scale_arg(x2)
    results.append(IdentityResult("reverse n=1 rule", lhs_r, rhs_r))
    # D^k (a (-) x)^n = (-1)^k xi2^C(k,2) [n]!/[n-k]! (a (-) xi2^k x)^(n-k)
    lhs_rk = _iterate_derivative(rev, params, k)
    coeff_r = Fraction(-1) ** k * x2 ** _binom2(k) \
        * rpq_factorial(params, n) / rpq_factorial(params, n - k)
    rhs_rk = coeff_r * power_basis_poly_reversed(
        a, n - k, params).scale_arg(x2 ** k)
    results.append(IdentityResult(f"reverse k={k} rule", lhs_rk, rhs_rk))
    # reciprocal rules, checked at sample points through the
    # finite-difference form of the derivative
    c = params.twist_scale()
    for x0 in (Fraction(5, 6), Fraction(9, 4), Fraction(13, 3)):
        g = lambda t: 1 / power_basis(t, a, n, "minus", params)
        dg = c * (g(x1 * x0) - g(x2 * x0)) / ((x1 - x2) * x0)
        rhs_rec = -x2 * rpq_number(params, n) \
            / power_basis(x2 * x0, a, n + 1, "minus", params)
        results.append(IdentityResult(
            f"reciprocal forward at x={x0}", dg, rhs_rec))
        h = lambda t: 1 / power_basis(a, t, n, "minus", params)
        dh = c * (h(x1 * x0) - h(x2 * x0)) / ((x1 - x2) * x0)
        rhs_rec2 = x1 * rpq_number(params, n) \
            / power_basis(a, x1 * x0, n + 1, "minus", params)
        results.append(IdentityResult(
            f"reciprocal reverse at x={x0}", dh, rhs_rec2))
    return SuiteReport("power_basis_derivatives", tuple(results))


# -- Taylor expansions ------------------------------------------------------

def taylor_expand(f: Polynomial, a, params: DeformParams,
                  form: str = "forward") -> list:
    """Coefficients of the deformed Taylor expansion of a polynomial.

    forward: f = sum_k c_k (x (-) a)^k with
             c_k = xi1^(-C(k,2)) (D^k f)(a xi1^(-k)) / [k]!
    reverse: f = sum_k c_k (a (-) x)^k with
             c_k = (-1)^k xi2^(-C(k,2)) (D^k f)(a xi2^(-k)) / [k]!
    """
    if form not in ("forward", "reverse"):
        raise InvalidParameterError("form must be forward or reverse")
    x1, x2 = params.xi1, params.xi2
    deg = max(f.degree, 0)
    coeffs = []
    g = f
    for k in range(deg + 1):
        fact = rpq_factorial(params, k)
        if form == "forward":
            c = x1 ** (-_binom2(k)) * g(a * x1 ** (-k)) / fact
        else:
            c = Fraction(-1) ** k * x2 ** (-_binom2(k)) \
                * g(a * x2 ** (-k)) / fact
        coeffs.append(c)
        g = rpq_derivative_poly(g, params)
    return coeffs


def taylor_reconstruct(coeffs, a, params: DeformParams,
                       form: str = "forward") -> Polynomial:
    """Assemble sum c_k basis_k back into an expanded polynomial."""
    out = Polynomial({})
    for k, c in enumerate(coeffs):
        basis = power_basis_poly(a, k, "minus", params) \
            if form == "forward" else power_basis_poly_reversed(
                a, k, params)
        out = out + basis * c
    return out


# -- measured-only reports ---------------------------------------------------

def gamma_duplication_report(params: DeformParams, z,
                             truncation: int = DEFAULT_TRUNCATION) -> dict:
    """Both sides of the doubling relation

        Gamma(2z) Gamma_{R(p^2,q^2)}(1/2)
            vs (xi1+xi2)^(2z-1) Gamma_{R(p^2,q^2)}(z) Gamma_{R(p^2,q^2)}(z+1/2)

    measured, never asserted: no proof exists under general deformation."""
    z = Fraction(z)
    p2 = params.powered(2)
    lhs = gamma_rpq(2 * z, params, truncation).value \
        * gamma_rpq(Fraction(1, 2), p2, truncation).value
    rhs = rational_pow_exact(params.xi1 + params.xi2, 2 * z - 1) \
        * gamma_rpq(z, p2, truncation).value \
        * gamma_rpq(z + Fraction(1, 2), p2, truncation).value
    return {"identity": "gamma duplication", "asserted": False,
            "lhs": exact_str(lhs), "rhs": exact_str(rhs),
            "difference": exact_str(lhs - rhs)}


PI_64 = Fraction(
    3141592653589793238462643383279502884197169399375105820974944592307816,
    10 ** 69)


def beta_reflection_report(params: DeformParams, x,
                           truncation: int = DEFAULT_TRUNCATION) -> dict:
    """Measured comparison of beta(x, 1-x) against pi/sin[pi x] in the
    classical sense; the deformed side lacks the functional equation,
    so the discrepancy is reported, never asserted."""
    x = Fraction(x)
    b = beta_rpq(x, 1 - x, params, truncation)
    gg = gamma_rpq(x, params, truncation).value \
        * gamma_rpq(1 - x, params, truncation).value
    import math
    sin_ref = Fraction(math.sin(math.pi * float(x))).limit_denominator(
        10 ** 18)
    classical_rhs = PI_64 / sin_ref if sin_ref != 0 else None
    return {"identity": "beta reflection", "asserted": False,
            "beta(x,1-x)": exact_str(b.value),
            "gamma(x)gamma(1-x)": exact_str(gg),
            "product_form_matches": b.value == gg,
            "classical_pi_over_sin": str(classical_rhs),
            "difference_vs_classical":
                exact_str(b.value - classical_rhs) if classical_rhs else None}
