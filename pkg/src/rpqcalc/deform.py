"""Structure functions and deformed numbers/factorials/binomials.

A deformation is a bivariate kernel R(u, v) with R(1, 1) = 0; the
deformed number of n is R(p^n, q^n).  Six named presets are provided
(each with its closed form and its canonical pair of twist bases), plus
``classical`` (the p = q -> 1 limit, [n] = n) and ``custom`` rational
kernels N(u, v)/D(u, v) given by Laurent-polynomial coefficient lists.

Everything is generic over the scalar domain: parameters may be exact
rationals or truncated p-adic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidParameterError, SingularityError
from .padic import PadicNumber

PRESET_KINDS = (
    "heine",
    "quesne",
    "biedenharn_macfarlane",
    "jagannathan_srinivasa",
    "chakrabarty_jagannathan",
    "hounkonnou_ngompe",
    "classical",
)

POSITIVITY_WINDOW = 64


def _laurent_eval(terms, u, v):
    """Evaluate sum of coeff * u^s * v^t; exponents may be negative."""
    acc = None
    for s, t, coeff in terms:
        val = coeff * u ** s * v ** t
        acc = val if acc is None else acc + val
    return acc if acc is not None else Fraction(0)


@dataclass(frozen=True)
class StructureFunction:
    """The deformation kernel R(u, v).

    ``custom`` kernels are rational functions N/D with integer Laurent
    exponents, supplied as [[s, t, coeff], ...] term lists; R(1,1) = 0
    is enforced at construction by requiring N(1,1) = 0, D(1,1) != 0.
    """

    kind: str
    numerator: Optional[tuple] = None
    denominator: Optional[tuple] = None

    def __post_init__(self):
        if self.kind in PRESET_KINDS:
            if self.numerator is not None or self.denominator is not None:
                raise InvalidParameterError(
                    "preset kernels take no custom payload")
            return
        if self.kind != "custom":
            raise InvalidParameterError(f"unknown preset {self.kind!r}")
        num, den = self.numerator, self.denominator
        if not num or not den:
            raise InvalidParameterError(
                "custom kernel needs numerator and denominator terms")
        one = Fraction(1)
        n11 = _laurent_eval(num, one, one)
        d11 = _laurent_eval(den, one, one)
        if d11 == 0:
            raise InvalidParameterError(
                "custom kernel denominator vanishes at (1, 1)")
        if n11 != 0:
            raise InvalidParameterError(
                f"custom kernel violates R(1, 1) = 0: got {n11}/{d11}")

    @classmethod
    def preset(cls, kind: str) -> "StructureFunction":
        if kind not in PRESET_KINDS:
            raise InvalidParameterError(f"unknown preset {kind!r}")
        return cls(kind)

    @classmethod
    def custom(cls, numerator, denominator) -> "StructureFunction":
        freeze = lambda terms: tuple(
            (int(s), int(t), Fraction(c)) for s, t, c in terms)
        return cls("custom", freeze(numerator), freeze(denominator))

    @classmethod
    def from_json(cls, obj: dict) -> "StructureFunction":
        return cls.custom(obj["numerator"], obj["denominator"])

    def to_json(self) -> dict:
        if self.kind != "custom":
            return {"kind": self.kind}
        unpack = lambda terms: [[s, t, str(c)] for s, t, c in terms]
        return {"kind": "custom", "numerator": unpack(self.numerator),
                "denominator": unpack(self.denominator)}

    def value(self, u, v, params: "DeformParams"):
        """R(u, v).  Preset kernels also use the bound parameters p, q
        (their closed forms carry constant denominators like p - q)."""
        k = self.kind
        p, q = params.p, params.q
        if k == "heine":
            return (1 - v) / (1 - q)
        if k == "quesne":
            return (1 - v ** -1) / (q - 1)
        if k == "biedenharn_macfarlane":
            return (v - v ** -1) / (q - q ** -1)
        if k == "jagannathan_srinivasa":
            return (u - v) / (p - q)
        if k == "chakrabarty_jagannathan":
            return (u ** -1 - v) / (p ** -1 - q)
        if k == "hounkonnou_ngompe":
            return (u - v ** -1) / (q - p ** -1)
        if k == "classical":
            raise InvalidParameterError(
                "classical kernel is defined spectrally, not pointwise")
        den = _laurent_eval(self.denominator, u, v)
        if den == 0:
            raise SingularityError(
                f"custom kernel denominator vanishes at ({u}, {v})")
        return _laurent_eval(self.numerator, u, v) / den


def _default_twists(kind: str, p, q):
    """The two dilation factors of the preset's finite-difference
    derivative; they are the geometric bases of the deformed
    exponentials and power products."""
    one = Fraction(1)
    if kind == "heine":
        return one, q
    if kind == "quesne":
        return one, q ** -1
    if kind == "biedenharn_macfarlane":
        return q, q ** -1
    if kind == "chakrabarty_jagannathan":
        return p ** -1, q
    if kind == "hounkonnou_ngompe":
        return p, q ** -1
    if kind == "classical":
        return one, one
    return p, q  # jagannathan_srinivasa and custom kernels


@dataclass(frozen=True)
class DeformParams:
    """Bound deformation parameters: scalars p, q, twist bases, kernel.

    For rational parameters the standing assumption 0 < q < p <= 1 is
    enforced (p != q always); R(p^n, q^n) is sanity-checked positive on
    a finite window at binding time.
    """

    p: object
    q: object
    structure: StructureFunction = field(
        default_factory=lambda: StructureFunction.preset(
            "jagannathan_srinivasa"))
    xi1: object = None
    xi2: object = None

    def __post_init__(self):
        kind = self.structure.kind
        p, q = self.p, self.q
        rational = not (isinstance(p, PadicNumber)
                        or isinstance(q, PadicNumber))
        if rational:
            object.__setattr__(self, "p", Fraction(p))
            object.__setattr__(self, "q", Fraction(q))
            p, q = self.p, self.q
        if kind != "classical":
            if rational:
                if not (0 < q and q < p <= 1):
                    raise InvalidParameterError(
                        f"need 0 < q < p <= 1; got p = {p}, q = {q}")
            elif (p - q) == 0:
                raise InvalidParameterError("need p != q")
        if self.xi1 is None:
            x1, x2 = _default_twists(kind, p, q)
            object.__setattr__(self, "xi1", x1)
            if self.xi2 is None:
                object.__setattr__(self, "xi2", x2)
        elif self.xi2 is None:
            raise InvalidParameterError("set both twist bases or neither")
        if rational:
            object.__setattr__(self, "xi1", Fraction(self.xi1))
            object.__setattr__(self, "xi2", Fraction(self.xi2))
        self._bind_check(rational)

    def _bind_check(self, rational: bool, window: int = POSITIVITY_WINDOW):
        if self.structure.kind != "custom":
            return  # preset positivity holds on the assumed range
        for n in range(1, window + 1):
            val = rpq_number(self, n)
            if rational:
                if val <= 0:
                    raise InvalidParameterError(
                        f"custom kernel gives R(p^{n}, q^{n}) = {val} <= 0")
            elif isinstance(val, PadicNumber) and val.is_zero():
                raise InvalidParameterError(
                    f"custom kernel gives R(p^{n}, q^{n}) = 0")

    @classmethod
    def preset(cls, kind: str, p=1, q=Fraction(1, 2), xi1=None, xi2=None):
        return cls(p, q, StructureFunction.preset(kind), xi1, xi2)

    def powered(self, k: int) -> "DeformParams":
        """Parameters for R(p^k, q^k): p, q and both twists k-th powered."""
        return DeformParams(self.p ** k, self.q ** k, self.structure,
                            self.xi1 ** k, self.xi2 ** k)

    def twist_scale(self):
        """The constant c with [n] = c (xi1^n - xi2^n)/(xi1 - xi2); equals
        [1] for every preset."""
        return rpq_number(self, 1)

    def is_twist_consistent(self, window: int = 8) -> bool:
        """Check [n] = [1] (xi1^n - xi2^n)/(xi1 - xi2) on a finite window;
        holds for all presets, may fail for custom kernels."""
        if self.structure.kind == "classical":
            return False  # xi1 = xi2 = 1 degenerates the quotient
        c = self.twist_scale()
        x1, x2 = self.xi1, self.xi2
        d = x1 - x2
        if _scalar_is_zero(d):
            return False
        for n in range(1, window + 1):
            lhs = rpq_number(self, n)
            rhs = c * (x1 ** n - x2 ** n) / d
            if not _scalar_eq(lhs, rhs):
                return False
        return True


def _scalar_is_zero(x) -> bool:
    if isinstance(x, PadicNumber):
        return x.is_zero()
    return x == 0


def _scalar_eq(a, b) -> bool:
    if isinstance(a, PadicNumber) or isinstance(b, PadicNumber):
        return (a - b).is_zero() if isinstance(a, PadicNumber) \
            else (b - a).is_zero()
    return a == b


def rpq_number(params: DeformParams, n: int):
    """[n] = R(p^n, q^n).  Exact in the parameters' scalar domain."""
    if n < 0:
        raise InvalidParameterError(f"deformed number needs n >= 0; got {n}")
    kind = params.structure.kind
    if kind == "classical":
        if isinstance(params.p, PadicNumber):
            return PadicNumber.from_rational(n, params.p.prime,
                                             params.p.precision)
        return Fraction(n)
    if n == 0:
        return _zero_like(params)
    return params.structure.value(params.p ** n, params.q ** n, params)


def _zero_like(params: DeformParams):
    if isinstance(params.p, PadicNumber):
        return PadicNumber.zero(params.p.prime,
                                params.p.absolute_precision)
    return Fraction(0)


def rpq_factorial(params: DeformParams, n: int):
    """[n]! = [1][2]...[n]; empty product 1 for n = 0."""
    if n < 0:
        raise InvalidParameterError(f"factorial needs n >= 0; got {n}")
    acc = _one_like(params)
    for k in range(1, n + 1):
        acc = acc * rpq_number(params, k)
    return acc


def _one_like(params: DeformParams):
    if isinstance(params.p, PadicNumber):
        return PadicNumber.one(params.p.prime, params.p.precision)
    return Fraction(1)


def rpq_binomial(params: DeformParams, m: int, n: int):
    """[m]! / ([n]! [m-n]!) for 0 <= n <= m."""
    if not 0 <= n <= m:
        raise InvalidParameterError(
            f"binomial needs 0 <= n <= m; got m = {m}, n = {n}")
    return rpq_factorial(params, m) / (
        rpq_factorial(params, n) * rpq_factorial(params, m - n))


# -- Biedenharn-Macfarlane identity suite ------------------------------

def bm_number(q, n: int):
    """[n]_q = (q^n - q^-n)/(q - q^-1); defined for any integer n."""
    q = Fraction(q)
    return (q ** n - q ** -n) / (q - q ** -1)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    lhs: object
    rhs: object

    @property
    def residual(self):
        return self.lhs - self.rhs

    @property
    def passed(self) -> bool:
        res = self.residual
        if hasattr(res, "is_zero"):
            return res.is_zero()
        return res == 0


@dataclass(frozen=True)
class SuiteReport:
    name: str
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self):
        for r in self.results:
            if not r.passed:
                return r
        return None

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "identities": [
                {"name": r.name, "passed": r.passed,
                 "residual": str(r.residual)}
                for r in self.results
            ],
        }


def bm_identity_suite(q, n: int, m: int) -> SuiteReport:
    """Exact checks of the addition, negation and three-term recurrence
    identities of the [n]_q = (q^n - q^-n)/(q - q^-1) numbers."""
    q = Fraction(q)
    if q == 0 or q == 1 or q == -1:
        raise InvalidParameterError("need q not in {0, 1, -1}")
    results = [
        IdentityResult(
            "[n+m] = q^-m [n] + q^n [m]",
            bm_number(q, n + m),
            q ** -m * bm_number(q, n) + q ** n * bm_number(q, m)),
        IdentityResult(
            "[n+m] = q^m [n] + q^-n [m]",
            bm_number(q, n + m),
            q ** m * bm_number(q, n) + q ** -n * bm_number(q, m)),
        IdentityResult(
            "[-m] = -[m]",
            bm_number(q, -m),
            -bm_number(q, m)),
        IdentityResult(
            "[n] = [2][n-1] - [n-2]",
            bm_number(q, n),
            bm_number(q, 2) * bm_number(q, n - 1) - bm_number(q, n - 2)),
    ]
    return SuiteReport("biedenharn_macfarlane", tuple(results))
