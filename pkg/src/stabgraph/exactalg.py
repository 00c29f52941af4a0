"""Exact scalar and univariate polynomial arithmetic.

Scalars are Gaussian rationals a + b*i with a, b kept as
``fractions.Fraction``, so every operation in the package is exact; nothing
downstream ever rounds unless it explicitly opts into floats. Polynomials are
dense coefficient tuples over those scalars, tagged with the variable they
live in (one of z1, z2, w, x) so that cross-variable arithmetic is a caught
error rather than a silent bug.

The degree of the zero polynomial is the explicit marker ``NEG_INF``
(float("-inf")), never -1, so deg(p*q) == deg(p) + deg(q) holds for all
inputs under IEEE -inf arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    DivisionByZero,
    NotDivisible,
    VariableMismatch,
    ZeroPolynomial,
)

NEG_INF = float("-inf")
POS_INF = float("inf")

VALID_VARS = ("z1", "z2", "w", "x")

_F0 = Fraction(0)
_F1 = Fraction(1)

Scalarish = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """A Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def of(value: Scalarish) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            # real-only fast path: the graph pencils are real, so this is hot
            if not self.im and not other.im:
                return GaussianRational(self.re * other.re)
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    def conj(self) -> "GaussianRational":
        if not self.im:
            return self
        return GaussianRational(self.re, -self.im)

    def inv(self) -> "GaussianRational":
        if not self.re and not self.im:
            raise DivisionByZero("inverse of zero")
        if not self.im:
            return GaussianRational(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            if not other.re and not other.im:
                raise DivisionByZero("division by zero")
            if not self.im and not other.im:
                return GaussianRational(self.re / other.re)
            return self * other.inv()
        return NotImplemented

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        # canonical text: "a/b", with "+c/d*i" appended when im != 0 and
        # integer shorthand when the denominator is 1
        re_s = str(self.re)
        if not self.im:
            return re_s
        sign = "+" if self.im >= 0 else "-"
        return f"{re_s}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_MINUS_ONE = GaussianRational(-1)
GR_I = GaussianRational(0, 1)


def _as_gr_tuple(coeffs: Iterable[Scalarish]) -> tuple[GaussianRational, ...]:
    out = []
    for c in coeffs:
        out.append(c if isinstance(c, GaussianRational) else GaussianRational(c))
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class UniPoly:
    """Dense univariate polynomial over Gaussian rationals.

    Coefficients are stored low power first with trailing zeros trimmed, so
    the zero polynomial is the empty tuple and representation equality is
    value equality.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Scalarish] = ()):
        if var not in VALID_VARS:
            raise VariableMismatch(f"unknown variable tag {var!r}")
        self.var = var
        self.coeffs = _as_gr_tuple(coeffs)

    # constructors

    @staticmethod
    def zero(var: str) -> "UniPoly":
        return UniPoly(var, ())

    @staticmethod
    def one(var: str) -> "UniPoly":
        return UniPoly(var, (GR_ONE,))

    @staticmethod
    def const(var: str, c: Scalarish) -> "UniPoly":
        return UniPoly(var, (c,))

    @staticmethod
    def monomial(var: str, power: int, c: Scalarish = 1) -> "UniPoly":
        return UniPoly(var, (0,) * power + (c,))

    # structure

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def deg(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def valuation(self) -> int | float:
        """Multiplicity of the root at 0; +inf for the zero polynomial."""
        if not self.coeffs:
            return POS_INF
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError("unreachable: trailing zeros are trimmed")

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR_ZERO

    def lead(self) -> GaussianRational:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_real(self) -> bool:
        return all(not c.im for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def _check_var(self, other: "UniPoly"):
        if self.var != other.var:
            raise VariableMismatch(f"mixed variables {self.var!r} and {other.var!r}")

    # ring operations

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(self.var, out)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_var(other)
        out = list(self.coeffs)
        if len(other.coeffs) > len(out):
            out.extend([GR_ZERO] * (len(other.coeffs) - len(out)))
        for k, c in enumerate(other.coeffs):
            out[k] = out[k] - c
        return UniPoly(self.var, out)

    def __neg__(self):
        return UniPoly(self.var, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.var)
        if len(a) == 1:
            return other.scale(a[0])
        if len(b) == 1:
            return self.scale(b[0])
        out = [GR_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return UniPoly(self.var, out)

    def scale(self, c: Scalarish) -> "UniPoly":
        c = GaussianRational.of(c)
        if not c:
            return UniPoly.zero(self.var)
        if c == GR_ONE:
            return self
        return UniPoly(self.var, tuple(a * c for a in self.coeffs))

    def times_power(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if k == 0 or not self.coeffs:
            return self
        return UniPoly(self.var, (GR_ZERO,) * k + self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check_var(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(self.var), self
        inv_lead = other.coeffs[-1].inv()
        quot = [GR_ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv_lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[k + j] = rem[k + j] - c * b
        return UniPoly(self.var, quot), UniPoly(self.var, rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r.coeffs:
            raise NotDivisible(f"{self.text()} is not divisible by {other.text()}")
        return q

    def shift_down(self, k: int) -> "UniPoly":
        """Exact division by var**k; the dropped coefficients must be zero."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise NotDivisible(f"not divisible by {self.var}^{k}")
        return UniPoly(self.var, self.coeffs[k:])

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.var,
            tuple(c * GaussianRational(k) for k, c in enumerate(self.coeffs) if k),
        )

    def eval_at(self, point: Scalarish) -> GaussianRational:
        point = GaussianRational.of(point)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_complex(self, point: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * point + c.to_complex()
        return acc

    # coefficient symmetries

    def conj_coeffs(self) -> "UniPoly":
        """Conjugate every coefficient."""
        return UniPoly(self.var, tuple(c.conj() for c in self.coeffs))

    def flip(self, sign: int) -> "UniPoly":
        """Signed coefficient reversal: var**deg * p(sign/var), sign in {1, -1}."""
        if sign not in (1, -1):
            raise ValueError("sign must be 1 or -1")
        if not self.coeffs:
            raise ZeroPolynomial("flip of the zero polynomial")
        d = len(self.coeffs) - 1
        out = [self.coeffs[d - j] for j in range(d + 1)]
        if sign == -1:
            # coefficient of var^j picks up sign^(d-j)
            for j in range(d + 1):
                if (d - j) % 2:
                    out[j] = -out[j]
        return UniPoly(self.var, out)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroPolynomial("monic form of the zero polynomial")
        lead = self.coeffs[-1]
        if lead == GR_ONE:
            return self
        return self.scale(lead.inv())

    def with_var(self, var: str) -> "UniPoly":
        if var == self.var:
            return self
        return UniPoly(var, self.coeffs)

    # rendering

    def text(self) -> str:
        return poly_text_terms([(k, c, ()) for k, c in enumerate(self.coeffs)], self.var)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {self.text()!r})"


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(0, 0) is the zero polynomial."""
    if p.var != q.var:
        raise VariableMismatch(f"mixed variables {p.var!r} and {q.var!r}")
    a, b = p, q
    while b.coeffs:
        a, b = b, a.divmod(b)[1]
    if not a.coeffs:
        return a
    return a.monic()


def gcd_many(polys: Iterable[UniPoly], var: str) -> UniPoly:
    acc = UniPoly.zero(var)
    for p in polys:
        acc = gcd(acc, p)
    return acc


def _coeff_term_text(c: GaussianRational, monomial: str) -> tuple[str, str]:
    """Return (sign, body) for one rendered term."""
    if not c.im:
        sign = "+" if c.re >= 0 else "-"
        mag = abs(c.re)
        if not monomial:
            return sign, str(mag)
        if mag == 1:
            return sign, monomial
        return sign, f"{mag}*{monomial}"
    body = f"({c})"
    if monomial:
        body = f"{body}*{monomial}"
    return "+", body


def poly_text_terms(terms, var1: str, var2: str | None = None) -> str:
    """Render (power, coeff, extra) triples in ascending-power canonical order.

    ``terms`` is an iterable of (k, coeff, extra_vars) where extra_vars is a
    tuple of extra monomial factors (used for the z2 part of bivariate
    polynomials). Zero coefficients are skipped; the zero polynomial renders
    as "0".
    """
    pieces = []
    for k, c, extra in terms:
        if not c:
            continue
        factors = []
        if k == 1:
            factors.append(var1)
        elif k > 1:
            factors.append(f"{var1}^{k}")
        factors.extend(extra)
        monomial = "*".join(factors)
        sign, body = _coeff_term_text(c, monomial)
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    if not pieces:
        return "0"
    return "".join(pieces)
