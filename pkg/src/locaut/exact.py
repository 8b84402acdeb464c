"""Exact scalars: rationals, Gaussian rationals and dense polynomials.

GaussianRational is the workhorse scalar of the whole package.  It stores
(a + b*i)/d as three machine-unbounded ints with gcd(a, b, d) == 1 and d > 0,
which keeps the inner loops of Gaussian elimination roughly an order of
magnitude faster than a pair of fractions.Fraction would be.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd, isqrt

# Plain rationals are stdlib Fractions: big-int backed, always reduced,
# positive denominator.  No reason to reinvent them.
Rational = Fraction


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


class GaussianRational:
    """An element of Q(i), stored as (a + b*i)/d in lowest terms."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        den = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (den // re.denominator)
        b = im.numerator * (den // im.denominator)
        g = gcd(gcd(abs(a), abs(b)), den)
        self.a = a // g
        self.b = b // g
        self.d = den // g

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        # Caller guarantees nothing; normalize cheaply with one gcd chain.
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        z = object.__new__(cls)
        z.a = a
        z.b = b
        z.d = d
        return z

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == self.d and self.b == 0

    def is_real(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.a, -self.b, self.d)

    def inverse(self) -> "GaussianRational":
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational._raw(self.d * self.a, -self.d * self.b, n)

    def norm_sq(self) -> Fraction:
        return Fraction(self.a * self.a + self.b * self.b, self.d * self.d)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        z = object.__new__(GaussianRational)
        z.a = -self.a
        z.b = -self.b
        z.d = self.d
        return z

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GR_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sqrt(self) -> "GaussianRational | None":
        """Canonical exact square root in Q(i), or None if none exists.

        Canonical means positive real part, or zero real part with
        non-negative imaginary part.
        """
        if self.is_zero():
            return GR_ZERO
        A, B = self.re, self.im
        if B == 0:
            if A > 0:
                s = _fraction_sqrt(A)
                return None if s is None else GaussianRational(s)
            s = _fraction_sqrt(-A)
            return None if s is None else GaussianRational(0, s)
        r = _fraction_sqrt(A * A + B * B)
        if r is None:
            return None
        c = _fraction_sqrt((A + r) / 2)
        if c is None or c == 0:
            return None
        w = GaussianRational(c, B / (2 * c))
        assert w * w == self
        return w

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussianRational) -> str:
    """Canonical string form: "a/b", "c/d*i" or "a/b+c/d*i"."""
    z = _coerce(z)
    if z.b == 0:
        return _format_fraction(z.re)
    im_part = _format_fraction(abs(z.im)) + "*i"
    if z.a == 0:
        return im_part if z.b > 0 else "-" + im_part
    sign = "+" if z.b > 0 else "-"
    return _format_fraction(z.re) + sign + im_part


_TERM_RE = _re.compile(r"^[+-]?(\d+(/\d+)?)?\*?i?$")


def parse_scalar(text: str) -> GaussianRational:
    """Parse "a/b", "a/b+c/d*i" and common variants ("i", "2i", "-3/4i")."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError(f"empty scalar string: {text!r}")
    # Split into signed terms; signs only occur at term boundaries since
    # there is no exponent syntax.
    terms: list[str] = []
    start = 0
    for j in range(1, len(s)):
        if s[j] in "+-" and s[j - 1] not in "+-*/":
            terms.append(s[start:j])
            start = j
    terms.append(s[start:])
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_re = seen_im = False
    try:
        for term in terms:
            if not _TERM_RE.match(term):
                raise ValueError(f"bad scalar term {term!r} in {text!r}")
            if term.endswith("i"):
                if seen_im:
                    raise ValueError(f"repeated imaginary part in {text!r}")
                seen_im = True
                body = term[:-1].rstrip("*")
                if body in ("", "+"):
                    im_part = Fraction(1)
                elif body == "-":
                    im_part = Fraction(-1)
                else:
                    im_part = Fraction(body)
            else:
                if seen_re:
                    raise ValueError(f"repeated real part in {text!r}")
                seen_re = True
                re_part = Fraction(term)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return GaussianRational(re_part, im_part)


class Polynomial:
    """Dense univariate polynomial over Q(i), coefficients constant-first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        out = cls((1,))
        for r in roots:
            out = out * cls((-_coerce(r), GR_ONE))
        return out

    @property
    def degree(self) -> int:
        # Zero polynomial reports degree -1.
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(
                (self.coeffs[k] if k < len(self.coeffs) else GR_ZERO)
                + (other.coeffs[k] if k < len(other.coeffs) else GR_ZERO)
                for k in range(n)
            )
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, cj in enumerate(self.coeffs):
            if cj.is_zero():
                continue
            for k, ck in enumerate(other.coeffs):
                out[j + k] = out[j + k] + cj * ck
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [GR_ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = other.leading().inverse()
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv_lead
            q[k] = c
            if not c.is_zero():
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return Polynomial(tuple(q)), Polynomial(tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, t) -> GaussianRational:
        acc = GR_ZERO
        t = _coerce(t)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({format_scalar(c)})")
            elif k == 1:
                parts.append(f"({format_scalar(c)})*t")
            else:
                parts.append(f"({format_scalar(c)})*t^{k}")
        return " + ".join(parts)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls(tuple(parse_scalar(c) for c in data))


def _coerce_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return Polynomial((x,))
    return NotImplemented


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd in Q(i)[t]; gcd(0, 0) == 0."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic() if not p.is_zero() else p
