"""Exact arithmetic over the Gaussian rationals Q(i).

Three layers live here:

  GaussRat     -- a + b*i with Fraction real and imaginary parts.  A field;
                  all operations are exact and values are immutable.
  UniPoly      -- dense univariate polynomial over GaussRat.  Coefficients
                  are stored lowest power first with no trailing zeros; the
                  zero polynomial is the empty coefficient tuple and has no
                  degree (asking for one raises, which catches silent degree
                  arithmetic early).
  RationalMap  -- k * num(z) / den(z) with num, den monic and coprime.

Polynomials serialize as lists of coefficient tokens "a/b" (rational) or
"a/b,c/d" (real,imag), lowest index first; see README for the format note.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rationalish = Union[int, Fraction]
Scalarish = Union[int, Fraction, "GaussRat"]


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational a + b*i; both parts are exact Fractions."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: Rationalish = 0, im: Rationalish = 0) -> "GaussRat":
        return GaussRat(Fraction(re), Fraction(im))

    @staticmethod
    def coerce(v: Scalarish) -> "GaussRat":
        if isinstance(v, GaussRat):
            return v
        return GaussRat(Fraction(v), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: Scalarish) -> "GaussRat":
        o = GaussRat.coerce(other)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other: Scalarish) -> "GaussRat":
        return self + (-GaussRat.coerce(other))

    def __rsub__(self, other: Scalarish) -> "GaussRat":
        return GaussRat.coerce(other) + (-self)

    def __mul__(self, other: Scalarish) -> "GaussRat":
        o = GaussRat.coerce(other)
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        """re^2 + im^2 (the field norm down to Q)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRat":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalarish) -> "GaussRat":
        return self * GaussRat.coerce(other).inverse()

    def __rtruediv__(self, other: Scalarish) -> "GaussRat":
        return GaussRat.coerce(other) * self.inverse()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    __repr__ = __str__

    def to_token(self) -> str:
        """Serialize as "a/b" or "a/b,c/d"."""
        if not self.im:
            return str(self.re)
        return f"{self.re},{self.im}"

    @staticmethod
    def from_token(token: str) -> "GaussRat":
        parts = token.split(",")
        if len(parts) == 1:
            return GaussRat(Fraction(parts[0]), Fraction(0))
        if len(parts) == 2:
            return GaussRat(Fraction(parts[0]), Fraction(parts[1]))
        raise ValueError(f"bad coefficient token: {token!r}")


ZERO = GaussRat.of(0)
ONE = GaussRat.of(1)
I = GaussRat.of(0, 1)


class UniPoly:
    """Dense exact univariate polynomial in z over GaussRat.

    coeffs[i] is the coefficient of z^i; the tuple never ends in a zero.
    The zero polynomial is the empty tuple and deliberately has no degree.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalarish] = ()):
        cs = [GaussRat.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def constant(c: Scalarish) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def monomial(power: int, c: Scalarish = 1) -> "UniPoly":
        return UniPoly([0] * power + [c])

    @staticmethod
    def from_terms(terms: dict[int, Scalarish]) -> "UniPoly":
        """Build from {power: coefficient}."""
        if not terms:
            return UniPoly.zero()
        cs = [GaussRat.of(0)] * (max(terms) + 1)
        for p, c in terms.items():
            cs[p] = GaussRat.coerce(c)
        return UniPoly(cs)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> GaussRat:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return ZERO

    def leading(self) -> GaussRat:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def scale(self, s: Scalarish) -> "UniPoly":
        s = GaussRat.coerce(s)
        if s.is_zero:
            return UniPoly.zero()
        return UniPoly([c * s for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero()
        out = [GaussRat.of(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    def __rmul__(self, other) -> "UniPoly":
        return self * other

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly([self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(z)), by Horner over polynomials."""
        result = UniPoly.zero()
        for c in reversed(self.coeffs):
            result = result * inner + UniPoly.constant(c)
        return result

    def substitute_power(self, n: int) -> "UniPoly":
        """self(z^n) without the general composition loop."""
        if n < 1:
            raise ValueError("power substitution needs n >= 1")
        if not self.coeffs:
            return self
        out = [GaussRat.of(0)] * ((len(self.coeffs) - 1) * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return UniPoly(out)

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading()
        if lead == ONE:
            return self
        return self.scale(lead.inverse())

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or self.degree < other.degree:
            return UniPoly.zero(), self
        rem = list(self.coeffs)
        dlead = other.leading().inverse()
        dd = other.degree
        q = [GaussRat.of(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            f = c * dlead
            q[i - dd] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - f * oc
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def divide_exact(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def evaluate(self, x: Scalarish) -> GaussRat:
        x = GaussRat.coerce(x)
        acc = GaussRat.of(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    # -- serialization / display ---------------------------------------

    def to_tokens(self) -> list[str]:
        return [c.to_token() for c in self.coeffs]

    @staticmethod
    def from_tokens(tokens: Sequence[str]) -> "UniPoly":
        return UniPoly([GaussRat.from_token(t) for t in tokens])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "z"
            else:
                mono = f"z^{i}"
            if c == ONE and mono:
                text = mono
            elif c == -ONE and mono:
                text = f"-{mono}"
            else:
                cs = str(c)
                if ("+" in cs[1:]) or ("-" in cs[1:]):
                    cs = f"({cs})"
                text = f"{cs}*{mono}" if mono else cs
            parts.append(text)
        joined = parts[0]
        for p in parts[1:]:
            joined += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return joined

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (remainders kept monic so
    coefficient growth stays at subresultant size)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def is_squarefree(p: UniPoly) -> bool:
    """True iff gcd(p, p') is constant."""
    if p.is_zero:
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic(p) = prod f_i^i with the f_i squarefree,
    monic and pairwise coprime.  Returns [(f_i, i)] for nonconstant f_i."""
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    g = poly_gcd(p, p.derivative())
    b = p.divide_exact(g)
    c = p.derivative().divide_exact(g)
    d = c - b.derivative()
    out: list[tuple[UniPoly, int]] = []
    i = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b = b.divide_exact(a)
        c = d.divide_exact(a)
        d = c - b.derivative()
        i += 1
    return out


class RationalMap:
    """k * num(z)/den(z), num and den monic and coprime, k nonzero.

    deg(map) = max(deg num, deg den); this is the topological degree when
    num/den really are coprime, which the constructor enforces.
    """

    __slots__ = ("k", "num", "den")

    def __init__(self, k: Scalarish, num: UniPoly, den: UniPoly,
                 *, _known_canonical: bool = False):
        k = GaussRat.coerce(k)
        if num.is_zero:
            raise ValueError("rational map with zero numerator")
        if den.is_zero:
            raise ZeroDivisionError("rational map with zero denominator")
        if not _known_canonical:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divide_exact(g)
                den = den.divide_exact(g)
            k = k * num.leading() / den.leading()
            num = num.monic()
            den = den.monic()
        if k.is_zero:
            raise ValueError("rational map with zero scalar")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("RationalMap is immutable")

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMap) and self.k == other.k
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.k, self.num, self.den))

    def substitute_power(self, n: int) -> "RationalMap":
        """self(z^n).  Substitution into coprime monic num/den keeps them
        coprime and monic, so no renormalization pass is needed."""
        return RationalMap(self.k, self.num.substitute_power(n),
                           self.den.substitute_power(n), _known_canonical=True)

    def one_numerator(self) -> UniPoly:
        """Numerator of self - 1 over the common denominator: k*num - den."""
        return self.num.scale(self.k) - self.den

    def evaluate(self, x: Scalarish) -> GaussRat:
        return self.k * self.num.evaluate(x) / self.den.evaluate(x)

    def eval_complex(self, z: complex) -> complex:
        return complex(self.k) * self.num.eval_complex(z) / self.den.eval_complex(z)

    def __str__(self) -> str:
        return f"({self.k}) * ({self.num}) / ({self.den})"

    __repr__ = __str__
