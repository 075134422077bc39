"""Exact coefficient arithmetic.

Specialized computations run over arbitrary-precision rationals
(``fractions.Fraction``).  Symbolic computations run over the fraction
field of Q[mu1, mu2], with mu1, mu2 the two module parameters.  Symbolic
fractions are never reduced to lowest terms (bivariate gcd is expensive);
equality and zero tests go through exact cross-multiplication instead,
which is all correctness needs.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


def binomial(m: int, n: int) -> int:
    if not 0 <= n <= m:
        raise ValueError(f"binomial({m}, {n}) out of range")
    return math.comb(m, n)


def _slim(c):
    """Exact coefficients, stored as int whenever possible (int arithmetic
    is much cheaper than Fraction arithmetic)."""
    if isinstance(c, int):
        return c
    if c.denominator == 1:
        return c.numerator
    return c


class BiPoly:
    """Sparse polynomial in mu1, mu2 over Q.

    Terms live in a dict {(a, b): coeff} meaning coeff * mu1^a * mu2^b.
    Zero coefficients are never stored, so ``not self.terms`` is an exact
    zero test.  Coefficients are int or Fraction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, c in terms.items():
                if c:
                    data[key] = _slim(c if isinstance(c, (int, Fraction)) else Fraction(c))
        self.terms = data

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c if isinstance(c, int) else Fraction(c)})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls.constant(1)

    @classmethod
    def gen_mu1(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def gen_mu2(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return Fraction(self.terms[(0, 0)])
        raise ValueError("not a constant polynomial")

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = BiPoly.__new__(BiPoly)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly.__new__(BiPoly)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_poly(other) + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = _slim(s)
                else:
                    del terms[key]
        out = BiPoly.__new__(BiPoly)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, v1: Fraction, v2: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * v1**a * v2**b
        return total

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def scaled(self, factor: Fraction) -> "BiPoly":
        out = BiPoly.__new__(BiPoly)
        out.terms = {k: _slim(factor * c) for k, c in self.terms.items()}
        return out

    def monomial_gcd(self):
        a = min(k[0] for k in self.terms)
        b = min(k[1] for k in self.terms)
        return (a, b)

    def shift_down(self, mono) -> "BiPoly":
        a0, b0 = mono
        out = BiPoly.__new__(BiPoly)
        out.terms = {(a - a0, b - b0): c for (a, b), c in self.terms.items()}
        return out

    def lead_coeff(self) -> Fraction:
        """Coefficient of the lexicographically largest monomial."""
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            mono = []
            if a:
                mono.append("mu1" if a == 1 else f"mu1^{a}")
            if b:
                mono.append("mu2" if b == 1 else f"mu2^{b}")
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = "*".join(mono)
            elif c == -1:
                piece = "-" + "*".join(mono)
            else:
                piece = str(c) + "*" + "*".join(mono)
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    __repr__ = __str__


def _coerce_poly(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.constant(x)
    return NotImplemented


class RatFunc:
    """Element of the fraction field Q(mu1, mu2), stored as num/den.

    Construction strips the common monomial factor and rational content
    from num and den and makes the denominator's leading coefficient
    positive; no polynomial gcd is ever computed.  Equality against any
    scalar is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = BiPoly.one() if den is None else _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = BiPoly.zero()
            self.den = BiPoly.one()
            return
        ma, mb = num.monomial_gcd()
        na, nb = den.monomial_gcd()
        mono = (min(ma, na), min(mb, nb))
        if mono != (0, 0):
            num = num.shift_down(mono)
            den = den.shift_down(mono)
        cn = num.content()
        cd = den.content()
        den = den.scaled(1 / cd)
        scale = cn / cd
        num = num.scaled(scale / cn)
        if den.lead_coeff() < 0:
            den = -den
            num = -num
        self.num = num
        self.den = den

    @classmethod
    def mu1(cls) -> "RatFunc":
        return cls(BiPoly.gen_mu1())

    @classmethod
    def mu2(cls) -> "RatFunc":
        return cls(BiPoly.gen_mu2())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_rat(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rat(other)
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return RatFunc(other.num * self.den, other.den * self.num)

    def __pow__(self, n: int):
        out = RatFunc(BiPoly.one())
        base = self
        if n < 0:
            base = 1 / self
            n = -n
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        # a/b == c/d  iff  a*d - c*b == 0, exactly
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def evaluate(self, v1, v2) -> Fraction:
        d = self.den.evaluate(Fraction(v1), Fraction(v2))
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(Fraction(v1), Fraction(v2)) / d

    def as_constant(self):
        """Return the Fraction this scalar equals, or None if non-constant."""
        if self.num.is_zero():
            return Fraction(0)
        if self.num.is_constant() and self.den.is_constant():
            return self.num.constant_value() / self.den.constant_value()
        # candidate from leading monomials, verified exactly
        km = max(self.num.terms)
        kd = max(self.den.terms)
        if km != kd:
            return None
        c = Fraction(self.num.terms[km], 1) / Fraction(self.den.terms[kd], 1)
        if (self.num - c * self.den).is_zero():
            return c
        return None

    def __str__(self):
        if self.den == BiPoly.one():
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _coerce_rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc(BiPoly.constant(x))
    if isinstance(x, BiPoly):
        return RatFunc(x)
    return NotImplemented


MU1 = RatFunc.mu1()
MU2 = RatFunc.mu2()


def raising_factorial(x, n: int):
    """x^(n) = x (x+1) ... (x+n-1); the empty product for n = 0."""
    if n < 0:
        raise ValueError("raising factorial needs n >= 0")
    out = 1
    for j in range(n):
        out = out * (x + j)
    return out if n else Fraction(1)


def falling_factorial(x, n: int):
    """x_(n) = x (x-1) ... (x-n+1); the empty product for n = 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out = 1
    for j in range(n):
        out = out * (x - j)
    return out if n else Fraction(1)


def scalar_is_zero(x) -> bool:
    if isinstance(x, RatFunc):
        return x.is_zero()
    return x == 0


def scalar_as_fraction(x):
    """Fraction equal to x if x is (symbolically) constant, else None."""
    if isinstance(x, RatFunc):
        return x.as_constant()
    return Fraction(x)


def scalar_is_integer(x) -> bool:
    c = scalar_as_fraction(x)
    return c is not None and c.denominator == 1


def format_scalar(x) -> str:
    if isinstance(x, RatFunc):
        return str(x)
    return str(Fraction(x))


_MONO_RE = re.compile(r"^(?P<coeff>\d+(?:/\d+)?)?(?P<rest>(?:\*?mu[12](?:\^\d+)?)*)$")


def _parse_poly(text: str) -> BiPoly:
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", text)
    terms = {}
    for piece in pieces:
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        m = _MONO_RE.match(piece)
        if not m or (not m.group("coeff") and not m.group("rest")):
            raise ValueError(f"cannot parse monomial {piece!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        a = b = 0
        for var, exp in re.findall(r"mu([12])(?:\^(\d+))?", m.group("rest")):
            e = int(exp) if exp else 1
            if var == "1":
                a += e
            else:
                b += e
        key = (a, b)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    return BiPoly(terms)


def parse_scalar(text: str):
    """Inverse of format_scalar.  Returns Fraction or RatFunc."""
    text = text.strip()
    if "mu" not in text and "(" not in text:
        return Fraction(text)
    if text.startswith("("):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    num = _parse_poly(text[1:i])
                    rest = text[i + 1:].strip()
                    if not rest:
                        return RatFunc(num)
                    if rest.startswith("/"):
                        rest = rest.strip()[1:].strip()
                        if rest.startswith("(") and rest.endswith(")"):
                            return RatFunc(num, _parse_poly(rest[1:-1]))
                    raise ValueError(f"cannot parse scalar {text!r}")
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return RatFunc(_parse_poly(text))
