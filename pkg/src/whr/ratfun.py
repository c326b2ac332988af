"""Rational functions in one variable over an exact base field, gcd-reduced."""

from __future__ import annotations

from .rationals import Rat, ZERO, ONE, format_rat
from .poly import Poly, poly_gcd
from .series import Domain


class RatFunError(Exception):
    pass


class FunField:
    """The field K(var) over a duck-typed exact base field K."""

    __slots__ = ("var", "base_zero", "base_one", "base_of_rat")

    def __init__(self, var="s1", base_zero=ZERO, base_one=ONE, base_of_rat=None):
        self.var = var
        self.base_zero = base_zero
        self.base_one = base_one
        self.base_of_rat = base_of_rat or (lambda q: q)

    def of_rat(self, q) -> "RatFun":
        return self.from_poly(Poly([self.base_of_rat(Rat(q))], self.var))

    def of_base(self, c) -> "RatFun":
        return self.from_poly(Poly([c], self.var))

    def from_poly(self, p: Poly) -> "RatFun":
        return RatFun(self, p, Poly([self.base_one], self.var), reduce=False)

    @property
    def gen(self) -> "RatFun":
        return self.from_poly(Poly([self.base_zero, self.base_one], self.var))

    @property
    def zero(self):
        return self.of_rat(0)

    @property
    def one(self):
        return self.of_rat(1)

    def __eq__(self, other):
        return isinstance(other, FunField) and self.var == other.var

    def __hash__(self):
        return hash(("FunField", self.var))

    def series_domain(self) -> Domain:
        return Domain("Q(%s)" % self.var, self.zero, self.one, self.of_rat, repr)


class RatFun:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: FunField, num: Poly, den: Poly, reduce=True):
        if den.is_zero():
            raise RatFunError("zero denominator")
        if reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.leading()
            if lead != field.base_one:
                inv = _base_inv(lead)
                num = num * inv
                den = den * inv
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            if other.field != self.field:
                raise RatFunError("mixed function fields")
            return other
        if isinstance(other, Poly):
            return self.field.from_poly(other)
        if isinstance(other, int):
            return self.field.of_rat(other)
        try:
            return self.field.of_rat(Rat(other))
        except (TypeError, ValueError):
            return self.field.of_base(other)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (RatFunError, TypeError, ValueError):
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.field, self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        return RatFun(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(self.field, -self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field.zero
            return RatFun(self.field, self.num * self.field.base_of_rat(Rat(other)), self.den)
        o = self._coerce(other)
        return RatFun(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise RatFunError("inverting zero")
        return RatFun(self.field, self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "RatFun":
        n, d = self.num, self.den
        return RatFun(self.field, n.derivative() * d - n * d.derivative(), d * d)

    def eval(self, x):
        dv = self.den.eval(x)
        if not dv:
            raise RatFunError("pole at evaluation point")
        return self.num.eval(x) * _inv_generic(dv)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise RatFunError("denominator %r is not constant" % (self.den,))
        inv = _base_inv(self.den.coeffs[0])
        return self.num * inv

    def __repr__(self):
        if self.den.degree == 0 and self.den.coeffs and self.den.coeffs[0] == self.field.base_one:
            return "(%r)" % self.num
        return "(%r)/(%r)" % (self.num, self.den)


def _base_inv(c):
    try:
        return 1 / c
    except TypeError:
        return c.inverse()


def _inv_generic(c):
    try:
        return 1 / c
    except TypeError:
        return c.inverse()


QS1 = FunField("s1")


def rat_coeff_to_base(rf: RatFun):
    """Collapse a constant rational function to its base-field element."""
    if rf.num.is_zero():
        return rf.field.base_zero
    p = rf.to_poly()
    if p.degree > 0:
        raise RatFunError("not constant")
    return p.coeffs[0]
