"""Dense univariate polynomials over an exact field (duck-typed coefficients)."""

from __future__ import annotations

from .rationals import Rat, ZERO, ONE, numer, denom, is_rat


class PolyError(Exception):
    pass


class Poly:
    """Coefficients ascending from degree 0; trailing zeros stripped."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="z"):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c, var="z"):
        return cls([c], var)

    @classmethod
    def gen(cls, var="z", one=ONE):
        return cls([one * 0, one], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self):
        if not self.coeffs:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return self.coeffs == Poly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [_zero_like(self, o)] * (n - len(self.coeffs))
        for i, c in enumerate(o.coeffs):
            a[i] = a[i] + c
        return Poly(a, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly([], self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        z = self.coeffs[0] * 0
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([_one_like(self)], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise PolyError("division by zero polynomial")
        lead_inv = _inv(other.leading())
        rem = list(self.coeffs)
        q = [self.coeffs[0] * 0 if self.coeffs else other.coeffs[0] * 0] * max(
            len(rem) - len(other.coeffs) + 1, 0
        )
        d = other.degree
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] * lead_inv
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return Poly(q, self.var), Poly(rem, self.var)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = _inv(self.leading())
        return Poly([c * inv for c in self.coeffs], self.var)

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def eval(self, x):
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly([], self.var)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c], self.var)
        return acc

    def shifted(self, a) -> "Poly":
        """p(z + a): Taylor re-expansion by iterated synthetic division."""
        cs = list(self.coeffs)
        if not cs:
            return self
        out = []
        while cs:
            carry = cs[-1]
            q = []
            for c in reversed(cs[:-1]):
                q.append(carry)
                carry = carry * a + c
            q.reverse()
            out.append(carry)
            cs = q
        return Poly(out, self.var)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                bits.append("%s" % (c,))
            elif k == 1:
                bits.append("(%s)%s" % (c, self.var))
            else:
                bits.append("(%s)%s^%d" % (c, self.var, k))
        return " + ".join(bits)


def _zero_like(a: Poly, b: Poly):
    if a.coeffs:
        return a.coeffs[0] * 0
    if b.coeffs:
        return b.coeffs[0] * 0
    return ZERO


def _one_like(p: Poly):
    if p.coeffs:
        c = p.coeffs[0]
        try:
            return c**0
        except TypeError:
            pass
    return ONE


def _inv(c):
    try:
        return 1 / c
    except TypeError:
        return c.inverse()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (field coefficients)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def xgcd_poly(a: Poly, b: Poly):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    var = a.var
    zero, one = Poly([], var), Poly([_one_like(a if a.coeffs else b)], var)
    old_r, r = a, b
    old_s, s = one, zero
    old_t, t = zero, one
    while not r.is_zero():
        q, rem = old_r.divmod(r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r.is_zero():
        return old_r, old_s, old_t
    lead_inv = _inv(old_r.leading())
    return old_r * lead_inv, old_s * lead_inv, old_t * lead_inv


def squarefree_part(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def squarefree_decomposition(p: Poly):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    if p.is_zero():
        raise PolyError("zero polynomial")
    p = p.monic()
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    m = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f.monic(), m))
        b2 = b // f
        c2 = d // f
        d = c2 - b2.derivative()
        b = b2
        m += 1
    return out


def rational_roots(p: Poly):
    """All rational roots (with the reduced polynomial), coefficients in Rat."""
    if p.is_zero():
        raise PolyError("zero polynomial")
    roots = []
    # strip zero roots
    cs = list(p.coeffs)
    while cs and not cs[0]:
        roots.append(ZERO)
        cs.pop(0)
    q = Poly(cs, p.var)
    if q.degree <= 0:
        return roots, q
    # integer model for candidate generation
    den_lcm = 1
    for c in q.coeffs:
        den_lcm = _lcm(den_lcm, denom(c))
    ints = [numer(c) * (den_lcm // denom(c)) for c in q.coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    for pp in _divisors(a0):
        for qq in _divisors(an):
            for sgn in (1, -1):
                cand = Rat(sgn * pp, qq)
                while q.degree > 0 and not q.eval(cand):
                    roots.append(cand)
                    q = q // Poly([-cand, ONE], p.var)
    return roots, q


def _divisors(n: int):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm(a, b):
    return a // _gcd_int(a, b) * b
