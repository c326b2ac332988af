"""Single algebraic extensions Q[z]/(m(z)) with m squarefree.

Elements are residue classes represented by polynomials of degree < deg m.
Division works whenever the element is a unit in the quotient ring, detected
by the extended gcd; no towers of extensions.
"""

from __future__ import annotations

from .rationals import Rat, ZERO, ONE, format_rat
from .poly import Poly, poly_gcd, xgcd_poly, squarefree_part
from .series import Domain


class AlgExtError(Exception):
    pass


class AlgExtField:
    __slots__ = ("modulus",)

    def __init__(self, modulus: Poly):
        m = modulus.monic()
        if m.degree < 1:
            raise AlgExtError("modulus must have positive degree")
        if poly_gcd(m, m.derivative()).degree > 0:
            raise AlgExtError("modulus must be squarefree")
        self.modulus = m

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, coeffs) -> "AlgExt":
        p = coeffs if isinstance(coeffs, Poly) else Poly(list(coeffs), self.modulus.var)
        return AlgExt(self, p % self.modulus)

    def of_rat(self, q) -> "AlgExt":
        return self.element([Rat(q)])

    @property
    def gen(self) -> "AlgExt":
        return self.element([ZERO, ONE])

    @property
    def zero(self):
        return self.of_rat(0)

    @property
    def one(self):
        return self.of_rat(1)

    def __eq__(self, other):
        return isinstance(other, AlgExtField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("AlgExtField", self.modulus.coeffs))

    def __repr__(self):
        return "Q[%s]/(%r)" % (self.modulus.var, self.modulus)

    def series_domain(self) -> Domain:
        return Domain(
            "AlgExt(%r)" % self.modulus,
            self.zero,
            self.one,
            self.of_rat,
            lambda e: repr(e),
        )


class AlgExt:
    __slots__ = ("field", "rep")

    def __init__(self, field: AlgExtField, rep: Poly):
        self.field = field
        self.rep = rep

    def _coerce(self, other) -> "AlgExt":
        if isinstance(other, AlgExt):
            if other.field != self.field:
                raise AlgExtError("mixed extensions are not supported")
            return other
        return self.field.of_rat(other)

    def __bool__(self):
        return not self.rep.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (AlgExtError, TypeError, ValueError):
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.field, self.rep.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        return AlgExt(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return AlgExt(self.field, -self.rep)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        return AlgExt(self.field, (self.rep * o.rep) % self.field.modulus)

    __rmul__ = __mul__

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

    def inverse(self) -> "AlgExt":
        g, u, _ = xgcd_poly(self.rep, self.field.modulus)
        if g.degree != 0:
            raise AlgExtError("zero divisor: gcd with modulus is %r" % g)
        inv_c = ONE / g.coeffs[0] if g.coeffs[0] != ONE else ONE
        return AlgExt(self.field, (u * inv_c) % self.field.modulus)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def conjugate(self) -> "AlgExt":
        """The other root, for a degree-2 modulus z^2 + p z + q: a -> -p - a."""
        if self.field.degree != 2:
            raise AlgExtError("conjugate only implemented for quadratic extensions")
        p = self.field.modulus.coeffs[1]
        a, b = (list(self.rep.coeffs) + [ZERO, ZERO])[:2]
        # x + y*alpha  ->  x + y*(-p - alpha) = (x - y p) - y alpha
        return self.field.element([a - b * p, -b])

    def trace(self):
        """Sum over the two conjugates; lands in Q for quadratic extensions."""
        s = self + self.conjugate()
        if s.rep.degree > 0:
            raise AlgExtError("trace did not collapse to the base field")
        return s.rep.coeffs[0] if s.rep.coeffs else ZERO

    def to_rat(self):
        if self.rep.degree > 0:
            raise AlgExtError("not a rational element")
        return self.rep.coeffs[0] if self.rep.coeffs else ZERO

    def __repr__(self):
        if self.rep.is_zero():
            return "0"
        bits = []
        for k, c in enumerate(self.rep.coeffs):
            if not c:
                continue
            if k == 0:
                bits.append(format_rat(c))
            else:
                bits.append("%s*a^%d" % (format_rat(c), k) if k > 1 else "%s*a" % format_rat(c))
        return " + ".join(bits)


def algext_root_of(p: Poly) -> AlgExt:
    """A residue-class root of the squarefree polynomial p."""
    return AlgExtField(squarefree_part(p)).gen
