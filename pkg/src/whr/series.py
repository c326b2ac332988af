"""Truncated multivariate formal series over an exact coefficient domain.

A series lives in a SeriesRing fixing an ordered tuple of variables, each
with an exponent window [floor, cap] (floor 0 for ordinary power-series
variables, floor < 0 for Laurent-windowed ones such as beta).  Arithmetic
silently drops exponents above a cap; producing a surviving term below a
floor is a hard error, because cancellation of negative powers is something
callers assert about, so losing such terms silently would fake results.

Coefficients default to rationals but any exact domain with +, -, *, ==,
bool works (rational functions, algebraic extensions).
"""

from __future__ import annotations

from .rationals import Rat, ZERO, ONE, format_rat, parse_rat


class SeriesError(Exception):
    pass


class WindowUnderflow(SeriesError):
    """A term within all caps fell below some variable's floor."""


class IncompatibleSeries(SeriesError):
    pass


class Domain:
    """Coefficient domain descriptor: identity elements plus conversions."""

    __slots__ = ("name", "zero", "one", "of_rat", "fmt")

    def __init__(self, name, zero, one, of_rat, fmt):
        self.name = name
        self.zero = zero
        self.one = one
        self.of_rat = of_rat
        self.fmt = fmt

    def __repr__(self):
        return "Domain(%s)" % self.name


QQ = Domain("QQ", ZERO, ONE, lambda q: q, format_rat)


class SeriesRing:
    __slots__ = ("vars", "floors", "caps", "domain", "_index")

    def __init__(self, vars, caps, floors=None, domain=QQ):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise IncompatibleSeries("duplicate variable names")
        if isinstance(caps, dict):
            caps = tuple(caps[v] for v in self.vars)
        self.caps = tuple(caps)
        if floors is None:
            floors = (0,) * len(self.vars)
        elif isinstance(floors, dict):
            floors = tuple(floors.get(v, 0) for v in self.vars)
        self.floors = tuple(floors)
        for f, c in zip(self.floors, self.caps):
            if f > 0 or c < 0 or f > c:
                raise IncompatibleSeries("window must satisfy floor <= 0 <= cap")
        self.domain = domain
        self._index = {v: i for i, v in enumerate(self.vars)}

    def index(self, var) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise IncompatibleSeries("unknown variable %r" % (var,))

    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def const(self, coef) -> "TruncatedSeries":
        c = self.coerce(coef)
        if not c:
            return self.zero()
        return TruncatedSeries(self, {(0,) * len(self.vars): c})

    def one(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {(0,) * len(self.vars): self.domain.one})

    def var(self, name, power=1) -> "TruncatedSeries":
        return self.monomial({name: power})

    def monomial(self, exps, coef=None) -> "TruncatedSeries":
        e = [0] * len(self.vars)
        for v, k in exps.items():
            e[self.index(v)] = k
        e = tuple(e)
        for x, f, c in zip(e, self.floors, self.caps):
            if x < f or x > c:
                raise WindowUnderflow("monomial exponent %r outside window" % (exps,))
        c = self.domain.one if coef is None else self.coerce(coef)
        if not c:
            return self.zero()
        return TruncatedSeries(self, {e: c})

    def coerce(self, x):
        if isinstance(x, (int, str)):
            return self.domain.of_rat(Rat(x) if not isinstance(x, str) else parse_rat(x))
        try:
            if is_rat_like(x):
                return self.domain.of_rat(x)
        except TypeError:
            pass
        return x

    def from_terms(self, terms) -> "TruncatedSeries":
        out = {}
        for e, c in terms.items():
            if not c:
                continue
            keep = True
            for x, f, cp in zip(e, self.floors, self.caps):
                if x > cp:
                    keep = False
                    break
                if x < f:
                    raise WindowUnderflow("exponent %r below floor" % (e,))
            if keep:
                out[tuple(e)] = c
        return TruncatedSeries(self, out)

    def same_shape(self, other: "SeriesRing") -> bool:
        return (
            self.vars == other.vars
            and self.caps == other.caps
            and self.floors == other.floors
            and self.domain is other.domain
        )

    def __repr__(self):
        return "SeriesRing(%s)" % ", ".join(
            "%s[%d..%d]" % (v, f, c) for v, f, c in zip(self.vars, self.floors, self.caps)
        )


def is_rat_like(x) -> bool:
    return hasattr(x, "numerator") and hasattr(x, "denominator") and not hasattr(x, "ring")


class TruncatedSeries:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: SeriesRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps) -> object:
        """Coefficient of the monomial given as {var: exponent} (others 0)."""
        e = [0] * len(self.ring.vars)
        for v, k in exps.items():
            e[self.ring.index(v)] = k
        return self.terms.get(tuple(e), self.ring.domain.zero)

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring.vars), self.ring.domain.zero)

    def min_exp(self, var) -> int | None:
        i = self.ring.index(var)
        return min((e[i] for e in self.terms), default=None)

    def max_exp(self, var) -> int | None:
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=None)

    def items_sorted(self):
        return sorted(self.terms.items())

    # -- ring operations ----------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and not self.ring.same_shape(other.ring):
            raise IncompatibleSeries("series from different rings")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self.ring.const(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return TruncatedSeries(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        floors, caps = self.ring.floors, self.ring.caps
        n = len(caps)
        out = {}
        a_items = list(self.terms.items())
        b_items = list(other.terms.items())
        if len(a_items) > len(b_items):
            a_items, b_items = b_items, a_items
        for ea, ca in a_items:
            for eb, cb in b_items:
                e = tuple(ea[i] + eb[i] for i in range(n))
                over = False
                under = False
                for i in range(n):
                    x = e[i]
                    if x > caps[i]:
                        over = True
                        break
                    if x < floors[i]:
                        under = True
                if over:
                    continue
                if under:
                    raise WindowUnderflow(
                        "product term %r falls below a variable floor" % (e,)
                    )
                c = ca * cb
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return TruncatedSeries(self.ring, out)

    __rmul__ = __mul__

    def scale(self, coef):
        c0 = self.ring.coerce(coef)
        if not c0:
            return self.ring.zero()
        return TruncatedSeries(self.ring, {e: c * c0 for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise SeriesError("negative power; use inverse()")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    # -- calculus helpers ----------------------------------------------

    def euler(self, var):
        """x d/dx for one variable: multiply each term by its exponent."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e] = c * e[i]
        return TruncatedSeries(self.ring, out)

    def deriv(self, var):
        i = self.ring.index(var)
        floor = self.ring.floors[i]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1 :]
            if k - 1 < floor:
                raise WindowUnderflow("derivative of %r leaves the window" % (e,))
            out[e2] = c * k
        return TruncatedSeries(self.ring, out)

    def shift(self, var, k: int):
        """Multiply by var**k (k may be negative within the window)."""
        i = self.ring.index(var)
        floor, cap = self.ring.floors[i], self.ring.caps[i]
        out = {}
        for e, c in self.terms.items():
            x = e[i] + k
            if x > cap:
                continue
            if x < floor:
                raise WindowUnderflow("shift lands below floor")
            out[e[:i] + (x,) + e[i + 1 :]] = c
        return TruncatedSeries(self.ring, out)

    def slice_var(self, var, k: int):
        """Terms with the given exponent of var, with that exponent zeroed."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1 :]] = c
        return TruncatedSeries(self.ring, out)

    def truncate_total(self, vars, bound: int):
        """Drop terms whose total degree over the listed variables exceeds bound."""
        idx = [self.ring.index(v) for v in vars]
        out = {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) <= bound}
        return TruncatedSeries(self.ring, out)

    # -- substitution ---------------------------------------------------

    def specialize(self, var, value):
        """Substitute an invertible scalar for var (Laurent exponents allowed)."""
        i = self.ring.index(var)
        val = self.ring.coerce(value)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                if k > 0:
                    c = c * val**k
                else:
                    if not val:
                        raise SeriesError("specializing Laurent variable at 0")
                    c = c / val ** (-k)
            e2 = e[:i] + (0,) + e[i + 1 :]
            s = out.get(e2)
            s = c if s is None else s + c
            if s:
                out[e2] = s
            elif e2 in out:
                del out[e2]
        return TruncatedSeries(self.ring, out)

    def map_into(self, ring: SeriesRing, var_map=None):
        """Re-express in another ring.

        var_map maps old variable names either to new names (str) or to
        series in the target ring (nonnegative exponents only for the
        latter).  Unmapped variables keep their name.
        """
        var_map = dict(var_map or {})
        plan = []
        for v in self.ring.vars:
            tgt = var_map.get(v, v)
            plan.append(tgt)
        out = ring.zero()
        for e, c in self.terms.items():
            term = ring.const(c)
            mono = {}
            ok = True
            for v, tgt, k in zip(self.ring.vars, plan, e):
                if k == 0:
                    continue
                if isinstance(tgt, str):
                    mono[tgt] = mono.get(tgt, 0) + k
                else:
                    if k < 0:
                        raise SeriesError(
                            "series substitution for Laurent exponent of %s" % v
                        )
                    term = term * tgt**k
                    if term.is_zero():
                        ok = False
                        break
            if not ok:
                continue
            if mono:
                try:
                    term = term * ring.monomial(mono)
                except WindowUnderflow:
                    raise
            out = out + term
        return out

    # -- inversion, log, exp --------------------------------------------

    def _split_unit(self, grade_vars):
        idx = [self.ring.index(v) for v in grade_vars]
        zero_e = (0,) * len(self.ring.vars)
        c0 = self.terms.get(zero_e)
        if c0 is None or not c0:
            raise SeriesError("no invertible constant term")
        rest = {}
        for e, c in self.terms.items():
            if e == zero_e:
                continue
            g = sum(e[i] for i in idx)
            if g <= 0:
                raise SeriesError(
                    "term %r has nonpositive grade; cannot treat as unit" % (e,)
                )
            rest[e] = c
        return c0, TruncatedSeries(self.ring, rest), idx

    def _grade_bound(self, idx):
        return sum(self.ring.caps[i] for i in idx)

    def inverse(self, grade_vars):
        """Invert 1-unit series: constant term invertible, rest positively graded."""
        c0, n, idx = self._split_unit(grade_vars)
        inv0 = _invert_coef(c0, self.ring)
        # (c0 + N)^-1 = inv0 * sum (-N inv0)^k
        bound = self._grade_bound(idx)
        mingrade = min(
            (sum(e[i] for i in idx) for e in n.terms), default=bound + 1
        )
        term = self.ring.one()
        acc = self.ring.one()
        step = n.scale(inv0)
        k, g = 0, 0
        while True:
            k += 1
            g += mingrade
            if g > bound:
                break
            term = (-term) * step
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(inv0)

    def divide_unit(self, other, grade_vars):
        return self * other.inverse(grade_vars)

    def log(self, grade_vars):
        """Formal log; requires constant term exactly 1."""
        one = self.ring.domain.one
        if self.constant_term() != one:
            raise SeriesError("series_log requires constant term 1")
        u = self - self.ring.one()
        idx = [self.ring.index(v) for v in grade_vars]
        bound = self._grade_bound(idx)
        mingrade = min((sum(e[i] for i in idx) for e in u.terms), default=bound + 1)
        acc = self.ring.zero()
        term = self.ring.one()
        k, g = 0, 0
        while True:
            k += 1
            g += mingrade
            if g > bound:
                break
            term = term * u
            if term.is_zero():
                break
            acc = acc + term.scale(Rat((-1) ** (k + 1), k))
        return acc

    def exp(self, grade_vars):
        """Formal exp; requires zero constant term."""
        if self.constant_term():
            raise SeriesError("series_exp requires zero constant term")
        idx = [self.ring.index(v) for v in grade_vars]
        bound = self._grade_bound(idx)
        mingrade = min((sum(e[i] for i in idx) for e in self.terms), default=bound + 1)
        if self.terms and mingrade <= 0:
            raise SeriesError("series_exp requires positively graded argument")
        acc = self.ring.one()
        term = self.ring.one()
        k, g = 0, 0
        fact = 1
        while True:
            k += 1
            g += mingrade
            if g > bound:
                break
            term = term * self
            if term.is_zero():
                break
            fact *= k
            acc = acc + term.scale(Rat(1, fact))
        return acc

    # -- exact structured division ---------------------------------------

    def divide_linear(self, var_i, var_j):
        """Exact division by (var_i - var_j); raises if not divisible.

        Quotient coefficients are certified only where the dividend's caps
        support them; callers build dividends with one extra order of margin.
        """
        i = self.ring.index(var_i)
        j = self.ring.index(var_j)
        rem = dict(self.terms)
        out = {}
        # repeatedly strip the term with the highest var_i exponent
        while rem:
            e = max(rem, key=lambda t: (t[i], t))
            c = rem[e]
            if e[i] == 0:
                # remainder must be identically zero = f(var_i -> var_j) == 0
                raise SeriesError("series not divisible by (%s - %s)" % (var_i, var_j))
            q = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out[q] = out.get(q, self.ring.domain.zero) + c
            # subtract c * q * (vi - vj)
            del rem[e]
            e2 = list(q)
            e2[j] += 1
            e2 = tuple(e2)
            if e2[j] <= self.ring.caps[j]:
                s = rem.get(e2, self.ring.domain.zero) + c
                if s:
                    rem[e2] = s
                elif e2 in rem:
                    del rem[e2]
        return TruncatedSeries(self.ring, {e: c for e, c in out.items() if c})

    # -- serialization ----------------------------------------------------

    def to_json_obj(self):
        fmt = self.ring.domain.fmt
        return [
            {"exp": list(e), "coef": fmt(c)} for e, c in self.items_sorted()
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.items_sorted()[:12]:
            mono = "*".join(
                "%s^%d" % (v, k) if k != 1 else v
                for v, k in zip(self.ring.vars, e)
                if k
            )
            bits.append("(%s)%s" % (c, "*" + mono if mono else ""))
        more = "" if len(self.terms) <= 12 else " + ... (%d terms)" % len(self.terms)
        return " + ".join(bits) + more


def _invert_coef(c, ring: SeriesRing):
    one = ring.domain.one
    try:
        return one / c
    except TypeError:
        return c.inverse()


def series_from_json(ring: SeriesRing, obj) -> TruncatedSeries:
    terms = {}
    for item in obj:
        terms[tuple(item["exp"])] = ring.domain.of_rat(parse_rat(item["coef"]))
    return ring.from_terms(terms)


def series_reversion(coeffs, cap: int):
    """Compositional inverse of f(z) = z*(unit), both as dense lists over Rat-like.

    coeffs[k] is the coefficient of z^k; coeffs[0] must be 0 and coeffs[1] a
    unit.  Returns the dense coefficient list of g with f(g(x)) = x + O(x^{cap+1}).
    """
    if len(coeffs) < 2 or coeffs[0] or not coeffs[1]:
        raise SeriesError("reversion needs f = c1*z + ... with c1 invertible")
    c1 = coeffs[1]
    g = [coeffs[0] * 0, 1 / c1]
    for n in range(2, cap + 1):
        # impose [x^n] f(g(x)) = 0 ; f(g) = sum_k c_k g^k
        g.append(coeffs[0] * 0)
        acc = coeffs[0] * 0
        powers = [None, list(g)]
        for k in range(2, min(n, len(coeffs) - 1) + 1):
            prev = powers[k - 1]
            cur = [coeffs[0] * 0] * (n + 1)
            for a, ca in enumerate(prev):
                if not ca:
                    continue
                for b, cb in enumerate(g):
                    if a + b > n:
                        break
                    if cb:
                        cur[a + b] = cur[a + b] + ca * cb
            powers.append(cur)
            if k < len(coeffs) and coeffs[k]:
                acc = acc + coeffs[k] * cur[n]
        g[n] = -acc / c1
    return g
