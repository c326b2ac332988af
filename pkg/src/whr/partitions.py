"""Integer partitions, symmetric group characters and symmetric-function bridges."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .rationals import Rat, ZERO, ONE
from .series import SeriesRing, TruncatedSeries


class Partition:
    """Weakly decreasing positive parts; hashable and totally ordered."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in ps):
            raise ValueError("parts must be positive")
        self.parts = ps

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def colength(self) -> int:
        return self.weight - self.length

    def multiplicities(self) -> dict:
        m = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        w = self.parts[0]
        return Partition(sum(1 for p in self.parts if p > i) for i in range(w))

    def cells(self):
        """(i, j) cells of the Young diagram, 0-based rows/cols."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)

    def contents(self):
        return [j - i for (i, j) in self.cells()]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __le__(self, other):
        return self == other or self < other

    def __repr__(self):
        return "Partition(%s)" % (list(self.parts),)

    def to_json(self):
        return list(self.parts)


EMPTY = Partition()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, reverse-lex within fixed weight (deterministic)."""
    if n < 0:
        return ()
    if n == 0:
        return (EMPTY,)
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rem, maxpart), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int):
    for k in range(n + 1):
        yield from partitions_of(k)


def hook_product(la: Partition) -> int:
    """Product of hook lengths over the cells of la."""
    ps = la.parts
    conj = la.conjugate().parts
    h = 1
    for i, p in enumerate(ps):
        for j in range(p):
            h *= (p - j) + (conj[j] - i) - 1
    return h


def z_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    for part, m in mu.multiplicities().items():
        z *= part**m * factorial(m)
    return z


def aut_order(la: Partition) -> int:
    a = 1
    for m in la.multiplicities().values():
        a *= factorial(m)
    return a


def dimension(la: Partition) -> int:
    return factorial(la.weight) // hook_product(la)


# -- Murnaghan-Nakayama characters -------------------------------------------


@lru_cache(maxsize=None)
def _mn(la: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not la else 0
    r = mu[0]
    rest = mu[1:]
    ell = len(la)
    beta = [la[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        # height = number of beta entries strictly between nb and b
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newla = tuple(
            p
            for k, c in enumerate(newbeta)
            if (p := c - (ell - 1 - k)) > 0
        )
        sign = -1 if height % 2 else 1
        total += sign * _mn(newla, rest)
    return total


def character(la: Partition, mu: Partition) -> int:
    """Irreducible character chi_la on the class of cycle type mu."""
    if la.weight != mu.weight:
        raise ValueError("weight mismatch: |la|=%d, |mu|=%d" % (la.weight, mu.weight))
    return _mn(la.parts, mu.parts)


class CharTable:
    """All characters of S_N, memoized; checks its own orthogonality on demand."""

    def __init__(self, N: int):
        self.N = N
        self.lambdas = partitions_of(N)

    def value(self, la: Partition, mu: Partition) -> int:
        return character(la, mu)

    def check_orthogonality(self) -> bool:
        for mu in self.lambdas:
            for nu in self.lambdas:
                s = sum(
                    character(la, mu) * character(la, nu) for la in self.lambdas
                )
                want = z_order(mu) if mu == nu else 0
                if s != want:
                    return False
        return True


# -- symmetric function values ------------------------------------------------


def monomial_m(la: Partition, c: list) -> object:
    """Value of the monomial symmetric function m_la at the finite list c."""
    ell = la.length
    if ell == 0:
        return ONE
    n = len(c)
    if ell > n:
        return ZERO
    total = ZERO
    # sum over ordered injections of parts into positions, then divide by |aut|
    def rec(k, used, prod):
        nonlocal total
        if k == ell:
            total += prod
            return
        for i in range(n):
            if used & (1 << i):
                continue
            ci = c[i]
            if not ci and la.parts[k] > 0:
                continue
            rec(k + 1, used | (1 << i), prod * ci ** la.parts[k])

    rec(0, 0, ONE)
    return total / Rat(aut_order(la))


def monomial_m_symbolic(la: Partition, ring: SeriesRing, var_names) -> TruncatedSeries:
    """m_la in the series ring over the listed variables."""
    ell = la.length
    if ell == 0:
        return ring.one()
    n = len(var_names)
    if ell > n:
        return ring.zero()
    seen = set()
    acc = ring.zero()

    def rec(k, used, expmap):
        nonlocal acc
        if k == ell:
            key = tuple(sorted(expmap.items()))
            if key not in seen:
                seen.add(key)
                acc = acc + ring.monomial(dict(expmap))
            return
        for i in range(n):
            if used & (1 << i):
                continue
            em = dict(expmap)
            em[var_names[i]] = em.get(var_names[i], 0) + la.parts[k]
            rec(k + 1, used | (1 << i), em)

    rec(0, 0, {})
    return acc


def elementary_from_roots(c: list, M: int | None = None) -> list:
    """Coefficients (g_1..g_M) of prod (1 + c_i z); g_0 = 1 implicit."""
    g = [ONE]
    for ci in c:
        g = [g[0]] + [g[k] + ci * g[k - 1] for k in range(1, len(g))] + [ci * g[-1]]
    out = g[1:]
    if M is not None:
        out = (out + [ZERO] * M)[:M]
    return out


def complete_h(j: int, ring: SeriesRing, t_names) -> TruncatedSeries:
    """h_j in the flow normalization: exp(sum t_i zeta^i) = sum h_j zeta^j."""
    if j < 0:
        return ring.zero()
    if j == 0:
        return ring.one()
    acc = ring.zero()
    for mu in partitions_of(j):
        if mu.length and mu.parts[0] > len(t_names):
            continue
        mono = {}
        for p in mu.parts:
            name = t_names[p - 1]
            mono[name] = mono.get(name, 0) + 1
        coef = Rat(1, aut_order(mu))
        acc = acc + ring.monomial(mono, coef)
    return acc


def h_of_scaled_s(j: int, ring: SeriesRing, s_values, beta="beta", sign=1):
    """h_j evaluated at t_i = sign * beta^-1 * s_i (s_i rational or symbolic name).

    s_values: list of length L whose entries are Rat (specialized) or str
    (series variable name).  Entries beyond L are zero.
    """
    if j < 0:
        return ring.zero()
    if j == 0:
        return ring.one()
    L = len(s_values)
    acc = ring.zero()
    for mu in partitions_of(j):
        if mu.length == 0 or mu.parts[0] > L:
            continue
        coef = Rat(1, aut_order(mu))
        if sign < 0 and mu.length % 2:
            coef = -coef
        mono = {beta: -mu.length}
        ok = True
        for p in mu.parts:
            sv = s_values[p - 1]
            if isinstance(sv, str):
                mono[sv] = mono.get(sv, 0) + 1
            else:
                if not sv:
                    ok = False
                    break
                coef = coef * sv
        if not ok:
            continue
        acc = acc + ring.monomial(mono, coef)
    return acc


def schur_in_p(la: Partition) -> dict:
    """Expansion s_la = sum_mu chi_la(mu) p_mu / z_mu as {mu: Rat}."""
    out = {}
    for mu in partitions_of(la.weight):
        chi = character(la, mu)
        if chi:
            out[mu] = Rat(chi, z_order(mu))
    return out


def power_p_in_schur(mu: Partition) -> dict:
    """Inverse bridge: p_mu = sum_la chi_la(mu) s_la as {la: int}."""
    out = {}
    for la in partitions_of(mu.weight):
        chi = character(la, mu)
        if chi:
            out[la] = chi
    return out


def merge_partitions(a: Partition, b: Partition) -> Partition:
    return Partition(a.parts + b.parts)
