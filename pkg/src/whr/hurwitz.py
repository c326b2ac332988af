"""Pure and weighted Hurwitz numbers by permutation oracle and character sums."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import factorial

from .rationals import Rat, ZERO, ONE, parse_rat
from .partitions import (
    Partition,
    partitions_of,
    hook_product,
    z_order,
    aut_order,
    character,
    monomial_m,
    monomial_m_symbolic,
    elementary_from_roots,
)
from .series import SeriesRing


class HurwitzError(Exception):
    pass


class OracleBoundExceeded(HurwitzError):
    pass


# -- permutations (tuples of images, composition left to right) ---------------


def perm_mul(p, q):
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_type(p) -> Partition:
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        parts.append(ln)
    return Partition(parts)


def perm_from_cycles(cycles, n):
    """Permutation from 1-based disjoint cycles, e.g. [(1,3,5),(2,4)]."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


@lru_cache(maxsize=None)
def conjugacy_class(N: int, mu: Partition) -> tuple:
    if mu.weight != N:
        raise HurwitzError("profile weight != N")
    return tuple(
        p for p in itertools.permutations(range(N)) if cycle_type(p) == mu
    )


def class_size(N: int, mu: Partition) -> int:
    return factorial(N) // z_order(mu)


def is_transitive(perms, N: int) -> bool:
    if N <= 1:
        return True
    parent = list(range(N))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    joined = N
    for p in perms:
        for i in range(N):
            j = p[i]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                joined -= 1
    return joined == 1


# -- configuration -------------------------------------------------------------


def _norm_s_entry(v):
    if isinstance(v, str):
        s = v.strip()
        if s and (s[0].isalpha()):
            return s  # symbolic name, e.g. "s1"
        return parse_rat(s)
    if v is None:
        return None
    return Rat(v)


@dataclass(frozen=True)
class WeightConfig:
    """Full parameter pack: weight polynomial G, flow polynomial data, caps."""

    M: int = 0
    c: tuple | None = None  # roots of G, or None when only coefficients known
    g: tuple = ()  # g_1..g_M with g_0 = 1 implicit
    L: int = 0
    s: tuple = ()  # length L; entries Rat or symbolic variable name
    gamma_cap: int = 6
    x_cap: int = 8
    t_cap: int = 6
    beta_floor: int = -16
    beta_cap: int = 16
    d_cap: int = 6
    oracle_bound: int = 6
    precision: int = 128

    @staticmethod
    def make(c=None, g=None, s=(), **kw) -> "WeightConfig":
        if (c is None) == (g is None):
            raise HurwitzError("exactly one of c (roots) or g (coefficients) required")
        if c is not None:
            c = tuple(Rat(x) for x in c)
            g = tuple(elementary_from_roots(list(c)))
        else:
            g = tuple(Rat(x) for x in g)
            c = None
        s = tuple(_norm_s_entry(v) for v in s)
        if any(v is None for v in s):
            raise HurwitzError("s entries must be rational or symbolic names")
        return WeightConfig(M=len(g), c=c, g=g, L=len(s), s=s, **kw)

    def with_caps(self, **kw) -> "WeightConfig":
        return replace(self, **kw)

    def g_full(self) -> list:
        """[g_0=1, g_1, ..., g_M]."""
        return [ONE] + list(self.g)

    def G_eval(self, z):
        """G(z) = 1 + g_1 z + ... + g_M z^M, for any z supporting + and *."""
        if not self.g:
            return z * 0 + ONE
        acc = z * 0 + self.g[-1]
        for gk in reversed(self.g[:-1]):
            acc = acc * z + gk
        return acc * z + ONE

    def s_symbol_names(self) -> list:
        return [v for v in self.s if isinstance(v, str)]

    def require_sL(self):
        if self.L == 0 or (not isinstance(self.s[-1], str) and not self.s[-1]):
            raise HurwitzError("curve operations require s_L != 0")


# -- branch data ----------------------------------------------------------------


@dataclass(frozen=True)
class BranchData:
    N: int
    profiles: tuple
    normalization: object = ONE

    @staticmethod
    def make(N, profiles, normalization=ONE) -> "BranchData":
        ps = tuple(p if isinstance(p, Partition) else Partition(p) for p in profiles)
        for p in ps:
            if p.weight != N:
                raise HurwitzError("profile %r does not have weight %d" % (p, N))
        return BranchData(N=N, profiles=ps, normalization=normalization)

    @property
    def euler_characteristic(self) -> int:
        return 2 * self.N - sum(p.colength for p in self.profiles)


# -- pure Hurwitz numbers --------------------------------------------------------


def pure_hurwitz_frobenius(b: BranchData):
    """Character sum  sum_la h_la^{k-2} prod chi_la(mu_i)/z_mu_i."""
    if not b.profiles:
        raise HurwitzError("empty profile list")
    k = len(b.profiles)
    total = ZERO
    for la in partitions_of(b.N):
        h = hook_product(la)
        term = Rat(h) ** (k - 2) if k >= 2 else Rat(1, h ** (2 - k))
        for mu in b.profiles:
            chi = character(la, mu)
            if not chi:
                term = ZERO
                break
            term = term * Rat(chi, z_order(mu))
        total += term
    return total


@lru_cache(maxsize=None)
def _factorization_count(N: int, profiles: tuple, connected: bool) -> int:
    """#{(h_1..h_k): h_i in C(mu_i), h_1...h_k = id [, transitive]}."""
    k = len(profiles)
    identity = tuple(range(N))
    if k == 0:
        return 1 if (not connected or N <= 1) else 0
    if k == 1:
        ok = profiles[0] == Partition([1] * N)
        if not ok:
            return 0
        return 1 if (not connected or N <= 1) else 0
    # reorder so the largest class is fixed to a representative and the
    # second largest is membership-checked; count is order-invariant.
    order = sorted(range(k), key=lambda i: class_size(N, profiles[i]), reverse=True)
    fixed, checked = order[0], order[1]
    loops = [i for i in order[2:]]
    rep = conjugacy_class(N, profiles[fixed])[0]
    target = profiles[checked]
    loop_classes = [conjugacy_class(N, profiles[i]) for i in loops]
    count = 0
    for hs in itertools.product(*loop_classes):
        prod = rep
        for h in hs:
            prod = perm_mul(prod, h)
        last = perm_inv(prod)
        if cycle_type(last) != target:
            continue
        if connected and not is_transitive((rep,) + hs + (last,), N):
            continue
        count += 1
    return count * class_size(N, profiles[fixed])


def pure_hurwitz_oracle(b: BranchData, connected: bool = False, bound: int | None = None):
    """Definitional count of identity factorizations, normalized by N!."""
    limit = bound if bound is not None else 6
    if b.N > limit:
        raise OracleBoundExceeded("N=%d exceeds oracle bound %d" % (b.N, limit))
    profiles = tuple(sorted(b.profiles))
    cnt = _factorization_count(b.N, profiles, connected)
    return Rat(cnt, factorial(b.N))


# -- weighted Hurwitz numbers ------------------------------------------------------


def genus_of(d: int, mu: Partition, nu: Partition) -> int:
    """2 - 2g = l(mu) + l(nu) - d."""
    chi = mu.length + nu.length - d
    if (2 - chi) % 2:
        raise HurwitzError("non-integer genus for d=%d, profiles %r, %r" % (d, mu, nu))
    return (2 - chi) // 2


def _nonidentity_partitions(N: int):
    return [p for p in partitions_of(N) if p.colength >= 1]


def _middle_multisets(N: int, d: int):
    """Multisets of non-identity partitions of N with total colength d."""
    opts = _nonidentity_partitions(N)
    out = []

    def rec(i, rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if i >= len(opts):
            return
        p = opts[i]
        cl = p.colength
        rec(i + 1, rem, acc)
        if cl <= rem:
            acc.append(p)
            rec(i, rem - cl, acc)
            acc.pop()

    rec(0, d, [])
    return out


def _multiset_weight_factor(profiles: tuple) -> Rat:
    """|aut(colength partition)| / prod (multiplicities of equal profiles)!."""
    la = Partition([p.colength for p in profiles])
    denom = 1
    mult = {}
    for p in profiles:
        mult[p] = mult.get(p, 0) + 1
    for m in mult.values():
        denom *= factorial(m)
    return Rat(aut_order(la), denom)


def weighted_hurwitz(
    cfg: WeightConfig,
    mu: Partition,
    nu: Partition,
    d: int,
    connected: bool = False,
    symbolic_c: bool = False,
    c_ring: SeriesRing | None = None,
):
    """H^d_G(mu, nu): weighted sum over extra branch profiles of total colength d.

    With symbolic_c the value is returned as a series in c1..cM over c_ring
    (built on demand); otherwise cfg.c must be set and a Rat is returned.
    """
    if mu.weight != nu.weight:
        raise HurwitzError("weight mismatch")
    if d < 0:
        raise HurwitzError("negative d")
    N = mu.weight
    if symbolic_c:
        if c_ring is None:
            names = ["c%d" % (i + 1) for i in range(cfg.M)]
            c_ring = SeriesRing(names, caps=(d,) * cfg.M)
        total = c_ring.zero()
    else:
        if cfg.c is None:
            raise HurwitzError("cfg.c unset; pass symbolic_c=True for polynomials in c")
        total = ZERO
    cvals = list(cfg.c) if cfg.c is not None else None
    for profiles in _middle_multisets(N, d):
        la = Partition([p.colength for p in profiles])
        if la.length > cfg.M:
            continue  # m_la vanishes with fewer than l(la) nonzero c's
        b = BranchData.make(N, profiles + (mu, nu))
        if connected:
            H = pure_hurwitz_oracle(b, connected=True, bound=cfg.oracle_bound)
        else:
            H = pure_hurwitz_frobenius(b)
        if not H:
            continue
        w = _multiset_weight_factor(profiles) * H
        if symbolic_c:
            mla = monomial_m_symbolic(la, c_ring, c_ring.vars)
            total = total + mla.scale(w)
        else:
            total += w * monomial_m(la, cvals)
    return total


# -- constellation census ----------------------------------------------------------


def constellation_census(cfg: WeightConfig, N: int, k: int, middle_filter=None):
    """Rows (profiles, count, genus, weight) over transitive (k+2)-factorizations.

    profiles = (mu, mu_1..mu_k, nu); count is the integer number of ordered
    transitive factorizations h_0 h_1 ... h_{k+1} = id with those cycle types;
    weight is the exact coefficient the row contributes to the connected
    generating function: count/N! * aut-ratio * m_la(c), tagged with the
    (gamma, beta, p_mu, p_nu) monomial data.
    """
    if N > cfg.oracle_bound:
        raise OracleBoundExceeded("N=%d exceeds oracle bound %d" % (N, cfg.oracle_bound))
    rows = []
    nonid = _nonidentity_partitions(N)
    middles = [
        m
        for m in itertools.combinations_with_replacement(nonid, k)
        if middle_filter is None or middle_filter(m)
    ]
    for mu in partitions_of(N):
        for nu in partitions_of(N):
            for mid in middles:
                d = sum(p.colength for p in mid)
                la = Partition([p.colength for p in mid])
                if la.length > cfg.M:
                    continue
                b = BranchData.make(N, (mu,) + mid + (nu,))
                cnt_rat = pure_hurwitz_oracle(b, connected=True, bound=cfg.oracle_bound)
                count = int(cnt_rat * factorial(N))
                if count == 0:
                    continue
                d_total = sum(p.colength for p in b.profiles)
                chi = 2 * N - d_total
                if chi % 2:
                    raise HurwitzError("Riemann-Hurwitz parity violated")
                genus = (2 - chi) // 2
                weight_coeff = (
                    cnt_rat
                    * _multiset_weight_factor(mid)
                    * (monomial_m(la, list(cfg.c)) if cfg.c is not None else ONE)
                )
                rows.append(
                    {
                        "mu": mu,
                        "middles": mid,
                        "nu": nu,
                        "count": count,
                        "d": d,
                        "genus": genus,
                        "weight_coeff": weight_coeff,
                        "weight_monomial": "gamma^%d beta^%d p%s(t) p%s(s)"
                        % (N, d, list(mu.parts), list(nu.parts)),
                    }
                )
    rows.sort(key=lambda r: (r["mu"].parts, r["nu"].parts, [p.parts for p in r["middles"]]))
    return rows
