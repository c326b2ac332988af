"""Hypergeometric tau function as exact truncated data.

Tables are kept in the p-basis: a tau-like element is a dict mapping
(mu, nu) partition pairs to beta-polynomials {d: Rat}, the coefficient of
gamma^{|mu|} p_mu(t) p_nu(s).  T_j data is stored multiplicatively as rho_j
(logs of rationals are transcendental, every identity using e^{T_j} has a
multiplicative form).
"""

from __future__ import annotations

from functools import lru_cache

from .rationals import Rat, ZERO, ONE
from .partitions import Partition, partitions_of, character, z_order
from .hurwitz import WeightConfig, HurwitzError
from .series import SeriesRing, TruncatedSeries


class TauError(Exception):
    pass


# -- beta-polynomials as sparse dicts ------------------------------------------


def bp_mul(a: dict, b: dict) -> dict:
    out = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            s = out.get(d, ZERO) + ca * cb
            if s:
                out[d] = s
            elif d in out:
                del out[d]
    return out


def bp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, ZERO) + c
        if s:
            out[d] = s
        elif d in out:
            del out[d]
    return out


def bp_scale(a: dict, c) -> dict:
    if not c:
        return {}
    return {d: v * c for d, v in a.items()}


# -- content products and rho ----------------------------------------------------


def cell_factor(cfg: WeightConfig, content: int) -> dict:
    """G(content * beta) as a beta-polynomial."""
    out = {0: ONE}
    for k, gk in enumerate(cfg.g, start=1):
        c = gk * Rat(content) ** k
        if c:
            out[k] = out.get(k, ZERO) + c
    return out


def content_product(la: Partition, cfg: WeightConfig) -> dict:
    """r_la as a beta-polynomial: product of G((j - i) beta) over cells."""
    acc = {0: ONE}
    for (i, j) in la.cells():
        acc = bp_mul(acc, cell_factor(cfg, j - i))
    return acc


def rho(j: int, cfg: WeightConfig, ring: SeriesRing, gamma="gamma", beta="beta"):
    """rho_j = gamma^j prod_{i=1}^{j} G(i beta)  (inverse product for j < 0)."""
    acc = ring.monomial({gamma: j})
    if j >= 0:
        for i in range(1, j + 1):
            acc = acc * _G_beta_series(cfg, ring, i, beta)
    else:
        for i in range(0, -j):
            acc = acc * _G_beta_series(cfg, ring, -i, beta).inverse((beta,))
    return acc


def rho_inverse(j: int, cfg: WeightConfig, ring: SeriesRing, gamma="gamma", beta="beta"):
    """1/rho_j; polynomial for j <= 0, a truncated beta-series for j > 0."""
    acc = ring.monomial({gamma: -j})
    if j >= 0:
        for i in range(1, j + 1):
            acc = acc * _G_beta_series(cfg, ring, i, beta).inverse((beta,))
    else:
        for i in range(0, -j):
            acc = acc * _G_beta_series(cfg, ring, -i, beta)
    return acc


def _G_beta_series(cfg: WeightConfig, ring: SeriesRing, n: int, beta: str):
    """G(n beta) in the given ring."""
    acc = ring.one()
    for k, gk in enumerate(cfg.g, start=1):
        c = gk * Rat(n) ** k
        if c:
            acc = acc + ring.monomial({beta: k}, c)
    return acc


def T_data(cfg: WeightConfig, order: int, ring: SeriesRing):
    """rho_0..rho_order with the telescoping rho_j = gamma G(j beta) rho_{j-1}."""
    rhos = [rho(j, cfg, ring) for j in range(order + 1)]
    for j in range(1, order + 1):
        lhs = rhos[j]
        rhs = rhos[j - 1] * _G_beta_series(cfg, ring, j, "beta") * ring.monomial({"gamma": 1})
        if lhs != rhs:
            raise TauError("rho telescoping failed at j=%d" % j)
    return rhos


# -- tau tables --------------------------------------------------------------------


def tau_schur(cfg: WeightConfig) -> dict:
    """{la: beta-polynomial r_la} for |la| <= gamma_cap (gamma^{|la|} implied)."""
    out = {}
    for n in range(cfg.gamma_cap + 1):
        for la in partitions_of(n):
            out[la] = content_product(la, cfg)
    return out


@lru_cache(maxsize=None)
def _char_over_z(la: Partition, mu: Partition):
    return Rat(character(la, mu), z_order(mu))


def tau_p_basis(cfg: WeightConfig) -> dict:
    """{(mu, nu): beta-poly}; coefficient of beta^d is H^d_G(mu, nu)."""
    out = {}
    for n in range(cfg.gamma_cap + 1):
        lambdas = partitions_of(n)
        rlas = {la: content_product(la, cfg) for la in lambdas}
        for mu in lambdas:
            for nu in lambdas:
                acc = {}
                for la in lambdas:
                    cmu = _char_over_z(la, mu)
                    if not cmu:
                        continue
                    cnu = _char_over_z(la, nu)
                    if not cnu:
                        continue
                    acc = bp_add(acc, bp_scale(rlas[la], cmu * cnu))
                if acc:
                    out[(mu, nu)] = acc
    return out


def _p_algebra_mul(a: dict, b: dict, gamma_cap: int) -> dict:
    out = {}
    for (mua, nua), pa in a.items():
        wa = mua.weight
        for (mub, nub), pb in b.items():
            if wa + mub.weight > gamma_cap:
                continue
            key = (
                Partition(mua.parts + mub.parts),
                Partition(nua.parts + nub.parts),
            )
            prod = bp_mul(pa, pb)
            cur = out.get(key)
            out[key] = bp_add(cur, prod) if cur else prod
    return {k: v for k, v in out.items() if v}


def tau_connected(cfg: WeightConfig, table: dict | None = None) -> dict:
    """Formal log of the p-basis table; coefficients are connected H~^d_G."""
    if table is None:
        table = tau_p_basis(cfg)
    cap = cfg.gamma_cap
    empty = Partition()
    u = {k: dict(v) for k, v in table.items() if k[0].weight >= 1}
    acc = {}
    power = {(empty, empty): {0: ONE}}
    sign = 1
    for k in range(1, cap + 1):
        power = _p_algebra_mul(power, u, cap)
        if not power:
            break
        coef = Rat(sign, k)
        for key, bp in power.items():
            acc_cur = acc.get(key)
            scaled = bp_scale(bp, coef)
            acc[key] = bp_add(acc_cur, scaled) if acc_cur else scaled
        sign = -sign
    return {k: v for k, v in acc.items() if v}


def table_coefficient(table: dict, mu, nu, d: int):
    """Coefficient of beta^d gamma^{|mu|} p_mu(t) p_nu(s) in a table."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    nu = nu if isinstance(nu, Partition) else Partition(nu)
    bp = table.get((mu, nu))
    if not bp:
        return ZERO
    return bp.get(d, ZERO)
