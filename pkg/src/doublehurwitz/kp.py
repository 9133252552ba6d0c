"""Residual generating function of isolated singularities and its scaled KP
equation.

The tau function is assembled from scaled one-part Schur polynomials: with
s~_k the degree-k homogeneous part (weight of t_i is i) of
exp(-(t_1 + t_2 + ...)/psi),

    tau = 1 + xi s~_1 + xi (xi + psi) s~_2 + xi (xi + psi)(xi + 2 psi) s~_3 + ...

and the residual generating function is R = -(psi/xi) log tau.  Every
coefficient of log tau is divisible by xi, and after the division all negative
powers of psi cancel; both facts are asserted, not assumed.  R solves the
first scaled KP equation

    d2R/dt2^2 = 2 psi xi (d2R/dt1^2)^2 + (4/3) d2R/dt1dt3
                - (1/3) psi^2 d4R/dt1^4.

Here the t_k live in their own alphabet (weight k); psi is the only variable
anywhere in the package allowed temporary negative exponents, and they never
escape this module.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import aut_order, partitions_of
from .series import (
    PSI_VAR,
    XI_VAR,
    GradedSeries,
    Truncation,
    mono_from_vars,
    mono_weights,
    svar,
)


def scaled_schur(k: int, trunc: Truncation = None) -> GradedSeries:
    """s~_k: sum over partitions mu of k of (-1)^len(mu) psi^{-len(mu)} t_mu / |Aut mu|."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if trunc is None:
        trunc = Truncation(s_weight=k)
    terms: dict = {}
    if k == 0:
        return GradedSeries.one(trunc)
    for mu in partitions_of(k):
        ell = len(mu)
        mono = mono_from_vars([(svar(i), 1) for i in mu] + [(PSI_VAR, -ell)])
        terms[mono] = Fraction((-1) ** ell, aut_order(mu))
    return GradedSeries(trunc, terms)


def _rising_xi(k: int, trunc: Truncation) -> GradedSeries:
    """xi (xi + psi) (xi + 2 psi) ... (xi + (k-1) psi)."""
    prod = GradedSeries.one(trunc)
    for i in range(k):
        factor = GradedSeries(
            trunc,
            {
                mono_from_vars([(XI_VAR, 1)]): Fraction(1),
                mono_from_vars([(PSI_VAR, 1)]): Fraction(i),
            },
        )
        prod = prod * factor
    return prod


def tau_series(t_weight_bound: int) -> GradedSeries:
    """The tau function truncated at total t-weight t_weight_bound."""
    if t_weight_bound < 1:
        raise ValueError("bound must be >= 1")
    trunc = Truncation(s_weight=t_weight_bound)
    total = GradedSeries.one(trunc)
    for k in range(1, t_weight_bound + 1):
        total = total + _rising_xi(k, trunc) * scaled_schur(k, trunc)
    return total


def r_from_tau(tau: GradedSeries, require_polynomial: bool = True) -> GradedSeries:
    """R = -(psi/xi) log tau.

    Raises ValueError if some term of log tau is not divisible by xi, or (when
    require_polynomial) if a negative psi-power survives in R; either signals
    a wrong tau.
    """
    log_tau = tau.log()
    out: dict = {}
    for mono, coeff in log_tau.term_dict().items():
        exps = dict(mono)
        xi_e = exps.pop(XI_VAR, 0)
        if xi_e < 1:
            raise ValueError(f"log tau term {mono} is not divisible by xi")
        psi_e = exps.pop(PSI_VAR, 0) + 1  # the -psi prefactor
        if xi_e > 1:
            exps[XI_VAR] = xi_e - 1
        if psi_e != 0:
            exps[PSI_VAR] = psi_e
        new = tuple(sorted(exps.items()))
        out[new] = out.get(new, 0) - coeff
    result = GradedSeries(tau.truncation)
    result._terms = {m: c for m, c in out.items() if c != 0}
    if require_polynomial:
        for mono in result.term_dict():
            if dict(mono).get(PSI_VAR, 0) < 0:
                raise ValueError(f"negative psi power survives in R: {mono}")
    return result


def r_series(t_weight_bound: int) -> GradedSeries:
    """The residual generating function R, exact up to the t-weight bound."""
    return r_from_tau(tau_series(t_weight_bound))


def homogeneous_part(series: GradedSeries, t_weight: int) -> GradedSeries:
    """Terms of exact total t-weight (the s-alphabet grading)."""
    result = GradedSeries(series.truncation)
    result._terms = {
        m: c for m, c in series.term_dict().items() if mono_weights(m)[4] == t_weight
    }
    return result


def kp_residual_of(r: GradedSeries, t_weight_bound: int) -> GradedSeries:
    """LHS - RHS of the first scaled KP equation, truncated to the bound.

    The input r must be exact at least up to t_weight_bound + 4, since the
    equation involves fourth derivatives in t_1.
    """
    t1, t2, t3 = svar(1), svar(2), svar(3)
    d2_t2 = r.diff(t2).diff(t2)
    d2_t1 = r.diff(t1).diff(t1)
    d_t1_t3 = r.diff(t1).diff(t3)
    d4_t1 = d2_t1.diff(t1).diff(t1)
    psi_xi = GradedSeries.var(r.truncation, PSI_VAR) * GradedSeries.var(r.truncation, XI_VAR)
    psi_sq = GradedSeries.var(r.truncation, PSI_VAR, 2)
    residual = (
        d2_t2
        - psi_xi * (d2_t1 * d2_t1) * 2
        - d_t1_t3.scalar_mul(Fraction(4, 3))
        + (psi_sq * d4_t1).scalar_mul(Fraction(1, 3))
    )
    return residual.truncate(Truncation(s_weight=t_weight_bound))


def kp_residual(t_weight_bound: int) -> GradedSeries:
    """Residual of the first scaled KP equation; identically zero when the
    tau-function formula is right."""
    if t_weight_bound < 0:
        raise ValueError("bound must be nonnegative")
    r = r_series(t_weight_bound + 4)
    return kp_residual_of(r, t_weight_bound)
