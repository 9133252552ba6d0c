"""Verification suites: every structural identity in the package, bundled
into named, deterministic pass/fail reports.

Suite ids (fixed, consumed by the CLI):

* paper-examples      -- golden h-polynomials and the 1/k degree coefficients
* triple-agreement    -- oracle vs cut-and-join vs character formula,
                         plus the eigenbasis property of the Schur basis
* string-dilaton      -- string/dilaton identities on recursion-table keys
* psi-string-dilaton  -- same identities for the correction series Psi
* eqzred              -- Euler-operator identities on the generators z_{d,r}
* kp                  -- residual function: displayed parts, polynomiality,
                         and the first scaled KP equation
* pivot-independence  -- recursion pivot freedom and reduced-vs-full agreement
* bridge              -- recursion output equals the classical q-series
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .cutjoin import (
    cut_join_apply,
    evolve,
    frobenius_eH,
    h_lambda_series,
)
from .golden import GOLDEN_H_POLYS
from .kp import homogeneous_part, kp_residual, r_series
from .oracle import oracle_count, oracle_count_calibrated
from .partitions import aut_order, partitions_of
from .recursion import (
    XTable,
    check_string_dilaton,
    compute_x,
    h_poly,
    keys_up_to,
)
from .reduced import ReducedRecursion, is_reduced_key
from .series import (
    BETA_VAR,
    GradedSeries,
    PSI_VAR,
    Truncation,
    XI_VAR,
    mono_from_vars,
    pvar,
    qvar,
    svar,
)
from .symgroup import central_weight, schur_in_power_sums
from .zseries import check_eqzred, check_psi_string_dilaton, zpoly_eval, zpoly_values_equal


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append(CheckResult(name, "pass" if ok else "fail", detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------


def suite_paper_examples(eval_q_weight: int = 10) -> SuiteReport:
    """The seven golden h-polynomials, plus the 1/k special-degree values."""
    report = SuiteReport("paper-examples")
    table = XTable()
    for lam in sorted(GOLDEN_H_POLYS, key=lambda t: (sum(t), t)):
        computed = h_poly(lam, table)
        expected = GOLDEN_H_POLYS[lam]
        exact = computed == expected
        series_match = zpoly_values_equal(computed, expected, eval_q_weight)
        detail = "exact polynomial match" if exact else (
            "forms differ but q-series agree" if series_match else
            f"MISMATCH: computed {computed.pretty()} vs expected {expected.pretty()}"
        )
        report.add(f"h_{lam}", series_match, detail)
    for k in range(1, 7):
        coeff = zpoly_eval(h_poly((k,), table), k).coefficient(
            mono_from_vars([(qvar(k), 1)])
        )
        report.add(
            f"degree-coefficient q_{k} of h_({k},) equals 1/{k}",
            coeff == Fraction(1, k),
            f"got {coeff}",
        )
    return report


def suite_triple_agreement(max_K: int = 4, max_m: int = 4) -> SuiteReport:
    """Calibrated oracle vs generating-function coefficients, the sentinel,
    the two-formula identity, and the eigenbasis property."""
    report = SuiteReport("triple-agreement")

    sentinel_lit = oracle_count(0, (2,), (1, 1))
    sentinel_cal = oracle_count_calibrated(0, (2,), (1, 1))
    report.add(
        "sentinel ((2),(1,1)): literal 1/2, calibrated 1",
        sentinel_lit == Fraction(1, 2) and sentinel_cal == 1,
        f"literal={sentinel_lit}, calibrated={sentinel_cal}",
    )

    H = evolve(max_K, max_m).H
    mismatches = []
    checked = 0
    for K in range(1, max_K + 1):
        for lam in partitions_of(K):
            for mu in partitions_of(K):
                for m in range(0, max_m + 1):
                    two_g = m - len(lam) - len(mu) + 2
                    if two_g < 0 or two_g % 2:
                        continue
                    g = two_g // 2
                    mono = mono_from_vars(
                        [(pvar(i), 1) for i in lam]
                        + [(qvar(i), 1) for i in mu]
                        + ([(BETA_VAR, m)] if m else [])
                    )
                    lhs = H.coefficient(mono) * factorial(m) * aut_order(lam) * aut_order(mu)
                    rhs = oracle_count_calibrated(g, lam, mu)
                    checked += 1
                    if lhs != rhs:
                        mismatches.append((g, lam, mu, lhs, rhs))
    report.add(
        f"H-coefficients match calibrated oracle (K<={max_K}, m<={max_m})",
        not mismatches,
        f"{checked} coefficients checked" if not mismatches else f"mismatches: {mismatches}",
    )

    same = evolve(4, 4).eH == frobenius_eH(4, 4)
    report.add("evolution and character formula agree (q<=4, beta<=4)", same)

    bad = []
    for k in range(1, 7):
        for lam in partitions_of(k):
            trunc = Truncation(p_weight=k)
            s = schur_in_power_sums(lam, trunc)
            if cut_join_apply(s) != s.scalar_mul(central_weight(lam)):
                bad.append(lam)
    report.add(
        "Schur polynomials are cut-and-join eigenvectors (|lam|<=6)",
        not bad,
        str(bad) if bad else "",
    )
    return report


def suite_string_dilaton(table: Optional[XTable] = None) -> SuiteReport:
    report = SuiteReport("string-dilaton")
    ok, failures = check_string_dilaton(3, 2, 3, eval_q_weight=8, table=table or XTable())
    strings = [k for n, k in failures if n == "string"]
    dilatons = [k for n, k in failures if n == "dilaton"]
    report.add(
        "string equation on keys (sum lam<=3, sum nu<=2, r<=3)",
        not strings,
        str(strings) if strings else "",
    )
    report.add("dilaton equation on same keys", not dilatons, str(dilatons) if dilatons else "")
    return report


def suite_psi_string_dilaton(max_a: int = 3, max_ell: int = 4) -> SuiteReport:
    report = SuiteReport("psi-string-dilaton")
    for a in range(max_a + 1):
        for ell in range(1, max_ell + 1):
            ok, detail = check_psi_string_dilaton(a, ell, a + ell + 8)
            report.add(f"Psi_({a},{ell})", ok, detail)
    return report


def suite_eqzred(max_d: int = 3, max_r: int = 3, q_weight: int = 8) -> SuiteReport:
    report = SuiteReport("eqzred")
    for d in range(max_d + 1):
        for r in range(1, max_r + 1):
            ok, detail = check_eqzred(d, r, q_weight)
            report.add(f"z_({d},{r})", ok, detail)
    return report


def suite_kp() -> SuiteReport:
    report = SuiteReport("kp")
    try:
        r8 = r_series(8)
    except ValueError as exc:
        report.add("R is polynomial in psi and xi up to t-weight 8", False, str(exc))
        return report
    report.add("R is polynomial in psi and xi up to t-weight 8", True)

    trunc = r8.truncation
    t1 = GradedSeries.var(trunc, svar(1))
    t2 = GradedSeries.var(trunc, svar(2))
    t3 = GradedSeries.var(trunc, svar(3))
    psi = GradedSeries.var(trunc, PSI_VAR)
    xi = GradedSeries.var(trunc, XI_VAR)
    expected = {
        1: t1,
        2: t1 * t1 * Fraction(-1, 2) + (xi + psi) * t2,
        3: t1 * t1 * t1 * Fraction(1, 3) - (xi + psi) * t1 * t2 * 2
        + (xi + psi) * (xi + psi * 2) * t3,
    }
    for d, series in expected.items():
        got = homogeneous_part(r8, d)
        report.add(f"R degree-{d} part", got == series, got.pretty() if got != series else "")

    residual = kp_residual(6)
    report.add(
        "first scaled KP equation holds up to t-weight 6",
        residual.is_zero(),
        "" if residual.is_zero() else f"first offender: {residual.terms()[0]}",
    )
    return report


def suite_pivot_independence(
    max_lam_weight: int = 5, max_r: int = 3, max_nu_weight: int = 2, eval_q_weight: int = 10
) -> SuiteReport:
    """Pivot freedom of the recursion and agreement with the reduced engine."""
    report = SuiteReport("pivot-independence")
    table = XTable()
    keys = keys_up_to(max_lam_weight, max_r, max_nu_weight)

    pivot_bad = []
    for key in keys:
        base = compute_x(key, table)
        for i in range(1, len(key)):
            if key[i][0] < 1 or key[i] == key[0]:
                continue
            alt = compute_x(key, table, pivot_index=i)
            if not zpoly_values_equal(alt, base, eval_q_weight):
                pivot_bad.append((key, key[i]))
    report.add(
        f"pivot independence on {len(keys)} keys (sum lam<={max_lam_weight}, r<={max_r})",
        not pivot_bad,
        str(pivot_bad) if pivot_bad else "",
    )

    reduced = ReducedRecursion()
    red_bad = []
    exact_matches = 0
    compared = 0
    for key in keys:
        if not is_reduced_key(key):
            continue
        compared += 1
        full = compute_x(key, table)
        red = reduced.x_value(key)
        if red == full:
            exact_matches += 1
        if not zpoly_values_equal(red, full, eval_q_weight):
            red_bad.append(key)
    report.add(
        f"reduced-vs-full agreement on {compared} representable keys",
        not red_bad,
        f"{exact_matches}/{compared} agree in exact polynomial form" if not red_bad else str(red_bad),
    )
    return report


def suite_bridge(max_weight: int = 6, max_len: int = 3, q_weight: int = 8) -> SuiteReport:
    """Recursion values evaluated as q-series equal the classical computation."""
    report = SuiteReport("bridge")
    table = XTable()
    for k in range(1, max_weight + 1):
        for lam in partitions_of(k):
            if len(lam) > max_len:
                continue
            classical = h_lambda_series(lam, q_weight)
            recursive = zpoly_eval(h_poly(lam, table), q_weight)
            ok = classical == recursive
            detail = ""
            if not ok:
                diff = (classical - recursive).terms()
                detail = f"first differing coefficient: {diff[0]}"
            report.add(f"h_{lam}", ok, detail)
    return report


SUITES = {
    "paper-examples": suite_paper_examples,
    "triple-agreement": suite_triple_agreement,
    "string-dilaton": suite_string_dilaton,
    "psi-string-dilaton": suite_psi_string_dilaton,
    "eqzred": suite_eqzred,
    "kp": suite_kp,
    "pivot-independence": suite_pivot_independence,
    "bridge": suite_bridge,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
