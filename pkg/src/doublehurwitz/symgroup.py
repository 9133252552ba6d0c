"""Symmetric group characters, Schur polynomials in power sums, and the
cut-and-join eigenvalues.

Characters are computed by the Murnaghan-Nakayama rule on first-column hook
lengths (beta-sets): removing a border strip of size s from lambda is the same
as replacing some beta-number b by b - s, with sign (-1)^(number of
beta-numbers jumped over).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .partitions import check_partition, partitions_of, zee
from .series import GradedSeries, Truncation, mono_from_vars, pvar, qvar


@lru_cache(maxsize=None)
def mn_character(lam: tuple, mu: tuple) -> int:
    """Irreducible character chi^lam_mu of the symmetric group S_{|lam|}.

    Both arguments are partitions of the same integer; raises ValueError
    otherwise.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| = {sum(lam)} differs from |mu| = {sum(mu)}")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1  # lam is empty too (sizes agree)
    strip = mu[0]
    rest = mu[1:]
    ell = len(lam)
    betas = [lam[i] + ell - 1 - i for i in range(ell)]  # strictly decreasing
    beta_set = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for c in betas if nb < c < b)
        new = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(v - (ell - 1 - j) for j, v in enumerate(new))
        new_lam = tuple(v for v in new_lam if v > 0)
        total += (-1) ** jumped * _mn(new_lam, rest)
    return total


class CharTable:
    """All character values chi^lam_mu for partitions of a fixed K."""

    def __init__(self, K: int, values: dict):
        self.K = K
        self.values = values  # (lam, mu) -> int

    @staticmethod
    def build(K: int) -> "CharTable":
        parts = partitions_of(K)
        values = {(lam, mu): mn_character(lam, mu) for lam in parts for mu in parts}
        return CharTable(K, values)

    def chi(self, lam: tuple, mu: tuple) -> int:
        return self.values[(check_partition(lam), check_partition(mu))]

    def check_orthogonality(self) -> bool:
        """Row and column orthogonality with the z_mu class weights."""
        parts = partitions_of(self.K)
        for mu in parts:
            for nu in parts:
                col = sum(self.values[(lam, mu)] * self.values[(lam, nu)] for lam in parts)
                if col != (zee(mu) if mu == nu else 0):
                    return False
        for lam in parts:
            for rho in parts:
                row = sum(
                    Fraction(self.values[(lam, mu)] * self.values[(rho, mu)], zee(mu))
                    for mu in parts
                )
                if row != (1 if lam == rho else 0):
                    return False
        return True

    # -- JSON cache (keyed by K) -------------------------------------------

    def to_json_dict(self) -> dict:
        entries = [
            {"lam": list(lam), "mu": list(mu), "chi": v}
            for (lam, mu), v in sorted(self.values.items())
        ]
        return {"K": self.K, "values": entries}

    @staticmethod
    def from_json_dict(data: dict) -> "CharTable":
        values = {
            (tuple(e["lam"]), tuple(e["mu"])): int(e["chi"]) for e in data["values"]
        }
        return CharTable(int(data["K"]), values)

    @staticmethod
    def cache_path(cache_dir, K: int) -> Path:
        return Path(cache_dir) / f"chartable_K{K}.json"

    def save(self, cache_dir) -> Path:
        path = CharTable.cache_path(cache_dir, self.K)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_json_dict(), indent=None, sort_keys=True))
        return path

    @staticmethod
    def load_or_build(cache_dir, K: int) -> "CharTable":
        path = CharTable.cache_path(cache_dir, K)
        if path.exists():
            return CharTable.from_json_dict(json.loads(path.read_text()))
        table = CharTable.build(K)
        table.save(cache_dir)
        return table


def schur_in_power_sums(
    lam: tuple, trunc: Truncation, alphabet: str = "p", chartable: "CharTable" = None
) -> GradedSeries:
    """Schur polynomial s_lam expanded in power sums:
    s_lam = sum over mu of chi^lam_mu p_mu / z_mu.

    The alphabet may be "p" or "q"; the empty partition gives the constant 1.
    Character values come from the given CharTable when one is supplied
    (e.g. loaded from the JSON cache), otherwise from the recursion.
    """
    lam = check_partition(lam)
    mk = pvar if alphabet == "p" else qvar
    terms: dict = {}
    for mu in partitions_of(sum(lam)):
        if not lam:
            chi = 1
        elif chartable is not None:
            chi = chartable.chi(lam, mu)
        else:
            chi = mn_character(lam, mu)
        if chi == 0:
            continue
        mono = mono_from_vars([(mk(part), 1) for part in mu])
        terms[mono] = terms.get(mono, 0) + Fraction(chi, zee(mu) if mu else 1)
    return GradedSeries(trunc, terms)


def central_weight(lam: tuple) -> Fraction:
    """Eigenvalue of the cut-and-join operator on s_lam:
    w(lam) = (1/2) sum_i ((lam_i - i + 1/2)^2 - (-i + 1/2)^2).

    Always an integer or half-integer times 2; equals the sum of the contents
    of the diagram of lam.
    """
    lam = check_partition(lam)
    half = Fraction(1, 2)
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        total += (part - i + half) ** 2 - (-i + half) ** 2
    return total * half
