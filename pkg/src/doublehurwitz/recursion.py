"""Multisingularity recursion: every generating series x_{lam,nu} as an exact
polynomial in the generators z_{d,r}.

A key is a multiset of pairs (lam_i, nu_i); x for an all-zero lam is the
closed-form initial value, and otherwise one entry (s+1, m) with s >= 0 is
rewritten by the coefficient form of the defining differential equation:

    x_{(s+1,m) u R} = x_{(s,m) u R} + s x_{(s,m+1) u R}
      - sum over labelled sub-multisets A of R, with
            l = m + nu(A) - |A| + 2 >= 1,   a = s + lam(A) >= l:
        multinomial(m + nu(A); m, nu_j for j in A) * (1/l!)
        * sum over assignments of R - A to l ordered blocks B_1..B_l
          sum over compositions a = s_1 + ... + s_l, s_i >= 1:
            prod_i s_i * x_{(s_i, 0) u B_i}.

Enumerating labelled copies of R's entries absorbs all multiset-automorphism
factors; the total lam-weight strictly drops on the right, so the recursion
terminates at the initial conditions.  Results are memoized in an
:class:`XTable` that can be persisted to JSON.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Optional

from .partitions import compositions, multinomial
from .zseries import ZPoly

# Stamp covering the normalization conventions baked into the table; bump it
# whenever those change so stale caches are rejected.
XTABLE_VERSION = "xtable-v1"

XKey = tuple  # sorted-descending tuple of (lam_i, nu_i) pairs


def make_xkey(pairs) -> XKey:
    """Canonical key: pairs sorted descending by (lam, nu)."""
    key = tuple(sorted(((int(a), int(b)) for a, b in pairs), reverse=True))
    if not key:
        raise ValueError("a key needs at least one pair")
    if any(a < 0 or b < 0 for a, b in key):
        raise ValueError(f"pair entries must be nonnegative: {key}")
    return key


def initial_x(nu) -> ZPoly:
    """Closed form for keys with all lam_i = 0:
    multinomial(|nu|; nu) * z_{|nu|, r} with r = len(nu)."""
    nu = tuple(int(v) for v in nu)
    if not nu:
        raise ValueError("nu must be nonempty")
    if any(v < 0 for v in nu):
        raise ValueError("nu entries must be nonnegative")
    return ZPoly.gen(sum(nu), len(nu)) * multinomial(nu)


class XTable:
    """Memoized recursion state: canonical key -> ZPoly, with provenance."""

    def __init__(self):
        self.entries: dict = {}
        self.provenance: dict = {}

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, key) -> Optional[ZPoly]:
        return self.entries.get(key)

    def store(self, key: XKey, value: ZPoly, rule: str):
        self.entries[key] = value
        self.provenance[key] = rule

    # -- persistence ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        items = []
        for key in sorted(self.entries):
            items.append(
                {
                    "key": [list(p) for p in key],
                    "poly": self.entries[key].to_json_list(),
                    "rule": self.provenance.get(key, ""),
                }
            )
        return {"version": XTABLE_VERSION, "entries": items}

    @staticmethod
    def from_json_dict(data: dict) -> "XTable":
        if data.get("version") != XTABLE_VERSION:
            raise ValueError(
                f"cache version {data.get('version')!r} does not match {XTABLE_VERSION!r}"
            )
        table = XTable()
        for item in data["entries"]:
            key = make_xkey(item["key"])
            table.entries[key] = ZPoly.from_json_list(item["poly"])
            table.provenance[key] = item.get("rule", "")
        return table

    def save(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_json_dict()))
        return path

    @staticmethod
    def load(path) -> "XTable":
        return XTable.from_json_dict(json.loads(Path(path).read_text()))


def _correction(s: int, m: int, rest: tuple, table: XTable) -> ZPoly:
    """The subtracted sum in the recursion for pivot (s+1, m) over rest."""
    total = ZPoly.zero()
    n = len(rest)
    for mask in range(1 << n):
        consumed = [rest[i] for i in range(n) if mask >> i & 1]
        others = [rest[i] for i in range(n) if not mask >> i & 1]
        nu_a = sum(p[1] for p in consumed)
        ell = m + nu_a - len(consumed) + 2
        if ell < 1:
            continue
        a = s + sum(p[0] for p in consumed)
        if a < ell:
            continue
        weight = Fraction(multinomial((m, *(p[1] for p in consumed))), factorial(ell))
        inner = ZPoly.zero()
        for blocks in itertools.product(range(ell), repeat=len(others)):
            groups = [[] for _ in range(ell)]
            for entry, b in zip(others, blocks):
                groups[b].append(entry)
            for sigma in compositions(a, ell, min_part=1):
                prod = ZPoly.constant(1)
                for s_i, group in zip(sigma, groups):
                    prod = prod * compute_x(make_xkey(group + [(s_i, 0)]), table) * s_i
                inner = inner + prod
        total = total + inner * weight
    return total


def compute_x(key, table: Optional[XTable] = None, pivot_index: Optional[int] = None) -> ZPoly:
    """The polynomial x for a key, memoized in the given table.

    ``pivot_index`` forces which entry gets rewritten (it must have lam >= 1);
    by default the largest (lam, nu) entry is used.  Any valid pivot yields
    the same value as a q-series, which is checked by the property suites.
    """
    key = make_xkey(key)
    if table is None:
        table = XTable()
    cached = table.get(key)
    if cached is not None and pivot_index is None:
        return cached

    if all(a == 0 for a, _ in key):
        value = initial_x(tuple(b for _, b in key))
        table.store(key, value, "initial")
        return value

    if pivot_index is None:
        pivot_i = 0  # canonical: keys are sorted descending, so entry 0 is max
    else:
        pivot_i = pivot_index
    lam_p, m = key[pivot_i]
    if lam_p < 1:
        raise ValueError(f"pivot {key[pivot_i]} must have lam >= 1")
    s = lam_p - 1
    rest = key[:pivot_i] + key[pivot_i + 1 :]

    value = compute_x(make_xkey(rest + ((s, m),)), table)
    if s:
        value = value + compute_x(make_xkey(rest + ((s, m + 1),)), table) * s
    value = value - _correction(s, m, rest, table)

    if pivot_index is None:
        table.store(key, value, f"pivot=({lam_p},{m})")
    return value


def h_poly(lam, table: Optional[XTable] = None) -> ZPoly:
    """h_lam as a polynomial in the generators: the key with nu = 0."""
    from .partitions import check_partition

    lam = check_partition(lam)
    if not lam:
        raise ValueError("lam must be nonempty")
    return compute_x(make_xkey((part, 0) for part in lam), table)


def keys_up_to(max_lam_weight: int, max_r: int, max_nu_weight: int) -> list:
    """All canonical keys with sum(lam) <= max_lam_weight, r <= max_r,
    sum(nu) <= max_nu_weight, in deterministic order."""
    pairs = [
        (a, b)
        for a in range(max_lam_weight + 1)
        for b in range(max_nu_weight + 1)
    ]
    seen = set()
    for r in range(1, max_r + 1):
        for combo in itertools.combinations_with_replacement(pairs, r):
            if sum(p[0] for p in combo) > max_lam_weight:
                continue
            if sum(p[1] for p in combo) > max_nu_weight:
                continue
            seen.add(make_xkey(combo))
    return sorted(seen)


def populate_table(
    max_lam_weight: int, max_r: int, max_nu_weight: int, table: Optional[XTable] = None
) -> XTable:
    """Fill a table with every key in the given ranges."""
    if table is None:
        table = XTable()
    for key in keys_up_to(max_lam_weight, max_r, max_nu_weight):
        compute_x(key, table)
    return table


# ---------------------------------------------------------------------------
# String and dilaton identities on the table entries
# ---------------------------------------------------------------------------


def string_identity_sides(rest: XKey, table: Optional[XTable] = None):
    """Both sides of the string equation read at the coefficient of rest.

    Appending a point with (lam, nu) = (0, 0) satisfies

        x_{(0,0) u R} = sum over entries (i, e) of R with e >= 1 of
                        x_{(R with that entry lowered to (i, e-1))}
                        + (sum_k k q_k d/dq_k) x_R,

    where the q-operator acts on polynomials in the generators through the
    Euler identities.  Returned as (lhs, rhs) ZPolys; they agree as q-series
    but not necessarily in polynomial form.
    """
    from .zseries import zpoly_weighted_euler

    rest = make_xkey(rest)
    lhs = compute_x(rest + ((0, 0),), table)
    rhs = zpoly_weighted_euler(compute_x(rest, table))
    for i, (a, b) in enumerate(rest):
        if b >= 1:
            lowered = rest[:i] + ((a, b - 1),) + rest[i + 1 :]
            rhs = rhs + compute_x(make_xkey(lowered), table)
    return lhs, rhs


def dilaton_identity_sides(rest: XKey, table: Optional[XTable] = None):
    """Both sides of the dilaton equation at the coefficient of rest:

        x_{(0,1) u R} = (r - 2) x_R + (sum_k q_k d/dq_k) x_R,

    the r coming from the Euler operator in the t-variables and the -2 from
    the equation itself."""
    from .zseries import zpoly_euler

    rest = make_xkey(rest)
    lhs = compute_x(rest + ((0, 1),), table)
    x_rest = compute_x(rest, table)
    rhs = zpoly_euler(x_rest) + x_rest * (len(rest) - 2)
    return lhs, rhs


def check_string_dilaton(
    max_lam_weight: int = 3,
    max_nu_weight: int = 2,
    max_r: int = 3,
    eval_q_weight: int = 8,
    table: Optional[XTable] = None,
):
    """Verify both identities on every key in range; equality is decided by
    evaluating the polynomials as q-series at eval_q_weight.

    Returns (ok, failures) with one entry per violated identity."""
    from .zseries import zpoly_eval

    if table is None:
        table = XTable()
    failures = []
    for rest in keys_up_to(max_lam_weight, max_r, max_nu_weight):
        for name, sides in (
            ("string", string_identity_sides),
            ("dilaton", dilaton_identity_sides),
        ):
            lhs, rhs = sides(rest, table)
            if lhs == rhs:
                continue
            if not zpoly_eval(lhs - rhs, eval_q_weight).is_zero():
                failures.append((name, rest))
    return not failures, failures
