"""Brute-force counting of transitive transposition factorizations in S_K.

A factorization of genus g and ramification type (lam, mu) is a list
(sigma, rho, tau_1, ..., tau_m) with sigma of cycle type lam, rho of cycle
type mu, m = len(lam) + len(mu) + 2g - 2 transpositions, product
rho tau_m ... tau_1 sigma = id, and the group generated by all entries
transitive.  This module enumerates them explicitly; it is deliberately
independent of the character-theoretic machinery it is used to validate, so it
is exponential and guarded by a hard resource budget.

Two normalizations are exposed:

* ``oracle_count``          -- raw count divided by K! (the literal count);
* ``oracle_count_calibrated`` -- literal count times |Aut lam| * |Aut mu|.

The calibrated value is the one consistent with reading Hurwitz numbers off
the generating function H: the coefficient of beta^m p_lam q_mu in H equals
calibrated / (m! |Aut lam| |Aut mu|) = literal / m!.  On (lam, mu) =
((2), (1,1)) the literal count is 1/2 while the H-coefficient forces 1; that
sentinel fixes the convention once and for all.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import aut_order, check_partition, class_size

MAX_DEGREE = 6
MAX_TRANSPOSITIONS = 6


class ResourceBudgetError(RuntimeError):
    """The requested enumeration exceeds the hard K/m budget."""


def cycle_type(perm: tuple) -> tuple:
    """Cycle type of a permutation given as a tuple (i -> perm[i])."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def perm_of_cycle_type(lam: tuple) -> tuple:
    """A concrete permutation with cycle type lam on {0, ..., |lam|-1}."""
    perm = []
    start = 0
    for part in lam:
        perm.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(perm)


def _genus_m(g: int, lam: tuple, mu: tuple) -> int:
    m = len(lam) + len(mu) + 2 * g - 2
    if m < 0:
        raise ValueError(f"no covers: m = {m} < 0 for g={g}, lam={lam}, mu={mu}")
    return m


def oracle_raw_count(g: int, lam, mu) -> int:
    """Number of transitive factorizations with sigma, rho ranging over the
    full conjugacy classes of types lam and mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    K = sum(lam)
    if K != sum(mu):
        raise ValueError("lam and mu must partition the same integer")
    if K == 0:
        raise ValueError("degree must be positive")
    m = _genus_m(g, lam, mu)
    if K > MAX_DEGREE or m > MAX_TRANSPOSITIONS:
        raise ResourceBudgetError(
            f"oracle budget exceeded: K={K} (max {MAX_DEGREE}), m={m} (max {MAX_TRANSPOSITIONS})"
        )
    sigma = perm_of_cycle_type(lam)
    return class_size(lam) * _count_fixed_sigma(sigma, mu, m)


def _count_fixed_sigma(sigma: tuple, mu: tuple, m: int) -> int:
    """Count factorizations with this exact sigma (conjugation makes the count
    constant on the class)."""
    K = len(sigma)
    transpositions = [(a, b) for a in range(K) for b in range(a + 1, K)]

    # Union-find over the orbits of <sigma, tau_1, ..., tau_j>, with rollback.
    parent = list(range(K))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    comp_count = K
    for i in range(K):
        ra, rb = find(i), find(sigma[i])
        if ra != rb:
            parent[ra] = rb
            comp_count -= 1

    pi = list(sigma)  # running product tau_j ... tau_1 sigma
    pi_inv = [0] * K
    for i, v in enumerate(pi):
        pi_inv[v] = i

    count = 0

    def leaf_ok() -> bool:
        return comp_count == 1 and cycle_type(tuple(pi)) == mu

    def dfs(remaining: int):
        nonlocal comp_count, count
        if remaining == 0:
            if leaf_ok():
                count += 1
            return
        if comp_count - 1 > remaining:
            return  # too few transpositions left to reach transitivity
        for a, b in transpositions:
            ia, ib = pi_inv[a], pi_inv[b]
            pi[ia], pi[ib] = b, a
            pi_inv[a], pi_inv[b] = ib, ia
            ra, rb = find(a), find(b)
            merged = ra != rb
            if merged:
                parent[ra] = rb
                comp_count -= 1
            dfs(remaining - 1)
            if merged:
                parent[ra] = ra
                comp_count += 1
            pi[ia], pi[ib] = a, b
            pi_inv[a], pi_inv[b] = ia, ib

    dfs(m)
    return count


def oracle_count(g: int, lam, mu) -> Fraction:
    """Literal normalization: transitive factorization count divided by K!."""
    lam = check_partition(lam)
    return Fraction(oracle_raw_count(g, lam, mu), factorial(sum(lam)))


def oracle_count_calibrated(g: int, lam, mu) -> Fraction:
    """Literal count times |Aut lam| |Aut mu| (the generating-function convention)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    return oracle_count(g, lam, mu) * aut_order(lam) * aut_order(mu)
