from fractions import Fraction
from itertools import permutations, product

import pytest

from doublehurwitz.oracle import (
    ResourceBudgetError,
    cycle_type,
    oracle_count,
    oracle_count_calibrated,
    oracle_raw_count,
    perm_of_cycle_type,
)
from doublehurwitz.partitions import partitions_of


def naive_raw_count(g, lam, mu):
    """Fully independent enumeration: iterate every (sigma, rho, tau_1..tau_m)
    over the whole symmetric group, check the defining conditions directly."""
    K = sum(lam)
    m = len(lam) + len(mu) + 2 * g - 2
    perms = list(permutations(range(K)))
    transpositions = []
    for p in perms:
        if cycle_type(p) == tuple(sorted([2] + [1] * (K - 2), reverse=True)):
            transpositions.append(p)

    def compose(a, b):  # a after b
        return tuple(a[b[i]] for i in range(K))

    def transitive(gens):
        reach = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for gp in gens:
                y = gp[x]
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        return len(reach) == K

    count = 0
    for sigma in perms:
        if cycle_type(sigma) != lam:
            continue
        for taus in product(transpositions, repeat=m):
            prod_perm = sigma
            for t in taus:
                prod_perm = compose(t, prod_perm)
            # rho is forced: rho * tau_m ... tau_1 sigma = id
            rho = tuple(sorted(range(K), key=lambda i: prod_perm[i]))
            if cycle_type(rho) != mu:
                continue
            if transitive((sigma, rho) + taus):
                count += 1
    return count


def test_perm_of_cycle_type():
    assert cycle_type(perm_of_cycle_type((3, 2, 1))) == (3, 2, 1)
    assert perm_of_cycle_type((2,)) == (1, 0)


def test_oracle_trivial_identity_cover():
    assert oracle_count(0, (1,), (1,)) == 1


def test_oracle_degree_two():
    assert oracle_count(0, (2,), (2,)) == Fraction(1, 2)
    assert oracle_count(0, (2,), (1, 1)) == Fraction(1, 2)


def test_oracle_matches_naive_enumeration():
    for K in range(1, 4):
        for lam in partitions_of(K):
            for mu in partitions_of(K):
                for g in range(0, 2):
                    m = len(lam) + len(mu) + 2 * g - 2
                    if m < 0 or m > 3:
                        continue
                    assert oracle_raw_count(g, lam, mu) == naive_raw_count(g, lam, mu), (
                        g,
                        lam,
                        mu,
                    )


def test_oracle_symmetry():
    for K in range(1, 5):
        for lam in partitions_of(K):
            for mu in partitions_of(K):
                for g in (0, 1):
                    m = len(lam) + len(mu) + 2 * g - 2
                    if m < 0 or m > 4:
                        continue
                    assert oracle_count(g, lam, mu) == oracle_count(g, mu, lam)


def test_calibrated_sentinel():
    # the conventions anchor: literal 1/2 on ((2),(1,1)), calibrated 1
    assert oracle_count(0, (2,), (1, 1)) == Fraction(1, 2)
    assert oracle_count_calibrated(0, (2,), (1, 1)) == 1
    assert oracle_count_calibrated(0, (1, 1), (2,)) == 1


def test_known_one_part_values():
    # polynomial covers: h with lam = mu = (K) and m = 0 counts z -> z^K once
    for K in range(1, 6):
        assert oracle_count(0, (K,), (K,)) == Fraction(1, K)


def test_budget_errors():
    with pytest.raises(ResourceBudgetError):
        oracle_raw_count(0, (7,), (7,))
    with pytest.raises(ResourceBudgetError):
        oracle_raw_count(3, (2, 1), (3,))  # m = 9


def test_bad_inputs():
    with pytest.raises(ValueError):
        oracle_count(0, (2,), (3,))
    with pytest.raises(ValueError):
        oracle_count(-1, (1,), (1,))  # m = -2 < 0
