from fractions import Fraction
from math import factorial

import pytest

from doublehurwitz.partitions import partitions_of, zee
from doublehurwitz.series import Truncation, mono_from_vars, pvar
from doublehurwitz.symgroup import (
    CharTable,
    central_weight,
    mn_character,
    schur_in_power_sums,
)


def hook_length_dimension(lam):
    """Independent dimension formula: |lam|! / product of hook lengths."""
    if not lam:
        return 1
    cols = [0] * lam[0]
    for row in lam:
        for j in range(row):
            cols[j] += 1
    dim = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            dim //= (row - j) + (cols[j] - i) - 1
    return dim


def content_sum(lam):
    return sum(j - i for i, row in enumerate(lam) for j in range(row))


def test_character_examples():
    assert mn_character((2,), (2,)) == 1
    assert mn_character((1, 1), (2,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (3,))


def test_dimensions_match_hook_length_formula():
    for K in range(1, 8):
        ones = tuple([1] * K)
        for lam in partitions_of(K):
            assert mn_character(lam, ones) == hook_length_dimension(lam)


def test_char_table_orthogonality():
    for K in range(1, 7):
        assert CharTable.build(K).check_orthogonality()


def test_char_table_cache_round_trip(tmp_path):
    table = CharTable.load_or_build(tmp_path, 4)
    assert CharTable.cache_path(tmp_path, 4).exists()
    again = CharTable.load_or_build(tmp_path, 4)
    assert again.values == table.values
    assert again.chi((2, 1, 1), (4,)) == mn_character((2, 1, 1), (4,))


def test_schur_examples():
    tr = Truncation(p_weight=4)
    p1 = mono_from_vars([(pvar(1), 1)])
    p1sq = mono_from_vars([(pvar(1), 2)])
    p2 = mono_from_vars([(pvar(2), 1)])
    assert schur_in_power_sums((1,), tr).term_dict() == {p1: Fraction(1)}
    assert schur_in_power_sums((2,), tr).term_dict() == {
        p1sq: Fraction(1, 2),
        p2: Fraction(1, 2),
    }
    assert schur_in_power_sums((1, 1), tr).term_dict() == {
        p1sq: Fraction(1, 2),
        p2: Fraction(-1, 2),
    }
    assert schur_in_power_sums((), tr).term_dict() == {(): Fraction(1)}


def test_schur_dimension_normalization():
    # coefficient of p_1^K in s_lam is dim(lam)/K!
    tr = Truncation(p_weight=6)
    for K in range(1, 7):
        for lam in partitions_of(K):
            coeff = schur_in_power_sums(lam, tr).coefficient(mono_from_vars([(pvar(1), K)]))
            assert coeff == Fraction(hook_length_dimension(lam), factorial(K))


def test_central_weight_examples():
    assert central_weight((1,)) == 0
    assert central_weight((2,)) == 1
    assert central_weight((1, 1)) == -1


def test_central_weight_equals_content_sum_and_integrality():
    for K in range(1, 13):
        for lam in partitions_of(K):
            w = central_weight(lam)
            assert w == content_sum(lam)
            assert (2 * w).denominator == 1


def test_zee_matches_character_normalization():
    # column orthogonality at mu = mu' gives sum_lam chi^2 = z_mu
    for K in range(1, 6):
        for mu in partitions_of(K):
            total = sum(mn_character(lam, mu) ** 2 for lam in partitions_of(K))
            assert total == zee(mu)
