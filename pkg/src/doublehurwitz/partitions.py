"""Integer partitions, compositions, and exact combinatorial coefficients.

Partitions are plain tuples of positive integers in weakly decreasing order.
All values returned here are exact (``int`` or ``fractions.Fraction``); every
function is pure and safe for concurrent use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Optional

Partition = tuple


def check_partition(parts) -> Partition:
    """Validate and canonicalize a partition given as any iterable of ints.

    Parts must be positive; the result is sorted weakly decreasing.
    """
    lam = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive, got {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> tuple:
    """All partitions of n, in reverse-lexicographic order.

    The order is the usual one: first part decreasing, ties broken
    recursively, e.g. 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    If max_part is given, only partitions with parts <= max_part appear.

    >>> partitions_of(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    top = n if max_part is None else min(n, max_part)
    out = []
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam: Partition) -> dict:
    """Map part value -> multiplicity."""
    mult: dict = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def aut_order(lam: Partition) -> int:
    """Order of the group permuting equal parts: product of multiplicity factorials.

    >>> aut_order((4, 3, 3, 1, 1, 1))
    12
    """
    out = 1
    for m in multiplicities(lam).values():
        out *= factorial(m)
    return out


def zee(lam: Partition) -> int:
    """Centralizer order z_lam = prod_i i^{m_i} m_i! of a permutation of cycle type lam."""
    out = 1
    for v, m in multiplicities(lam).items():
        out *= v**m * factorial(m)
    return out


def class_size(lam: Partition) -> int:
    """Number of permutations in S_{|lam|} with cycle type lam (= |lam|!/z_lam)."""
    if not lam:
        raise ValueError("class_size requires a nonempty partition")
    return factorial(sum(lam)) // zee(lam)


def gen_binomial(a: int, d: int) -> Fraction:
    """Generalized binomial coefficient a(a-1)...(a-d+1)/d! for any integer a.

    Defined by the falling factorial, so the top argument may be negative:
    gen_binomial(-1, 2) == 1, and gen_binomial(a, 0) == 1 for every a.
    """
    if d < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for i in range(d):
        num *= a - i
    return Fraction(num, factorial(d))


def multinomial(nu) -> int:
    """Multinomial coefficient (sum nu)! / prod nu_i!.

    >>> multinomial((2, 1))
    3
    """
    nu = tuple(int(v) for v in nu)
    if any(v < 0 for v in nu):
        raise ValueError("multinomial entries must be nonnegative")
    out = factorial(sum(nu))
    for v in nu:
        out //= factorial(v)
    return out


def compositions(total: int, num_parts: int, min_part: int = 0) -> Iterator[tuple]:
    """Ordered tuples of num_parts integers >= min_part summing to total."""
    if num_parts == 0:
        if total == 0:
            yield ()
        return
    if num_parts == 1:
        if total >= min_part:
            yield (total,)
        return
    for first in range(min_part, total - min_part * (num_parts - 1) + 1):
        for rest in compositions(total - first, num_parts - 1, min_part):
            yield (first,) + rest


def partition_to_json(lam: Partition) -> list:
    return list(lam)


def partition_from_json(data) -> Partition:
    return check_partition(data)


def fraction_to_str(x) -> str:
    """Serialize an exact rational as "num/den" (always with denominator)."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def fraction_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    if den == "":
        den = "1"
    return Fraction(int(num), int(den))
