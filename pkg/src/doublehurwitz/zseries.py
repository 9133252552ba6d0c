"""The generator series z_{d,r}(q), the polynomial ring they span, genus-0
psi-class intersection numbers, and the correction series Psi_{a,l}.

The closed form implemented by :func:`z_series` is

    z_{d,r}(q) = sum_{K,n} (1/n!) C(n+r-3, d) K^{n+r-3-d}
                 sum_{k_1+...+k_n=K} prod_i (k_i^{k_i}/k_i!) q_{k_i},

where C is the falling-factorial binomial (so tops may be negative) and
negative powers of K are exact rationals.  Every generating function produced
by the recursion engines is a polynomial in these series; :class:`ZPoly` is
that polynomial ring with formal generators indexed by (d, r).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Optional

from .partitions import (
    aut_order,
    gen_binomial,
    multinomial,
    partitions_of,
)
from .series import GradedSeries, Q, T, Truncation, mono_adjust, mono_from_vars, qvar, tvar


@lru_cache(maxsize=None)
def z_series(
    d: int,
    r: int,
    q_weight_bound: int,
    n_bound: Optional[int] = None,
    drop_negative_k_powers: bool = False,
) -> GradedSeries:
    """Exact truncated expansion of z_{d,r}(q).

    The ordered inner sum over k_1 + ... + k_n = K with its 1/n! collapses to
    a sum over partitions mu of K weighted by 1/|Aut mu|.  Terms with
    n + r - 3 < 0 (only possible for n = r = 1) are included via the
    falling-factorial binomial; ``drop_negative_k_powers`` zeroes the d >= 1
    ones among them for diagnostic comparison.
    """
    if d < 0 or r < 1 or q_weight_bound < 1:
        raise ValueError("need d >= 0, r >= 1, q_weight_bound >= 1")
    terms: dict = {}
    for K in range(1, q_weight_bound + 1):
        for mu in partitions_of(K):
            n = len(mu)
            if n_bound is not None and n > n_bound:
                continue
            e = n + r - 3
            if drop_negative_k_powers and e < 0 and d >= 1:
                continue
            binom = gen_binomial(e, d)
            if binom == 0:
                continue
            kpow = Fraction(K) ** (e - d)
            coeff = Fraction(binom, aut_order(mu)) * kpow
            for part in mu:
                coeff *= Fraction(part**part, factorial(part))
            if coeff == 0:
                continue
            mono = mono_from_vars([(qvar(part), 1) for part in mu])
            terms[mono] = terms.get(mono, 0) + coeff
    return GradedSeries(Truncation(q_weight=q_weight_bound), terms)


# ---------------------------------------------------------------------------
# ZPoly: exact polynomials in the formal generators z_{d,r}
# ---------------------------------------------------------------------------

ZGen = tuple  # (d, r)
ZKey = tuple  # sorted tuple of ZGen with multiplicity; () is the constant


def _as_coeff(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class ZPoly:
    """Polynomial with rational coefficients in the generators z_{d,r}.

    Keys are sorted tuples of (d, r) pairs (monomials in the generators);
    the empty tuple is the constant monomial.  Structural equality is exact
    form equality; since the z-series satisfy polynomial relations, use
    :func:`zpoly_eval` to decide mathematical equality of values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                c = _as_coeff(coeff)
                if c != 0:
                    self.terms[tuple(sorted(tuple(g) for g in key))] = c

    @staticmethod
    def zero() -> "ZPoly":
        return ZPoly()

    @staticmethod
    def one() -> "ZPoly":
        return ZPoly({(): 1})

    @staticmethod
    def constant(c) -> "ZPoly":
        return ZPoly({(): c})

    @staticmethod
    def gen(d: int, r: int) -> "ZPoly":
        if d < 0 or r < 1:
            raise ValueError("generator needs d >= 0, r >= 1")
        return ZPoly({((d, r),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(): _as_coeff(other)}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other) -> "ZPoly":
        if isinstance(other, (int, Fraction)):
            other = ZPoly.constant(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            c = out.get(key, 0) + coeff
            if c == 0:
                out.pop(key, None)
            else:
                out[key] = c
        result = ZPoly()
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "ZPoly":
        result = ZPoly()
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "ZPoly":
        return self + (-other if isinstance(other, ZPoly) else ZPoly.constant(-other))

    def __rsub__(self, other) -> "ZPoly":
        return (-self) + other

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, (int, Fraction)):
            result = ZPoly()
            if other != 0:
                result.terms = {k: c * other for k, c in self.terms.items()}
            return result
        if not isinstance(other, ZPoly):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                c = out.get(key, 0) + c1 * c2
                if c == 0:
                    out.pop(key, None)
                else:
                    out[key] = c
        result = ZPoly()
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZPoly":
        if n < 0:
            raise ValueError("negative power")
        result = ZPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def gen_degree(self) -> int:
        """Largest total degree, grading each z_{d,r} by d + r - 1."""
        if not self.terms:
            return 0
        return max(sum(d + r - 1 for d, r in key) for key in self.terms)

    def __repr__(self) -> str:
        return f"ZPoly({self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            if not key:
                chunks.append(str(coeff))
                continue
            gens: dict = {}
            for g in key:
                gens[g] = gens.get(g, 0) + 1
            body = "*".join(
                f"z_{{{d},{r}}}" + (f"^{e}" if e > 1 else "")
                for (d, r), e in sorted(gens.items())
            )
            if coeff == 1:
                chunks.append(body)
            elif coeff == -1:
                chunks.append(f"-{body}")
            else:
                cs = str(coeff) if coeff.denominator == 1 else f"({coeff})"
                chunks.append(f"{cs}*{body}")
        return " + ".join(chunks).replace("+ -", "- ")

    # -- JSON ----------------------------------------------------------------

    def to_json_list(self) -> list:
        out = []
        for key in sorted(self.terms):
            c = self.terms[key]
            out.append({"gens": [list(g) for g in key], "coeff": f"{c.numerator}/{c.denominator}"})
        return out

    @staticmethod
    def from_json_list(data) -> "ZPoly":
        terms = {}
        for entry in data:
            key = tuple(sorted(tuple(g) for g in entry["gens"]))
            num, _, den = entry["coeff"].partition("/")
            terms[key] = Fraction(int(num), int(den) if den else 1)
        return ZPoly(terms)


def zpoly_eval(poly: ZPoly, q_weight_bound: int, n_bound: Optional[int] = None) -> GradedSeries:
    """Ring homomorphism sending each generator z_{d,r} to its q-series."""
    trunc = Truncation(q_weight=q_weight_bound)
    total = GradedSeries.zero(trunc)
    for key, coeff in sorted(poly.terms.items()):
        prod = GradedSeries.one(trunc)
        for d, r in key:
            prod = prod * z_series(d, r, q_weight_bound, n_bound)
        total = total + prod.scalar_mul(coeff)
    return total


DEFAULT_EQUALITY_WEIGHT = 10


def zpoly_values_equal(a: ZPoly, b: ZPoly, q_weight: int = DEFAULT_EQUALITY_WEIGHT) -> bool:
    """Equality of the polynomials as q-series, decided by evaluation.

    The generator series satisfy polynomial relations, so distinct polynomial
    forms can represent the same series; structural equality (==) is only a
    sufficient condition.  Evaluation up to the given q-weight is the
    equality of record for recursion outputs."""
    if a == b:
        return True
    return zpoly_eval(a - b, q_weight).is_zero()


# ---------------------------------------------------------------------------
# eqzred: Euler-type operators act on the generators polynomially
# ---------------------------------------------------------------------------


def zgen_weighted_euler(d: int, r: int) -> ZPoly:
    """Image of z_{d,r} under sum_k k q_k d/dq_k: z_{d,r+1} - z_{d-1,r}."""
    out = ZPoly.gen(d, r + 1)
    if d >= 1:
        out = out - ZPoly.gen(d - 1, r)
    return out


def zgen_euler(d: int, r: int) -> ZPoly:
    """Image of z_{d,r} under sum_k q_k d/dq_k: (d+1) z_{d+1,r+1} + (2-r) z_{d,r}."""
    return ZPoly.gen(d + 1, r + 1) * (d + 1) + ZPoly.gen(d, r) * Fraction(2 - r)


def _zpoly_derivation(poly: ZPoly, gen_image) -> ZPoly:
    """Extend a map on generators to a derivation of the polynomial ring."""
    total = ZPoly.zero()
    for key, coeff in poly.terms.items():
        for i, g in enumerate(key):
            rest = key[:i] + key[i + 1 :]
            total = total + ZPoly({rest: coeff}) * gen_image(*g)
    return total


def zpoly_weighted_euler(poly: ZPoly) -> ZPoly:
    return _zpoly_derivation(poly, zgen_weighted_euler)


def zpoly_euler(poly: ZPoly) -> ZPoly:
    return _zpoly_derivation(poly, zgen_euler)


def _series_weighted_euler(series: GradedSeries) -> GradedSeries:
    """sum_k k q_k d/dq_k acts on q_mu as multiplication by |mu|."""
    return series.map_terms(lambda m, c: c * _qweight(m))


def _series_euler(series: GradedSeries) -> GradedSeries:
    """sum_k q_k d/dq_k acts on q_mu as multiplication by len(mu)."""
    return series.map_terms(lambda m, c: c * _qlen(m))


def _qweight(mono) -> int:
    return sum(var[1] * e for var, e in mono if var[0] == Q)


def _qlen(mono) -> int:
    return sum(e for var, e in mono if var[0] == Q)


def check_eqzred(d: int, r: int, q_weight_bound: int):
    """Verify both Euler-operator identities for one generator, exactly.

    Returns (ok, detail): the q-series operators applied to z_{d,r} must match
    the stated z-combinations coefficient for coefficient up to the bound.
    """
    z = z_series(d, r, q_weight_bound)
    lhs1 = _series_weighted_euler(z)
    rhs1 = zpoly_eval(zgen_weighted_euler(d, r), q_weight_bound)
    if lhs1 != rhs1:
        return False, f"weighted Euler identity fails for z_{{{d},{r}}}"
    lhs2 = _series_euler(z)
    rhs2 = zpoly_eval(zgen_euler(d, r), q_weight_bound)
    if lhs2 != rhs2:
        return False, f"Euler identity fails for z_{{{d},{r}}}"
    return True, f"both identities hold for z_{{{d},{r}}} up to q-weight {q_weight_bound}"


# ---------------------------------------------------------------------------
# psi-intersections and the correction series Psi_{a,l}
# ---------------------------------------------------------------------------


def psi_intersection(nu, n: int) -> Fraction:
    """Genus-0 intersection number of psi-classes on the space of n-pointed
    stable curves: multinomial (n-3; nu) when sum(nu) = n - 3, else 0."""
    if n < 3:
        raise ValueError("moduli space needs at least 3 points")
    nu = tuple(int(v) for v in nu)
    if any(v < 0 for v in nu):
        raise ValueError("exponents must be nonnegative")
    if len(nu) > n:
        raise ValueError("more exponents than points")
    if sum(nu) != n - 3:
        return Fraction(0)
    return Fraction(multinomial(nu))


def _pair_multisets(k: int, lam_sum: int, nu_sum: int, max_pair=None) -> Iterator[tuple]:
    """Multisets of k pairs (lam_i, nu_i) >= (0, 0), in non-increasing order,
    with prescribed coordinate sums."""
    if k == 0:
        if lam_sum == 0 and nu_sum == 0:
            yield ()
        return
    top = (lam_sum, nu_sum) if max_pair is None else min(max_pair, (lam_sum, nu_sum))
    first_lam = top[0]
    while first_lam >= 0:
        start_nu = top[1] if first_lam == top[0] else nu_sum
        for first_nu in range(min(start_nu, nu_sum), -1, -1):
            head = (first_lam, first_nu)
            for rest in _pair_multisets(k - 1, lam_sum - first_lam, nu_sum - first_nu, head):
                yield (head,) + rest
        first_lam -= 1


def _pair_aut(ms: tuple) -> int:
    """Product of factorials of run lengths in a sorted multiset."""
    out = 1
    i = 0
    while i < len(ms):
        j = i
        while j < len(ms) and ms[j] == ms[i]:
            j += 1
        out *= factorial(j - i)
        i = j
    return out


def psi_series(a: int, ell: int, t_weight_bound: int) -> GradedSeries:
    """The series Psi_{a,ell} in the t_{i,j} variables, truncated by t-weight.

    Psi_{a,ell} = sum_k (1/k!) sum over ordered k-tuples of pairs with
    sum(nu) = ell + k - 3 and sum(lam) = a of multinomial(|nu|; nu) prod t.
    Every k-slice is homogeneous of t-weight a + ell + 2k - 3, so truncation
    by t-weight keeps exact slices.
    """
    if ell < 1 or a < 0:
        raise ValueError("need a >= 0, ell >= 1")
    trunc = Truncation(t_weight=t_weight_bound)
    terms: dict = {}
    if a == 0 and ell == 3:
        terms[()] = Fraction(1)  # empty-product slice k = 0
    k = 1
    while a + ell + 2 * k - 3 <= t_weight_bound:
        nu_sum = ell + k - 3
        if nu_sum >= 0:
            for ms in _pair_multisets(k, a, nu_sum):
                coeff = Fraction(multinomial([p[1] for p in ms]), _pair_aut(ms))
                mono = mono_from_vars([(tvar(i, j), 1) for i, j in ms])
                terms[mono] = terms.get(mono, 0) + coeff
        k += 1
    return GradedSeries(trunc, terms)


def _t_raise(series: GradedSeries) -> GradedSeries:
    """sum_{i,j >= 0} t_{i,j+1} d/dt_{i,j} (raises t-weight by one)."""
    trunc = series.truncation
    out: dict = {}
    for mono, coeff in series.term_dict().items():
        for var, e in mono:
            if var[0] != T:
                continue
            new = mono_adjust(mono, {var: -1, tvar(var[1], var[2] + 1): +1})
            if trunc.admits(new):
                c = coeff * e
                out[new] = out.get(new, 0) + c
    result = GradedSeries(trunc)
    result._terms = {m: c for m, c in out.items() if c != 0}
    return result


def _t_count(series: GradedSeries) -> GradedSeries:
    """sum_{i,j >= 0} t_{i,j} d/dt_{i,j}: scale each term by its t-letter count."""
    return series.map_terms(lambda m, c: c * sum(e for v, e in m if v[0] == T))


def psi_string_base(a: int, ell: int, trunc: Truncation) -> GradedSeries:
    """Exceptional bottom slice of the string equation for Psi_{a,ell}: the
    terms of Psi_{a,ell+1} living on the three-point space, which the
    point-forgetting argument cannot reach.  Nonzero only for ell <= 2:
    t_{a,0} when ell = 1, the constant 1 when ell = 2 and a = 0."""
    terms: dict = {}
    if ell == 1:
        mono = mono_from_vars([(tvar(a, 0), 1)])
        if trunc.admits(mono):
            terms[mono] = Fraction(1)
    elif ell == 2 and a == 0:
        terms[()] = Fraction(1)
    return GradedSeries(trunc, terms)


def check_psi_string_dilaton(a: int, ell: int, t_weight_bound: int):
    """String and dilaton identities for Psi_{a,ell}, compared exactly on all
    monomials the truncation makes complete.

    The t_{0,0}-derivative inserts one point carrying no constraint, so it
    reproduces the next series on the nose:

        (i)   d Psi_{a,ell} / d t_{0,0} = Psi_{a,ell+1}.

    Forgetting that point gives the string equation (with its bottom slice on
    the three-point space as the only exceptional term):

        (ii)  d Psi_{a,ell} / d t_{0,0}
                 = sum_{i,j} t_{i,j+1} d Psi_{a,ell}/d t_{i,j} + base(a, ell),

    and the dilaton equation holds in the displayed operator form:

        (iii) d Psi_{a,ell} / d t_{0,1}
                 = sum_{i,j} t_{i,j} d Psi_{a,ell}/d t_{i,j} + (ell-2) Psi.
    """
    psi = psi_series(a, ell, t_weight_bound)
    window = Truncation(t_weight=t_weight_bound - 1)

    lhs_s = psi.diff(tvar(0, 0)).truncate(window)
    if lhs_s != psi_series(a, ell + 1, t_weight_bound - 1):
        return False, f"point-insertion identity fails for Psi_{{{a},{ell}}}"
    rhs_s = _t_raise(psi).truncate(window) + psi_string_base(a, ell, window)
    if lhs_s != rhs_s:
        return False, f"string identity fails for Psi_{{{a},{ell}}}"

    window2 = Truncation(t_weight=t_weight_bound - 2)
    lhs_d = psi.diff(tvar(0, 1)).truncate(window2)
    rhs_d = (_t_count(psi) + psi.scalar_mul(ell - 2)).truncate(window2)
    if lhs_d != rhs_d:
        return False, f"dilaton identity fails for Psi_{{{a},{ell}}}"
    return True, f"string and dilaton identities hold for Psi_{{{a},{ell}}}"


def psi_string_naive_residual(a: int, ell: int, t_weight_bound: int) -> GradedSeries:
    """Residual of the over-counting variant that adds the full next series to
    the raised sum: d Psi/d t_{0,0} - Psi_{a,ell+1} - sum t_{i,j+1} d Psi/d t_{i,j}.

    Since the derivative already equals Psi_{a,ell+1}, this residual equals
    minus the raised sum and is nonzero; it is kept as the documented record
    of why the string identity carries the bottom-slice form above."""
    psi = psi_series(a, ell, t_weight_bound)
    window = Truncation(t_weight=t_weight_bound - 1)
    lhs = psi.diff(tvar(0, 0)).truncate(window)
    return lhs - psi_series(a, ell + 1, t_weight_bound - 1) - _t_raise(psi).truncate(window)
