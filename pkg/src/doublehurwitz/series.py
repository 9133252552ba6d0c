"""Sparse, graded, truncated multivariate power series over exact coefficients.

Variables live in seven alphabets, each with its own grading:

==========  =============  ======================  =================
alphabet    variables      encoding                weight
==========  =============  ======================  =================
q           q_1, q_2, ...  ('q', k)                k
p           p_1, p_2, ...  ('p', i)                i
t           t_{i,j}        ('t', i, j), i,j >= 0   i + j + 1
beta        beta           ('b',)                  1 per power
s           t_1, t_2, ...  ('s', k)                k   (KP times)
psi         psi            ('psi',)                degree counter
xi          xi             ('xi',)                 degree counter
==========  =============  ======================  =================

A monomial is a tuple of (variable, exponent) pairs sorted by variable;
exponents are nonzero, and only psi may carry negative exponents.  A
:class:`Truncation` fixes optional upper bounds per alphabet; a series stores
only monomials within its truncation and all its coefficients are exact up to
those bounds.  Series are immutable values: every operation returns a new
series and two series are equal iff they have the same truncation and terms.

Coefficients are ``fractions.Fraction`` by default, but any exact commutative
ring whose elements support ``+``, ``-``, ``*`` and comparison with 0 works
(polynomial-valued series are used by the recursion engines).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

Q, P, T, BETA, S, PSI, XI = "q", "p", "t", "b", "s", "psi", "xi"

BETA_VAR = (BETA,)
PSI_VAR = (PSI,)
XI_VAR = (XI,)


def qvar(k: int) -> tuple:
    if k < 1:
        raise ValueError("q-index must be >= 1")
    return (Q, k)


def pvar(i: int) -> tuple:
    if i < 1:
        raise ValueError("p-index must be >= 1")
    return (P, i)


def tvar(i: int, j: int) -> tuple:
    if i < 0 or j < 0:
        raise ValueError("t-indices must be >= 0")
    return (T, i, j)


def svar(k: int) -> tuple:
    if k < 1:
        raise ValueError("s-index must be >= 1")
    return (S, k)


# Weight vector coordinates: (q, p, t, beta, s, psi, xi).
_NWEIGHTS = 7
_COORD = {Q: 0, P: 1, T: 2, BETA: 3, S: 4, PSI: 5, XI: 6}


def mono_weights(mono: tuple) -> tuple:
    """Per-alphabet weight vector of a monomial."""
    w = [0] * _NWEIGHTS
    for var, e in mono:
        tag = var[0]
        if tag == Q:
            w[0] += var[1] * e
        elif tag == P:
            w[1] += var[1] * e
        elif tag == T:
            w[2] += (var[1] + var[2] + 1) * e
        elif tag == BETA:
            w[3] += e
        elif tag == S:
            w[4] += var[1] * e
        elif tag == PSI:
            w[5] += e
        else:
            w[6] += e
    return tuple(w)


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    """Product of two canonical monomials (merge of sorted exponent vectors)."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            e = e1 + e2
            if e != 0:
                out.append((v1, e))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_from_vars(vars_with_exp: Iterable) -> tuple:
    """Canonical monomial from (var, exp) pairs; equal vars are merged."""
    acc: dict = {}
    for var, e in vars_with_exp:
        acc[var] = acc.get(var, 0) + e
    for var, e in acc.items():
        if e < 0 and var != PSI_VAR:
            raise ValueError(f"negative exponent only allowed on psi, got {var}^{e}")
    return tuple(sorted((v, e) for v, e in acc.items() if e != 0))


def mono_adjust(mono: tuple, deltas: dict) -> tuple:
    """Shift exponents of selected variables; results must stay nonnegative
    (psi excepted)."""
    acc = dict(mono)
    for var, d in deltas.items():
        e = acc.get(var, 0) + d
        if e < 0 and var != PSI_VAR:
            raise ValueError(f"negative exponent in monomial surgery on {var}")
        if e == 0:
            acc.pop(var, None)
        else:
            acc[var] = e
    return tuple(sorted(acc.items()))


def mono_str(mono: tuple) -> str:
    """Human-readable rendering, e.g. ``q_1^2*t_{1,0}``; s-variables print as t_k."""
    if not mono:
        return "1"
    parts = []
    for var, e in mono:
        tag = var[0]
        if tag == Q:
            name = f"q_{var[1]}"
        elif tag == P:
            name = f"p_{var[1]}"
        elif tag == T:
            name = f"t_{{{var[1]},{var[2]}}}"
        elif tag == BETA:
            name = "beta"
        elif tag == S:
            name = f"t_{var[1]}"
        elif tag == PSI:
            name = "psi"
        else:
            name = "xi"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class TruncationMismatch(ValueError):
    """Raised when combining series with different truncations."""


@dataclass(frozen=True)
class Truncation:
    """Optional per-alphabet degree bounds; ``None`` leaves an alphabet unbounded."""

    q_weight: Optional[int] = None
    p_weight: Optional[int] = None
    t_weight: Optional[int] = None
    beta_deg: Optional[int] = None
    s_weight: Optional[int] = None
    psi_deg: Optional[int] = None
    xi_deg: Optional[int] = None

    def bounds(self) -> tuple:
        return (
            self.q_weight,
            self.p_weight,
            self.t_weight,
            self.beta_deg,
            self.s_weight,
            self.psi_deg,
            self.xi_deg,
        )

    def admits_weights(self, w: tuple) -> bool:
        for bound, x in zip(self.bounds(), w):
            if bound is not None and x > bound:
                return False
        return True

    def admits(self, mono: tuple) -> bool:
        return self.admits_weights(mono_weights(mono))

    def to_json_dict(self) -> dict:
        names = ("q_weight", "p_weight", "t_weight", "beta_deg", "s_weight", "psi_deg", "xi_deg")
        return {n: b for n, b in zip(names, self.bounds()) if b is not None}

    @staticmethod
    def from_json_dict(data: dict) -> "Truncation":
        return Truncation(**data)


class GradedSeries:
    """A truncated formal power series in canonical form (no zero coefficients)."""

    __slots__ = ("truncation", "_terms")

    def __init__(self, truncation: Truncation, terms: Optional[dict] = None):
        self.truncation = truncation
        clean: dict = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff == 0:
                    continue
                if not truncation.admits(mono):
                    raise ValueError(f"monomial {mono_str(mono)} violates truncation {truncation}")
                clean[mono] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(trunc: Truncation) -> "GradedSeries":
        return GradedSeries(trunc)

    @staticmethod
    def one(trunc: Truncation) -> "GradedSeries":
        return GradedSeries(trunc, {(): Fraction(1)})

    @staticmethod
    def constant(trunc: Truncation, c) -> "GradedSeries":
        return GradedSeries(trunc, {(): c})

    @staticmethod
    def var(trunc: Truncation, v: tuple, exp: int = 1, coeff=Fraction(1)) -> "GradedSeries":
        return GradedSeries(trunc, {mono_from_vars([(v, exp)]): coeff})

    # -- queries ------------------------------------------------------------

    def terms(self):
        """Items sorted by monomial order (deterministic)."""
        return sorted(self._terms.items())

    def term_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: tuple):
        """Exact coefficient of a canonical monomial (0 if absent)."""
        return self._terms.get(mono, Fraction(0))

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.truncation == other.truncation and self._terms == other._terms

    def __hash__(self):
        raise TypeError("GradedSeries is not hashable")

    def __repr__(self) -> str:
        return f"GradedSeries({len(self._terms)} terms, {self.truncation})"

    def pretty(self, max_terms: Optional[int] = None) -> str:
        items = self.terms()
        if not items:
            return "0"
        chunks = []
        for mono, coeff in items[: max_terms if max_terms else len(items)]:
            c = f"({coeff})" if not isinstance(coeff, (int, Fraction)) else str(coeff)
            chunks.append(c if not mono else f"{c}*{mono_str(mono)}")
        if max_terms and len(items) > max_terms:
            chunks.append("...")
        return " + ".join(chunks)

    # -- ring operations ----------------------------------------------------

    def _require_compatible(self, other: "GradedSeries"):
        if self.truncation != other.truncation:
            raise TruncationMismatch(
                f"incompatible truncations: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._require_compatible(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = coeff
            else:
                acc = acc + coeff
                if acc == 0:
                    del out[mono]
                else:
                    out[mono] = acc
        result = GradedSeries(self.truncation)
        result._terms = out
        return result

    def __neg__(self) -> "GradedSeries":
        result = GradedSeries(self.truncation)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def scalar_mul(self, c) -> "GradedSeries":
        result = GradedSeries(self.truncation)
        if c != 0:
            result._terms = {m: v * c for m, v in self._terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        self._require_compatible(other)
        trunc = self.truncation
        admits = trunc.admits_weights

        # Bucket both operands by weight vector so the truncation test runs
        # once per bucket pair; the inner loops are then unconditional.
        left: dict = {}
        for m, c in self._terms.items():
            left.setdefault(mono_weights(m), []).append((m, c))
        right: dict = {}
        for m, c in other._terms.items():
            right.setdefault(mono_weights(m), []).append((m, c))

        acc: dict = {}
        for wl, lt in left.items():
            for wr, rt in right.items():
                if not admits(tuple(a + b for a, b in zip(wl, wr))):
                    continue
                for ml, cl in lt:
                    for mr, cr in rt:
                        m = mono_mul(ml, mr)
                        c = cl * cr
                        prev = acc.get(m)
                        acc[m] = c if prev is None else prev + c
        result = GradedSeries(trunc)
        result._terms = {m: c for m, c in acc.items() if c != 0}
        return result

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        return NotImplemented

    def mul_monomial(self, mono: tuple, coeff=Fraction(1)) -> "GradedSeries":
        """Multiply by coeff * mono, dropping terms pushed past the truncation."""
        trunc = self.truncation
        out: dict = {}
        for m, c in self._terms.items():
            mm = mono_mul(m, mono)
            if trunc.admits(mm):
                v = c * coeff
                if v != 0:
                    out[mm] = out.get(mm, 0) + v
        result = GradedSeries(trunc)
        result._terms = {m: c for m, c in out.items() if c != 0}
        return result

    def diff(self, var: tuple) -> "GradedSeries":
        """Formal partial derivative with respect to one variable."""
        out: dict = {}
        for mono, coeff in self._terms.items():
            for idx, (v, e) in enumerate(mono):
                if v == var:
                    new = mono[:idx] + ((v, e - 1),) if e != 1 else mono[:idx]
                    new = new + mono[idx + 1 :]
                    c = coeff * e
                    if c != 0:
                        out[new] = out.get(new, 0) + c
                    break
        result = GradedSeries(self.truncation)
        result._terms = {m: c for m, c in out.items() if c != 0}
        return result

    # -- structure maps -----------------------------------------------------

    def truncate(self, new_trunc: Truncation) -> "GradedSeries":
        """Explicit re-truncation (the only sanctioned way to change bounds)."""
        result = GradedSeries(new_trunc)
        result._terms = {m: c for m, c in self._terms.items() if new_trunc.admits(m)}
        return result

    def map_terms(self, fn) -> "GradedSeries":
        """New series with coefficient fn(mono, coeff); zeros are dropped."""
        out = {}
        for m, c in self._terms.items():
            v = fn(m, c)
            if v != 0:
                out[m] = v
        result = GradedSeries(self.truncation)
        result._terms = out
        return result

    def substitute_one(self, var: tuple) -> "GradedSeries":
        """Set one variable equal to 1 (merge terms that differ only in it)."""
        out: dict = {}
        for mono, coeff in self._terms.items():
            new = tuple((v, e) for v, e in mono if v != var)
            acc = out.get(new)
            out[new] = coeff if acc is None else acc + coeff
        result = GradedSeries(self.truncation)
        result._terms = {m: c for m, c in out.items() if c != 0}
        return result

    def substitute_p1_shift(self) -> "GradedSeries":
        """Formal substitution p_1 -> p_1 + 1 by binomial re-expansion."""
        from math import comb

        p1 = pvar(1)
        out: dict = {}
        for mono, coeff in self._terms.items():
            e = 0
            rest = mono
            for idx, (v, ee) in enumerate(mono):
                if v == p1:
                    e = ee
                    rest = mono[:idx] + mono[idx + 1 :]
                    break
            if e == 0:
                out[mono] = out.get(mono, 0) + coeff
                continue
            for i in range(e + 1):
                new = rest if i == 0 else mono_mul(rest, ((p1, i),))
                c = coeff * comb(e, i)
                out[new] = out.get(new, 0) + c
        result = GradedSeries(self.truncation)
        result._terms = {m: c for m, c in out.items() if c != 0}
        return result

    # -- exp / log ----------------------------------------------------------

    def _check_nilpotent(self):
        """Every monomial must gain weight in some bounded alphabet, so that
        high powers eventually leave the truncation."""
        bounds = self.truncation.bounds()
        for mono in self._terms:
            w = mono_weights(mono)
            if not any(b is not None and x > 0 for b, x in zip(bounds, w)):
                raise ValueError(
                    f"exp/log diverges: monomial {mono_str(mono)} has no bounded positive weight"
                )

    def exp(self) -> "GradedSeries":
        """Truncated exponential; requires zero constant term."""
        if self.constant_term() != 0:
            raise ValueError("series_exp requires zero constant term")
        self._check_nilpotent()
        result = GradedSeries.one(self.truncation)
        power = GradedSeries.one(self.truncation)
        j = 0
        while True:
            j += 1
            power = (power * self).scalar_mul(Fraction(1, j))
            if power.is_zero():
                return result
            result = result + power

    def log(self) -> "GradedSeries":
        """Truncated logarithm; requires constant term exactly 1."""
        if self.constant_term() != 1:
            raise ValueError("series_log requires constant term 1")
        u = self - GradedSeries.one(self.truncation)
        u._check_nilpotent()
        result = GradedSeries.zero(self.truncation)
        power = GradedSeries.one(self.truncation)
        j = 0
        while True:
            j += 1
            power = power * u
            if power.is_zero():
                return result
            result = result + power.scalar_mul(Fraction((-1) ** (j + 1), j))

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        terms = []
        for mono, coeff in self.terms():
            if not isinstance(coeff, (int, Fraction)):
                raise TypeError("JSON serialization supports rational coefficients only")
            f = Fraction(coeff)
            enc = [[var[0], *var[1:], e] for var, e in mono]
            terms.append({"monomial": enc, "coeff": f"{f.numerator}/{f.denominator}"})
        return {"truncation": self.truncation.to_json_dict(), "terms": terms}

    @staticmethod
    def from_json_dict(data: dict) -> "GradedSeries":
        trunc = Truncation.from_json_dict(data["truncation"])
        terms = {}
        for entry in data["terms"]:
            mono = []
            for item in entry["monomial"]:
                tag, *rest = item
                var = (tag, *rest[:-1])
                mono.append((var, rest[-1]))
            num, _, den = entry["coeff"].partition("/")
            terms[tuple(sorted(mono))] = Fraction(int(num), int(den) if den else 1)
        return GradedSeries(trunc, terms)
