"""The enveloping algebra of gl(m) over Q as a normal-ordered term algebra.

Elements are finite rational combinations of ordered monomials in the matrix
units e_{kl}.  The fixed monomial order is lexicographic on the index pair
(k,l); any total order would do, since normal forms are only ever compared
within one fixed order.  Rewriting uses the commutation rule

    e_{ij} e_{kl} = e_{kl} e_{ij} + delta_{jk} e_{il} - delta_{li} e_{kj}.

On top of the raw algebra this module builds the degree-q elements e_{kl}^q
and their involution images, the Casimir traces c_q, the generating-function
polynomials K_n, and a symbolic verifier for the binomial relations tying the
two families together.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Dict, Optional, Sequence, Tuple

from .report import VerificationReport
from .weights import HighestWeight, casimir_eigenvalue

Generator = Tuple[int, int]          # (k, l), 1-based
Monomial = Tuple[Generator, ...]     # nondecreasing in the fixed order

__all__ = [
    "BudgetExceededError",
    "PBWElement",
    "pbw_normalize",
    "e_power",
    "tilde_e_power",
    "casimir_element",
    "commutator",
    "k_eval",
    "k_eval_table",
    "k_multi_indices",
    "k_of_casimirs",
    "k_central",
    "verify_binomial_relations",
    "term_budget",
]

_ENV_BUDGET = "KAHLERGRAD_BUDGET"
DEFAULT_TERM_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """An expansion would exceed the configured term budget."""


def term_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(_ENV_BUDGET)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{_ENV_BUDGET} must be an integer, got {env!r}")
    return DEFAULT_TERM_BUDGET


def _guard(count: int, budget: Optional[int], what: str):
    limit = term_budget(budget)
    if count > limit:
        raise BudgetExceededError(
            f"{what} needs {count} words, exceeding the term budget {limit}"
        )


def _check_index(k: int, m: int):
    if not 1 <= k <= m:
        raise ValueError(f"generator index {k} out of range 1..{m}")


class PBWElement:
    """Element of U(gl(m)) in normal-ordered form.

    terms maps ordered monomials to nonzero rational coefficients; the zero
    element has an empty map.  Instances are immutable.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Dict[Monomial, Fraction]):
        self.m = m
        self.terms = {w: c for w, c in terms.items() if c}
        for w in self.terms:
            if any(w[i] > w[i + 1] for i in range(len(w) - 1)):
                raise ValueError(f"monomial {w} is not normal ordered")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "PBWElement":
        return cls(m, {})

    @classmethod
    def one(cls, m: int) -> "PBWElement":
        return cls(m, {(): Fraction(1)})

    @classmethod
    def scalar(cls, m: int, value) -> "PBWElement":
        return cls(m, {(): Fraction(value)})

    @classmethod
    def generator(cls, m: int, k: int, l: int) -> "PBWElement":
        _check_index(k, m)
        _check_index(l, m)
        return cls(m, {((k, l),): Fraction(1)})

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PBWElement)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Filtration degree of the normal form (0 for scalars and zero)."""
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in sorted(self.terms.items()):
            mono = "*".join(f"e[{k},{l}]" for k, l in w) if w else "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "PBWElement") -> "PBWElement":
        self._same_rank(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return PBWElement(self.m, terms)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + other.scale(-1)

    def __neg__(self) -> "PBWElement":
        return self.scale(-1)

    def scale(self, s) -> "PBWElement":
        s = Fraction(s)
        if not s:
            return PBWElement.zero(self.m)
        return PBWElement(self.m, {w: s * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PBWElement):
            return self.scale(other)
        self._same_rank(other)
        out: Dict[Monomial, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(out, w1 + w2, c1 * c2, self.m)
        return PBWElement(self.m, out)

    def __rmul__(self, other):
        return self.scale(other)

    def involution(self) -> "PBWElement":
        """Transpose each generator, keep the order, weigh by (-1)^degree."""
        out: Dict[Monomial, Fraction] = {}
        for w, c in self.terms.items():
            sign = -c if len(w) % 2 else c
            word = tuple((l, k) for k, l in w)
            _accumulate(out, word, sign, self.m)
        return PBWElement(self.m, out)

    def _same_rank(self, other: "PBWElement"):
        if self.m != other.m:
            raise ValueError(f"rank mismatch: {self.m} vs {other.m}")


def _accumulate(out: Dict[Monomial, Fraction], word, coeff: Fraction, m: int):
    """Normal-order one word into ``out`` by adjacent-swap rewriting."""
    stack = [(list(word), coeff)]
    while stack:
        w, c = stack.pop()
        swapped = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                (a, b), (k, l) = w[i], w[i + 1]
                stack.append((w[:i] + [(k, l), (a, b)] + w[i + 2:], c))
                if b == k:
                    stack.append((w[:i] + [(a, l)] + w[i + 2:], c))
                if l == a:
                    stack.append((w[:i] + [(k, b)] + w[i + 2:], -c))
                swapped = True
                break
        if not swapped:
            key = tuple(w)
            new = out.get(key, Fraction(0)) + c
            if new:
                out[key] = new
            elif key in out:
                del out[key]


def pbw_normalize(word: Sequence[Generator], m: int, coeff=1) -> PBWElement:
    """Normal form of a single word of generators with a rational coefficient."""
    for k, l in word:
        _check_index(k, m)
        _check_index(l, m)
    out: Dict[Monomial, Fraction] = {}
    _accumulate(out, tuple(word), Fraction(coeff), m)
    return PBWElement(m, out)


def e_power(k: int, l: int, q: int, m: int, budget: Optional[int] = None) -> PBWElement:
    """Degree-q element: sum over index paths e_{k i_1} e_{i_1 i_2} ... e_{i_{q-1} l}."""
    _check_index(k, m)
    _check_index(l, m)
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q == 0:
        return PBWElement.one(m) if k == l else PBWElement.zero(m)
    _guard(m ** (q - 1), budget, f"e_power({k},{l},{q}) at rank {m}")
    out: Dict[Monomial, Fraction] = {}
    one = Fraction(1)
    for mid in product(range(1, m + 1), repeat=q - 1):
        seq = (k,) + mid + (l,)
        word = tuple((seq[i], seq[i + 1]) for i in range(q))
        _accumulate(out, word, one, m)
    return PBWElement(m, out)


def tilde_e_power(k: int, l: int, q: int, m: int, budget: Optional[int] = None) -> PBWElement:
    """Involution image of e_power, built directly from its defining sum:
    (-1)^q sum e_{i_1 k} e_{i_2 i_1} ... e_{l i_{q-1}}."""
    _check_index(k, m)
    _check_index(l, m)
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q == 0:
        return PBWElement.one(m) if k == l else PBWElement.zero(m)
    _guard(m ** (q - 1), budget, f"tilde_e_power({k},{l},{q}) at rank {m}")
    out: Dict[Monomial, Fraction] = {}
    sign = Fraction(-1) ** q
    for mid in product(range(1, m + 1), repeat=q - 1):
        seq = (k,) + mid + (l,)
        word = tuple((seq[i + 1], seq[i]) for i in range(q))
        _accumulate(out, word, sign, m)
    return PBWElement(m, out)


def casimir_element(q: int, m: int, variant: str = "plain",
                    budget: Optional[int] = None) -> PBWElement:
    """Central trace element c_q = sum_k e_{kk}^q (or its involution image)."""
    if variant not in ("plain", "tilde"):
        raise ValueError("variant must be 'plain' or 'tilde'")
    build = e_power if variant == "plain" else tilde_e_power
    total = PBWElement.zero(m)
    for k in range(1, m + 1):
        total = total + build(k, k, q, m, budget)
    return total


def commutator(a: PBWElement, b: PBWElement) -> PBWElement:
    return a * b - b * a


# ---------------------------------------------------------------------------
# K polynomials: coefficients of 1 / (1 + x_1 z + x_2 z^2 + ...)
# ---------------------------------------------------------------------------

def k_eval(n: int, xs: Sequence) -> Fraction:
    """K_n at the point (x_1..x_n), by the recursion
    K_0 = 1, K_q = -sum_{p<q} K_p x_{q-p}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    xs = [Fraction(x) for x in xs]
    if len(xs) < n:
        raise ValueError(f"need at least {n} coordinates, got {len(xs)}")
    ks = [Fraction(1)]
    for q in range(1, n + 1):
        ks.append(-sum(ks[p] * xs[q - p - 1] for p in range(q)))
    return ks[n]


def k_multi_indices(n: int):
    """All (i_1..i_n) multiplicity tuples with sum_p p*i_p = n, as dicts."""
    def rec(remaining, max_part):
        if remaining == 0:
            yield {}
            return
        for part in range(min(remaining, max_part), 0, -1):
            for count in range(remaining // part, 0, -1):
                for rest in rec(remaining - part * count, part - 1):
                    d = dict(rest)
                    d[part] = count
                    yield d
    yield from rec(n, n)


def k_eval_table(n: int, xs: Sequence) -> Fraction:
    """K_n from the explicit multinomial coefficient table; must agree with
    the recursion (tested propertywise)."""
    if n == 0:
        return Fraction(1)
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for d in k_multi_indices(n):
        s = sum(d.values())
        coeff = Fraction(factorial(s))
        term = Fraction(1)
        for p, cnt in d.items():
            coeff /= factorial(cnt)
            term *= (-xs[p - 1]) ** cnt
        total += coeff * term
    return total


def k_of_casimirs(n: int, rho, variant: str = "plain") -> Fraction:
    """K_n(-c) evaluated on the module labelled rho: the all-positive
    multinomial sum of products of Casimir scalars c_0 .. c_{n-1}."""
    rho = HighestWeight.coerce(rho)
    cs = [casimir_eigenvalue(rho, p, variant) for p in range(max(n, 1))]
    return k_eval(n, [-c for c in cs])


def k_central(n: int, m: int, variant: str = "plain",
              budget: Optional[int] = None) -> PBWElement:
    """K_n(-c) as a central element of the algebra itself (products of the
    Casimir elements with positive multinomial coefficients)."""
    if n == 0:
        return PBWElement.one(m)
    cached = {}

    def cas(p):
        if p not in cached:
            cached[p] = casimir_element(p, m, variant, budget)
        return cached[p]

    total = PBWElement.zero(m)
    for d in k_multi_indices(n):
        s = sum(d.values())
        coeff = Fraction(factorial(s))
        for cnt in d.values():
            coeff /= factorial(cnt)
        el = PBWElement.scalar(m, coeff)
        for p, cnt in sorted(d.items()):
            for _ in range(cnt):
                el = el * cas(p - 1)
        total = total + el
    return total


# ---------------------------------------------------------------------------
# Symbolic verification of the binomial relations between the two families
# ---------------------------------------------------------------------------

def _binomial_side(k, l, q, m, family, budget):
    """sum_p C(q,p) (-m)^{q-p} family(k,l,p)."""
    total = PBWElement.zero(m)
    for p in range(q + 1):
        coeff = Fraction(comb(q, p)) * Fraction(-m) ** (q - p)
        total = total + family(k, l, p, m, budget).scale(coeff)
    return total


def verify_binomial_relations(m: int, q_max: int, budget: Optional[int] = None) -> VerificationReport:
    """Machine check of the degree-q relations between the e and tilde-e
    families, their trace forms, and the solved expressions, all as exact
    normal-form identities.
    """
    if m < 1 or q_max < 0:
        raise ValueError("need m >= 1 and q_max >= 0")
    rep = VerificationReport()
    sign = lambda q: Fraction(-1) ** q

    kc = {n: k_central(n, m, "plain", budget) for n in range(q_max + 2)}
    kct = {n: k_central(n, m, "tilde", budget) for n in range(q_max + 2)}

    for q in range(q_max + 1):
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                lhs = _binomial_side(k, l, q, m, tilde_e_power, budget)
                rhs = PBWElement.zero(m)
                for p in range(q + 1):
                    rhs = rhs + kc[q - p] * e_power(l, k, p, m, budget)
                diff = lhs - rhs.scale(sign(q))
                rep.check("binomial-tilde-to-plain", {"m": m, "q": q, "k": k, "l": l},
                          diff.is_zero(), witness=repr(diff))

                lhs = _binomial_side(k, l, q, m, e_power, budget)
                rhs = PBWElement.zero(m)
                for p in range(q + 1):
                    rhs = rhs + kct[q - p] * tilde_e_power(l, k, p, m, budget)
                diff = lhs - rhs.scale(sign(q))
                rep.check("binomial-plain-to-tilde", {"m": m, "q": q, "k": k, "l": l},
                          diff.is_zero(), witness=repr(diff))

        # trace forms relating the two Casimir families
        lhs = PBWElement.zero(m)
        for p in range(q + 1):
            coeff = Fraction(comb(q, p)) * Fraction(-m) ** (q - p)
            lhs = lhs + casimir_element(p, m, "tilde", budget).scale(coeff)
        diff = lhs - kc[q + 1].scale(sign(q))
        rep.check("casimir-binomial-tilde", {"m": m, "q": q}, diff.is_zero(), witness=repr(diff))

        lhs = PBWElement.zero(m)
        for p in range(q + 1):
            coeff = Fraction(comb(q, p)) * Fraction(-m) ** (q - p)
            lhs = lhs + casimir_element(p, m, "plain", budget).scale(coeff)
        diff = lhs - kct[q + 1].scale(sign(q))
        rep.check("casimir-binomial-plain", {"m": m, "q": q}, diff.is_zero(), witness=repr(diff))

        # solved forms: tilde elements as combinations of the plain family
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                rhs = PBWElement.zero(m)
                for p in range(q + 1):
                    co = PBWElement.zero(m)
                    for s in range(p, q + 1):
                        cs = Fraction(comb(q, s)) * Fraction(-m) ** (q - s)
                        co = co + kc[s - p].scale(cs)
                    rhs = rhs + co * e_power(l, k, p, m, budget)
                diff = tilde_e_power(k, l, q, m, budget) - rhs.scale(sign(q))
                rep.check("solved-tilde-elements", {"m": m, "q": q, "k": k, "l": l},
                          diff.is_zero(), witness=repr(diff))

        rhs = PBWElement.zero(m)
        for p in range(q + 1):
            coeff = Fraction(comb(q, p)) * Fraction(-m) ** (q - p)
            rhs = rhs + kc[p + 1].scale(coeff)
        diff = casimir_element(q, m, "tilde", budget) - rhs.scale(sign(q))
        rep.check("solved-tilde-casimir", {"m": m, "q": q}, diff.is_zero(), witness=repr(diff))

    return rep
