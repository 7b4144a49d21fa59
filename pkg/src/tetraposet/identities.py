"""q-series, product formulas and the tournament generating-function expansions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .arrays import StaircaseArray, ideal_arrays
from .bijections.stats import compute_stats
from .bijections.tournaments import fiber_size, row_shuffles
from .polynomials import MultiPolynomial, QPolynomial, product
from .poset import (
    TWO_ADJACENT_DUAL,
    TWO_ADJACENT_PRIMAL,
    ColorSet,
    classify,
)

ONE = QPolynomial((1,))


def _nonneg(*args: int) -> None:
    if any(a < 0 for a in args):
        raise ValueError(f"arguments must be non-negative, got {args}")


def q_int(k: int) -> QPolynomial:
    _nonneg(k)
    return QPolynomial([1] * k)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPolynomial:
    _nonneg(k)
    return product(q_int(j) for j in range(1, k + 1))


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial by the Pascal rule ``[n,k] = [n-1,k-1] + q^k [n-1,k]``."""
    _nonneg(n, k)
    if k > n:
        return QPolynomial()
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPolynomial.monomial(k) * q_binomial(n - 1, k)


@lru_cache(maxsize=None)
def carlitz_riordan(n: int) -> QPolynomial:
    _nonneg(n)
    if n <= 1:
        return ONE
    return sum(
        (QPolynomial.monomial(k - 1) * carlitz_riordan(k - 1) * carlitz_riordan(n - k) for k in range(1, n + 1)),
        QPolynomial(),
    )


def macmahon_q_catalan(p: int) -> QPolynomial:
    _nonneg(p)
    return q_binomial(2 * p, p).exact_div(q_int(p + 1))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# Value-level products, one per theorem class.

def asm_product(n: int) -> int:
    num = prod(factorial(3 * j + 1) for j in range(n))
    den = prod(factorial(n + j) for j in range(n))
    if num % den:
        raise ArithmeticError("product is not an integer")
    return num // den


def asm_product_triple(n: int) -> Fraction:
    return prod(
        (Fraction(i + j + k + 1, i + j + k - 1) for i in range(1, n) for j in range(i, n) for k in range(j, n)),
        start=Fraction(1),
    )


def q_asm_product(n: int) -> QPolynomial:
    return product(q_factorial(3 * k + 1) for k in range(n)).exact_div(product(q_factorial(n + k) for k in range(n)))


def tspp_product(n: int) -> int:
    """Pair form: product over ``1 <= i <= j <= n-1`` of ``(i+j+n-2)/(i+2j-2)``."""
    value = prod(
        (Fraction(i + j + n - 2, i + 2 * j - 2) for i in range(1, n) for j in range(i, n)),
        start=Fraction(1),
    )
    if value.denominator != 1:
        raise ArithmeticError("product is not an integer")
    return value.numerator


def tspp_product_triple(n: int) -> Fraction:
    return prod(
        (Fraction(i + j + k - 1, i + j + k - 2) for i in range(1, n) for j in range(i, n) for k in range(j, n)),
        start=Fraction(1),
    )


def q_tspp_product(n: int) -> QPolynomial:
    """``prod [i+j+k-1]_q / [i+j+k-2]_q``; raises ``InexactDivision`` if not a polynomial."""
    triples = [(i, j, k) for i in range(1, n) for j in range(i, n) for k in range(j, n)]
    num = product(q_int(i + j + k - 1) for i, j, k in triples)
    den = product(q_int(i + j + k - 2) for i, j, k in triples)
    return num.exact_div(den)


def catalan_product(n: int) -> int:
    return prod(catalan(j) for j in range(1, n + 1))


def qbinomial_product(n: int) -> QPolynomial:
    return product(q_binomial(n, j) for j in range(1, n + 1))


def qfactorial_product(n: int) -> QPolynomial:
    return product(q_factorial(j) for j in range(1, n + 1))


def boolean_power(n: int) -> QPolynomial:
    return QPolynomial((1, 1)) ** comb(n + 1, 3)


def catalan_q_product(n: int) -> QPolynomial:
    return product(carlitz_riordan(j) for j in range(1, n + 1))


def three_nice_product(n: int) -> QPolynomial:
    return product(QPolynomial.monomial(j) + 1 for j in range(1, n) for _ in range(n - j))


class NoKnownFormula(LookupError):
    """The color class has no closed rank generating function."""


_Q_FORMULAS = {
    "empty": boolean_power,
    "single": qfactorial_product,
    "two-opposite": qbinomial_product,
    "two-adjacent": catalan_q_product,
    "three-nice": three_nice_product,
}


def formula_is_dual(s) -> bool:
    """True when the formula describes the dual poset ``T_n^*(s)`` rather than ``T_n(s)``."""
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    return s in TWO_ADJACENT_DUAL


def rank_gf_formula(s, n: int) -> QPolynomial:
    """Closed form of ``F(J(T_n(s)), q)``, or of ``F(J(T_n^*(s)), q)`` for the dual two-adjacent sets."""
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    cls = classify(s)
    if cls not in _Q_FORMULAS:
        raise NoKnownFormula(f"no known rank generating function for class {cls} ({{{s}}})")
    if cls == "two-adjacent" and s not in TWO_ADJACENT_PRIMAL + TWO_ADJACENT_DUAL:
        raise AssertionError(f"{s} classified two-adjacent but not listed")
    return _Q_FORMULAS[cls](n)


def count_formula(s, n: int) -> int:
    """Closed-form ideal count for every class that has one."""
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    cls = classify(s)
    if cls in _Q_FORMULAS:
        return _Q_FORMULAS[cls](n)(1)
    if cls == "four":
        return asm_product(n)
    if cls == "six":
        return tspp_product(n)
    raise NoKnownFormula(f"no known product formula for class {cls} ({{{s}}})")


def sundquist_A(n: int, p: int) -> QPolynomial:
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    num = product(q_factorial(n * p + k) * q_factorial(k) for k in range(n))
    den = product(q_factorial(k * p + k + p) * q_factorial(p * k + k) for k in range(n))
    return num.exact_div(den)


# Multivariate expansions.  Variable 0 is lambda, variable k is x_k.

def _lam(n: int) -> MultiPolynomial:
    return MultiPolynomial.variable(n + 1, 0)


def _x(n: int, k: int, power: int = 1) -> MultiPolynomial:
    return MultiPolynomial.variable(n + 1, k, power)


def tournament_gf(n: int) -> MultiPolynomial:
    """``prod_{i<j} (x_i + lambda x_j)``."""
    lam = _lam(n)
    acc = MultiPolynomial.constant(n + 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            acc = acc * (_x(n, i) + lam * _x(n, j))
    return acc


def _monomial(n: int, lam: int, xs) -> MultiPolynomial:
    exps = [0] * (n + 1)
    exps[0] = lam
    for k, e in xs.items():
        exps[k] += e
    if any(e < 0 for e in exps):
        raise ArithmeticError(f"negative exponent {exps}")
    return MultiPolynomial.monomial(exps)


def asm_term(a: StaircaseArray) -> MultiPolynomial:
    """``lambda^E (1+lambda)^N prod x_k^(C_k - 1)`` for one ASM array."""
    n = a.n
    st = compute_stats(a)
    one_plus = MultiPolynomial.constant(n + 1) + _lam(n)
    return _monomial(n, st.E, {k: st.C_of(k) - 1 for k in range(1, n + 1)}) * one_plus ** st.N


def asm_expansion(n: int) -> MultiPolynomial:
    """Sum of :func:`asm_term` over the ASM arrays."""
    total = MultiPolynomial(n + 1)
    for a in ideal_arrays(n, "byog"):
        total = total + asm_term(a)
    return total


def tsscpp_term(a: StaircaseArray) -> MultiPolynomial:
    """Contribution of one TSSCPP array; the inner sum runs over its row shuffles."""
    n = a.n
    st = compute_stats(a)
    outer = _monomial(n, st.E, {i: n - i - st.E_of(i) for i in range(1, n)})
    inner = MultiPolynomial(n + 1)
    for b in row_shuffles(a):
        sb = compute_stats(b)
        inner = inner + _monomial(n, 0, {d: sb.E_sup(d) for d in range(1, n + 1)})
    return outer * inner


def tsscpp_expansion(n: int) -> MultiPolynomial:
    total = MultiPolynomial(n + 1)
    for a in ideal_arrays(n, "brgy"):
        total = total + tsscpp_term(a)
    return total


def tsscpp_binomial_sum(n: int) -> QPolynomial:
    """``sum lambda^E prod C(C_{i+1,k}, E_{i,k})`` as a polynomial in lambda."""
    coeffs = [0] * (comb(n, 2) + 1)
    for a in ideal_arrays(n, "brgy"):
        coeffs[compute_stats(a).E] += fiber_size(a)
    return QPolynomial(coeffs)


def asm_two_enumeration(n: int) -> int:
    return sum(2 ** compute_stats(a).N for a in ideal_arrays(n, "byog"))
