"""Exact polynomial arithmetic over Python integers.

``QPolynomial`` is a dense univariate polynomial in ``q``; ``MultiPolynomial``
is a sparse polynomial in a fixed number of variables keyed by exponent
tuples.  Both are immutable values with exact integer coefficients.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Mapping, Sequence


class InexactDivision(ArithmeticError):
    """Raised when a polynomial quotient leaves a nonzero remainder."""


class QPolynomial:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of ``q**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def _coerce(cls, other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return cls((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = QPolynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return QPolynomial(), QPolynomial(rem)
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top % lead:
                # Non-monic divisor with a non-divisible leading term.
                raise InexactDivision(f"leading coefficient {top} not divisible by {lead}")
            c = top // lead
            quot[k] = c
            if c:
                for j, d in enumerate(other.coeffs):
                    rem[k + j] -= c * d
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other) -> "QPolynomial":
        """Quotient, raising ``InexactDivision`` on a nonzero remainder."""
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise InexactDivision(f"remainder {rem} dividing {self} by {other}")
        return quot

    def __floordiv__(self, other):
        return self.exact_div(other)

    def reversed(self, degree: int | None = None) -> "QPolynomial":
        """Coefficients reversed around ``degree`` (defaults to own degree)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("degree smaller than polynomial degree")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return QPolynomial(reversed(padded))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


Q = QPolynomial((0, 1))


def product(polys: Iterable[QPolynomial]) -> QPolynomial:
    acc = QPolynomial((1,))
    for p in polys:
        acc = acc * p
    return acc


class MultiPolynomial:
    """Sparse polynomial in ``nvars`` variables.

    Terms are stored as ``{exponents: coefficient}`` with zero coefficients
    never kept, so equality is plain mapping equality.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "MultiPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> "MultiPolynomial":
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "MultiPolynomial":
        return cls(len(exps), {tuple(exps): c})

    def _check(self, other: "MultiPolynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPolynomial.constant(self.nvars, other)
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPolynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        result = MultiPolynomial(self.nvars)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = MultiPolynomial(self.nvars)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = MultiPolynomial.constant(self.nvars, other)
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = MultiPolynomial.constant(self.nvars)
        for _ in range(e):
            result = result * self
        return result

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, values: Sequence[int]) -> int:
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term *= v**k
            total += term
        return total

    def univariate(self, index: int, values: Mapping[int, int]) -> QPolynomial:
        """Collapse to a polynomial in variable ``index``; all others are set from ``values``."""
        coeffs: dict[int, int] = {}
        for exps, c in self.terms.items():
            term = c
            for v, k in enumerate(exps):
                if v != index and k:
                    term *= values[v] ** k
            coeffs[exps[index]] = coeffs.get(exps[index], 0) + term
        top = max(coeffs, default=-1)
        return QPolynomial(coeffs.get(k, 0) for k in range(top + 1))

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict]) -> "MultiPolynomial":
        return cls(nvars, {tuple(t["exps"]): int(t["coeff"]) for t in data})

    def __repr__(self) -> str:
        return f"MultiPolynomial({self.nvars}, {len(self.terms)} terms)"
