"""Alternating sign matrices, monotone triangles and the ASM staircase arrays."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import accumulate, product
from typing import Iterator

from ..arrays import StaircaseArray, validate
from ..poset import ASM_COLORS


def _is_alternating_line(line) -> bool:
    """Nonzero entries alternate +1, -1, ..., +1 (so the line sums to 1)."""
    partial = list(accumulate(line))
    return all(v in (-1, 0, 1) for v in line) and all(s in (0, 1) for s in partial) and partial[-1] == 1


@dataclass(frozen=True)
class Asm:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("ASM must be square")
        if n and not all(_is_alternating_line(r) for r in rows):
            raise ValueError("a row is not alternating with sum 1")
        if n and not all(_is_alternating_line(c) for c in zip(*rows)):
            raise ValueError("a column is not alternating with sum 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "Asm":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_permutation(cls, perm) -> "Asm":
        """Row ``i`` has its 1 in column ``perm[i]`` (1-based values)."""
        n = len(perm)
        return cls(tuple(tuple(int(perm[i] == j + 1) for j in range(n)) for i in range(n)))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def inversion_number(a: Asm) -> int:
    """Sum of ``A[i][j] * A[k][l]`` over ``i > k`` and ``j < l``."""
    m, n = a.entries, a.n
    total = 0
    for i, j in product(range(n), repeat=2):
        if m[i][j]:
            total += m[i][j] * sum(m[k][l] for k in range(i) for l in range(j + 1, n))
    return total


def num_neg(a: Asm) -> int:
    return sum(v == -1 for r in a.entries for v in r)


def _asm_rows(n: int) -> list[tuple[int, ...]]:
    return [r for r in product((-1, 0, 1), repeat=n) if _is_alternating_line(r)]


def all_asms(n: int) -> Iterator[Asm]:
    """Every ``n x n`` ASM, generated row by row from the definition alone."""
    if n == 0:
        yield Asm(())
        return
    candidates = _asm_rows(n)

    def extend(rows, colsum):
        if len(rows) == n:
            if all(c == 1 for c in colsum):
                yield Asm(tuple(rows))
            return
        for r in candidates:
            new = tuple(c + v for c, v in zip(colsum, r))
            if all(c in (0, 1) for c in new):
                yield from extend(rows + [r], new)

    yield from extend([], (0,) * n)


@dataclass(frozen=True)
class MonotoneTriangle:
    """Rows ``a_{i,1..i}``; stored top row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, r in enumerate(rows, start=1):
            if len(r) != i:
                raise ValueError(f"row {i} has length {len(r)}")
            if any(x >= y for x, y in zip(r, r[1:])):
                raise ValueError(f"row {i} is not strictly increasing")
        if n and rows[-1] != tuple(range(1, n + 1)):
            raise ValueError("bottom row must be 1..n")
        for i in range(1, n):
            upper, lower = rows[i - 1], rows[i]
            for j in range(i):
                if not lower[j] <= upper[j] <= lower[j + 1]:
                    raise ValueError(f"interlacing fails between rows {i} and {i + 1}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def asm_to_monotone(a: Asm) -> MonotoneTriangle:
    n = a.n
    colsum = [0] * n
    rows = []
    for r in a.entries:
        colsum = [c + v for c, v in zip(colsum, r)]
        rows.append(tuple(j + 1 for j in range(n) if colsum[j] == 1))
    return MonotoneTriangle(tuple(rows))


def monotone_to_asm(m: MonotoneTriangle) -> Asm:
    n = m.n
    prev: set[int] = set()
    rows = []
    for r in m.rows:
        cur = set(r)
        rows.append(tuple(int(j in cur) - int(j in prev) for j in range(1, n + 1)))
        prev = cur
    return Asm(tuple(rows))


def monotone_to_yplus(m: MonotoneTriangle) -> StaircaseArray:
    """Rotate clockwise by an eighth of a turn: ``Yplus[i][j]`` is entry ``i`` of triangle row ``n - j``."""
    n = m.n
    rows = tuple(tuple(m.rows[n - j - 1][i - 1] for j in range(n - i + 1)) for i in range(1, n + 1))
    return StaircaseArray(n, "Yplus", rows, ASM_COLORS)


def yplus_to_monotone(a: StaircaseArray) -> MonotoneTriangle:
    if a.variant != "Yplus":
        raise ValueError("expected a Yplus array")
    check = validate(a, ASM_COLORS)
    if not check:
        raise ValueError(f"not an ASM array: {check.violation}")
    n = a.n
    return MonotoneTriangle(tuple(tuple(a.get(i, n - k) for i in range(1, k + 1)) for k in range(1, n + 1)))


def asm_to_yplus(a: Asm) -> StaircaseArray:
    return monotone_to_yplus(asm_to_monotone(a))


def yplus_to_asm(a: StaircaseArray) -> Asm:
    return monotone_to_asm(yplus_to_monotone(a))
