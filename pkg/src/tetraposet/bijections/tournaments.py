"""Tournaments and the arrays ``Yplus({b,r,(g)})``.

Entry ``(i, j)`` with ``j >= 1`` records the game between ``i`` and
``i + j``: it equals its southwest neighbour for an upset (the larger label
won) and is one less otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, prod
from typing import Iterator

from ..arrays import StaircaseArray, validate
from ..poset import ColorSet
from .stats import compute_stats

BRG = ColorSet("brg")
BRGY = ColorSet("brgy")


@dataclass(frozen=True)
class Tournament:
    n: int
    upsets: frozenset[tuple[int, int]]

    def __post_init__(self):
        ups = frozenset((int(i), int(j)) for i, j in self.upsets)
        object.__setattr__(self, "upsets", ups)
        for i, j in ups:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"upset ({i},{j}) is not a pair i < j in 1..{self.n}")

    def is_upset(self, i: int, j: int) -> bool:
        return (i, j) in self.upsets

    def wins(self, v: int) -> int:
        """Games won by ``v``."""
        return sum(
            (u > v and not self.is_upset(v, u)) or (u < v and self.is_upset(u, v))
            for u in range(1, self.n + 1)
            if u != v
        )

    def upsets_with(self, v: int, lo: int, hi: int) -> int:
        """Upsets vertex ``v`` won against opponents ``lo..hi``."""
        return sum(self.is_upset(u, v) for u in range(lo, hi + 1))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in sorted(self.upsets)]

    @classmethod
    def from_json(cls, n: int, data) -> "Tournament":
        return cls(n, frozenset(tuple(p) for p in data))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def all_tournaments(n: int) -> Iterator[Tournament]:
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Tournament(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def tournament_to_yplus(t: Tournament) -> StaircaseArray:
    n = t.n
    rows: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(n, 0, -1):
        rows[i] = [i]
        for j in range(1, n - i + 1):
            sw = rows[i + 1][j - 1]
            rows[i].append(sw if t.is_upset(i, i + j) else sw - 1)
    return StaircaseArray(n, "Yplus", tuple(tuple(r) for r in rows[1:]), BRG)


def yplus_to_tournament(a: StaircaseArray) -> Tournament:
    check = validate(a, BRG)
    if not check:
        raise ValueError(f"not a {{b,r,(g)}} array: {check.violation}")
    ups = {(i, i + j) for i, j in a.cells() if j >= 1 and a.get(i, j) == a.get(i + 1, j - 1)}
    return Tournament(a.n, frozenset(ups))


def is_tsscpp_tournament(t: Tournament) -> bool:
    """Upsets of ``v`` against ``u..v-1`` bound those of ``v-1`` against ``u..v-2``."""
    for v in range(2, t.n + 1):
        for u in range(1, v):
            if t.upsets_with(v - 1, u, v - 2) > t.upsets_with(v, u, v - 1):
                return False
    return True


def _require_yplus(a: StaircaseArray) -> None:
    if a.variant != "Yplus":
        raise ValueError("expected a Yplus array")


def rows_weakly_increase(a: StaircaseArray) -> bool:
    return all(x <= y for r in a.rows for x, y in zip(r, r[1:]))


def normalize_rows(a: StaircaseArray) -> StaircaseArray:
    """Sort rows bottom-up, swapping out-of-order neighbours with their whole northeast diagonals."""
    _require_yplus(a)
    check = validate(a, BRG)
    if not check:
        raise ValueError(f"not a {{b,r,(g)}} array: {check.violation}")
    n = a.n
    grid = [list(r) for r in a.rows]  # grid[i-1][j] is entry (i, j)
    for i in range(n - 1, 0, -1):
        width = n - i + 1
        changed = True
        while changed:
            changed = False
            for j in range(width - 1):
                if grid[i - 1][j] <= grid[i - 1][j + 1]:
                    continue
                # Only possible where the southwest neighbours agree.
                if j == 0 or grid[i][j - 1] != grid[i][j]:
                    raise AssertionError(f"row {i} is out of order above unequal neighbours")
                m = 0
                while i - m >= 1 and j + 1 + m < len(grid[i - 1 - m]):
                    r = grid[i - 1 - m]
                    r[j + m], r[j + 1 + m] = r[j + 1 + m], r[j + m]
                    m += 1
                changed = True
    out = StaircaseArray(n, "Yplus", tuple(tuple(r) for r in grid), BRGY)
    if not validate(out, BRGY):
        raise AssertionError("normalized array lost the blue/red conditions")
    return out


def row_shuffles(a: StaircaseArray) -> list[StaircaseArray]:
    """Arrays with the same row contents as ``a`` that satisfy blue and red."""
    _require_yplus(a)
    n = a.n
    found: list[StaircaseArray] = []
    grid: list[tuple[int, ...]] = [()] * n
    grid[n - 1] = a.rows[n - 1]

    def rec(i):
        if i == 0:
            cand = StaircaseArray(n, "Yplus", tuple(grid), BRG)
            if validate(cand, BRG):
                found.append(cand)
            return
        below = grid[i]
        head, rest = a.rows[i - 1][0], a.rows[i - 1][1:]
        for perm in sorted(set(permutations(rest))):
            if all(below[j] - 1 <= v <= below[j] for j, v in enumerate(perm)):
                grid[i - 1] = (head,) + perm
                rec(i - 1)

    rec(n - 1)
    return found


def fiber_size(a: StaircaseArray) -> int:
    """Product over rows ``i`` and values ``k`` of ``C(C_{i+1,k}, E_{i,k})``."""
    st = compute_stats(a)
    return prod(comb(st.C_ik.get((i + 1, k), 0), e) for (i, k), e in st.E_ik.items())
