"""Sundquist's map from SSYT of staircase shape to tournament tableaux.

At step ``i`` every ``i`` (all sitting at the left of row 1) is removed by a
forward jeu-de-taquin slide, rightmost first.  The remaining cells of the
outer strip ``delta_{n-i+1} / delta_{n-i}`` are then column-deleted from
the bottom up.  Everything removed or ejected during step ``i`` becomes row
``i`` of the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arrays import StaircaseArray, validate
from ..poset import ColorSet
from .tournaments import Tournament

GYO = ColorSet("gyo")

Tableau = list[list[int]]


@dataclass(frozen=True)
class TournamentTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def is_valid(self) -> bool:
        for i, row in enumerate(self.rows, start=1):
            if any(v < i for v in row):
                return False
            big = [v for v in row if v > i]
            if len(big) != len(set(big)):
                return False
        return True

    def tournament(self) -> Tournament:
        if not self.is_valid():
            raise ValueError("not a tournament tableau")
        ups = {(i, v) for i, row in enumerate(self.rows, start=1) for v in row if v > i}
        return Tournament(self.n, frozenset(ups))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _slide(t: Tableau, r: int, c: int) -> tuple[int, int]:
    """Forward slide of a hole at ``(r, c)`` (0-based); returns the vacated corner."""
    while True:
        right = t[r][c + 1] if c + 1 < len(t[r]) else None
        below = t[r + 1][c] if r + 1 < len(t) and c < len(t[r + 1]) else None
        if right is None and below is None:
            t[r].pop()
            if not t[r]:
                t.pop()
            return r, c
        if right is None or (below is not None and below <= right):
            t[r][c] = below
            r += 1
        else:
            t[r][c] = right
            c += 1


def _column_delete(t: Tableau, r: int, c: int) -> int:
    """Remove corner ``(r, c)`` and reverse-bump leftward; returns the ejected entry."""
    x = t[r].pop()
    if not t[r]:
        t.pop()
    for col in range(c - 1, -1, -1):
        # Largest entry <= x in this column; columns are strictly increasing.
        best = max(k for k in range(len(t)) if col < len(t[k]) and t[k][col] <= x)
        t[best][col], x = x, t[best][col]
    return x


def _shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


def _delta(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, 0, -1))


def _as_rows(a) -> tuple[tuple[int, ...], ...]:
    if isinstance(a, StaircaseArray):
        if a.variant != "Y":
            raise ValueError("expected a Y array")
        return a.rows
    return tuple(tuple(r) for r in a)


def is_staircase_ssyt(rows, n: int) -> bool:
    if tuple(len(r) for r in rows) != _delta(n):
        return False
    if any(not 1 <= v <= n for r in rows for v in r):
        return False
    if any(x > y for r in rows for x, y in zip(r, r[1:])):
        return False
    return all(rows[k][c] < rows[k + 1][c] for k in range(len(rows) - 1) for c in range(len(rows[k + 1])))


def sundquist(a, n: int | None = None) -> TournamentTableau:
    rows = _as_rows(a)
    if n is None:
        n = a.n if isinstance(a, StaircaseArray) else len(rows) + 1
    if not is_staircase_ssyt(rows, n):
        raise ValueError("input is not an SSYT of staircase shape with entries <= n")
    if isinstance(a, StaircaseArray) and not validate(a, GYO):
        raise AssertionError("SSYT check and {g,y,o} predicates disagree")
    t: Tableau = [list(r) for r in rows]
    out: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        removed: list[int] = []
        inner = _delta(n - i)
        ones = [c for c, v in enumerate(t[0]) if v == i] if t else []
        if any(v == i for r in t[1:] for v in r):
            raise AssertionError(f"entry {i} below the first row at step {i}")
        for c in reversed(ones):
            removed.append(t[0][c])
            r0, c0 = _slide(t, 0, c)
            if r0 < len(inner) and c0 < inner[r0]:
                raise AssertionError(f"slide vacated ({r0 + 1},{c0 + 1}) inside the inner staircase")
        # Strip cells still present, bottom first.
        strip = [(r, len(t[r]) - 1) for r in range(len(t)) if len(t[r]) > (inner[r] if r < len(inner) else 0)]
        for r, c in sorted(strip, reverse=True):
            removed.append(_column_delete(t, r, c))
        if _shape(t) != inner:
            raise AssertionError(f"shape {_shape(t)} after step {i}, expected {inner}")
        out.append(tuple(sorted(removed)))
    return TournamentTableau(tuple(out))


def sundquist_tournament(a, n: int | None = None) -> Tournament:
    return sundquist(a, n).tournament()


def all_staircase_ssyt(n: int):
    """Every SSYT of shape ``delta_n`` with entries at most ``n``, row by row."""
    shape = _delta(n)

    def rows_between(length, lo_row):
        def rec(prefix):
            k = len(prefix)
            if k == length:
                yield tuple(prefix)
                return
            lo = max(prefix[-1] if prefix else 1, lo_row[k] + 1 if lo_row else 1)
            for v in range(lo, n + 1):
                yield from rec(prefix + [v])

        yield from rec([])

    def build(k, acc):
        if k == len(shape):
            yield tuple(acc)
            return
        for r in rows_between(shape[k], acc[-1] if acc else None):
            yield from build(k + 1, acc + [r])

    yield from build(0, [])
