"""Staircase integer arrays encoding order ideals of ``T_n(S)`` when green is in ``S``.

Three variants are used:

* ``X``: rows ``i = 1..n-1``, row ``i`` has cells ``j = 1..n-i`` with ``0 <= x <= j``.
* ``Y``: same shape, ``y = x + i`` so ``i <= y <= i + j``.
* ``Yplus``: a ``Y`` array with an extra column ``j = 0`` holding ``i`` in rows ``1..n``.

Rows are stored exactly as serialized: for ``Yplus`` each row starts with
its column-0 entry.  Indexing through :meth:`StaircaseArray.get` uses
1-based rows and the column numbering above.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .ideals import OrderIdeal, enumerate_ideals, is_down_closed
from .poset import Color, ColoredPoset, ColorSet, build_tetra, restrict

VARIANTS = ("X", "Y", "Yplus")


@dataclass(frozen=True)
class StaircaseArray:
    n: int
    variant: str
    rows: tuple[tuple[int, ...], ...]
    colors: Optional[ColorSet] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        expected = _shape(self.n, self.variant)
        if tuple(len(r) for r in rows) != expected:
            raise ValueError(f"rows {rows} do not have {self.variant} shape {expected} for n={self.n}")

    @classmethod
    def from_rows(cls, rows, variant: str = "Y", colors=None, n: int | None = None) -> "StaircaseArray":
        rows = tuple(tuple(r) for r in rows)
        if n is None:
            n = len(rows) + (0 if variant == "Yplus" else 1)
        if isinstance(colors, str):
            colors = ColorSet.parse(colors)
        return cls(n, variant, rows, colors)

    def get(self, i: int, j: int) -> Optional[int]:
        """Entry in row ``i``, column ``j`` (rows from 1; columns from 0 in Yplus, from 1 otherwise), or ``None`` outside the shape."""
        if i < 1 or i > len(self.rows):
            return None
        offset = 0 if self.variant == "Yplus" else 1
        k = j - offset
        row = self.rows[i - 1]
        if k < 0 or k >= len(row):
            return None
        return row[k]

    def cells(self) -> Iterator[tuple[int, int]]:
        offset = 0 if self.variant == "Yplus" else 1
        for i, row in enumerate(self.rows, start=1):
            for k in range(len(row)):
                yield i, k + offset

    @property
    def weight(self) -> int:
        if self.variant == "X":
            return sum(map(sum, self.rows))
        return sum(v - i for i, row in enumerate(self.rows, start=1) for v in row)

    def with_colors(self, colors) -> "StaircaseArray":
        if isinstance(colors, str):
            colors = ColorSet.parse(colors)
        return StaircaseArray(self.n, self.variant, self.rows, colors)

    def to_json(self) -> dict:
        return {"n": self.n, "variant": self.variant, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "StaircaseArray":
        return cls(int(data["n"]), data["variant"], tuple(tuple(r) for r in data["rows"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self) -> str:
        return " / ".join(",".join(map(str, r)) for r in self.rows)


def _shape(n: int, variant: str) -> tuple[int, ...]:
    if variant == "Yplus":
        return tuple(n - i + 1 for i in range(1, n + 1))
    return tuple(n - i for i in range(1, n))


# Per color: (row offset, column offset, additive slack, strict) meaning
#   a[i, j] <= a[i + di, j + dj] + slack      (``<`` when strict)
# checked wherever both cells exist.
X_PREDICATES: dict[Color, tuple[int, int, int, bool]] = {
    Color.ORANGE: (1, 0, 0, False),
    Color.RED: (-1, 1, 0, False),
    Color.YELLOW: (0, 1, 0, False),
    Color.BLUE: (1, -1, 1, False),
    Color.SILVER: (0, -1, 1, False),
}
Y_PREDICATES: dict[Color, tuple[int, int, int, bool]] = {
    Color.ORANGE: (1, 0, 0, True),
    Color.RED: (-1, 1, 1, False),
    Color.YELLOW: (0, 1, 0, False),
    Color.BLUE: (1, -1, 0, False),
    Color.SILVER: (0, -1, 1, False),
}


@dataclass(frozen=True)
class Validation:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def validate(a: StaircaseArray, s=None) -> Validation:
    """Check bounds and the inequality of every color in ``s`` (defaults to ``a.colors``)."""
    if s is None:
        s = a.colors if a.colors is not None else ColorSet()
    elif isinstance(s, str):
        s = ColorSet.parse(s)
    if a.variant == "Yplus":
        for i in range(1, a.n + 1):
            if a.get(i, 0) != i:
                return Validation(False, f"column 0 entry in row {i} is {a.get(i, 0)}, expected {i}")
        a = yplus_to_y(a)
    low = (lambda i, j: 0) if a.variant == "X" else (lambda i, j: i)
    high = (lambda i, j: j) if a.variant == "X" else (lambda i, j: i + j)
    for i, j in a.cells():
        v = a.get(i, j)
        if not low(i, j) <= v <= high(i, j):
            return Validation(False, f"entry ({i},{j})={v} outside [{low(i, j)}, {high(i, j)}]")
    table = X_PREDICATES if a.variant == "X" else Y_PREDICATES
    for color in s.ordered():
        if color not in table:
            continue
        di, dj, slack, strict = table[color]
        for i, j in a.cells():
            w = a.get(i + di, j + dj)
            if w is None:
                continue
            v = a.get(i, j)
            ok = v < w + slack if strict else v <= w + slack
            if not ok:
                op = "<" if strict else "<="
                rhs = f"a({i + di},{j + dj})" + (f"+{slack}" if slack else "")
                return Validation(False, f"{color.name.lower()}: a({i},{j})={v} {op} {rhs}={w + slack} fails")
    return Validation(True)


def _require_green(s: ColorSet) -> None:
    if Color.GREEN not in s:
        raise ValueError("array encodings need green in the color set")


def _as_colorset(s) -> ColorSet:
    if isinstance(s, ColorSet):
        return s
    if isinstance(s, str):
        return ColorSet.parse(s)
    return ColorSet(s)


def _restricted(p: ColoredPoset, s: ColorSet) -> ColoredPoset:
    return p if p.colors == s else restrict(p, s)


def chain_coord(n: int, i: int, j: int, depth: int) -> tuple[int, int, int]:
    """Element ``depth`` (0-based along green) of the length-``j`` green chain in layer ``P_{i+j}``."""
    return (i - 1, depth, n - i - j)


def ideal_to_x(ideal: OrderIdeal, p: ColoredPoset, s) -> StaircaseArray:
    """Array whose entry ``(i, j)`` counts the ideal's elements on green chain ``(i, j)``."""
    s = _as_colorset(s)
    _require_green(s)
    q = _restricted(p, s)
    if ideal.width != len(q) or not is_down_closed(ideal.mask, q):
        raise ValueError("input is not an order ideal of the restricted poset")
    n, index = p.n, p.index
    rows = []
    for i in range(1, n):
        row = []
        for j in range(1, n - i + 1):
            row.append(sum(1 for d in range(j) if index[chain_coord(n, i, j, d)] in ideal))
        rows.append(tuple(row))
    return StaircaseArray(n, "X", tuple(rows), s)


def x_to_ideal(a: StaircaseArray, p: ColoredPoset, s) -> OrderIdeal:
    s = _as_colorset(s)
    _require_green(s)
    if a.variant != "X":
        raise ValueError("expected an X array")
    check = validate(a, s)
    if not check:
        raise ValueError(f"array violates {{{s}}}: {check.violation}")
    q = _restricted(p, s)
    members = [
        p.index[chain_coord(a.n, i, j, d)]
        for i, j in a.cells()
        for d in range(a.get(i, j))
    ]
    ideal = OrderIdeal.from_indices(members, len(q))
    if not is_down_closed(ideal.mask, q):
        raise AssertionError("valid array produced a set that is not down-closed")
    return ideal


def x_to_y(a: StaircaseArray) -> StaircaseArray:
    if a.variant != "X":
        raise ValueError("expected an X array")
    rows = tuple(tuple(v + i for v in row) for i, row in enumerate(a.rows, start=1))
    return StaircaseArray(a.n, "Y", rows, a.colors)


def y_to_x(a: StaircaseArray) -> StaircaseArray:
    if a.variant != "Y":
        raise ValueError("expected a Y array")
    rows = tuple(tuple(v - i for v in row) for i, row in enumerate(a.rows, start=1))
    return StaircaseArray(a.n, "X", rows, a.colors)


def y_to_yplus(a: StaircaseArray) -> StaircaseArray:
    if a.variant != "Y":
        raise ValueError("expected a Y array")
    rows = tuple((i,) + row for i, row in enumerate(a.rows, start=1)) + ((a.n,),)
    return StaircaseArray(a.n, "Yplus", rows, a.colors)


def yplus_to_y(a: StaircaseArray) -> StaircaseArray:
    if a.variant != "Yplus":
        raise ValueError("expected a Yplus array")
    if tuple(r[0] for r in a.rows) != tuple(range(1, a.n + 1)):
        raise ValueError("column 0 must read 1..n")
    return StaircaseArray(a.n, "Y", tuple(r[1:] for r in a.rows[:-1]), a.colors)


def ideal_to_yplus(ideal: OrderIdeal, p: ColoredPoset, s) -> StaircaseArray:
    return y_to_yplus(x_to_y(ideal_to_x(ideal, p, s)))


def yplus_to_ideal(a: StaircaseArray, p: ColoredPoset, s) -> OrderIdeal:
    return x_to_ideal(y_to_x(yplus_to_y(a)), p, s)


def ideal_arrays(n: int, s, variant: str = "Yplus") -> Iterator[StaircaseArray]:
    """Arrays of every ideal of ``T_n(s)``, in the ideal enumeration order."""
    s = _as_colorset(s)
    p = restrict(build_tetra(n), s)
    convert = {"X": lambda a: a, "Y": x_to_y, "Yplus": lambda a: y_to_yplus(x_to_y(a))}[variant]
    for ideal in enumerate_ideals(p):
        yield convert(ideal_to_x(ideal, p, s))


def enumerate_arrays(n: int, s, variant: str = "X") -> Iterator[StaircaseArray]:
    """Brute force: every array in the entry ranges that passes ``validate``.

    This loops over the full product of ranges, so it is only practical for
    ``n <= 5``.
    """
    s = _as_colorset(s)
    cells = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
    if variant == "X":
        ranges = [range(0, j + 1) for i, j in cells]
    else:
        ranges = [range(i, i + j + 1) for i, j in cells]
    shape = _shape(n, "X")
    for values in product(*ranges):
        rows, k = [], 0
        for length in shape:
            rows.append(tuple(values[k:k + length]))
            k += length
        a = StaircaseArray(n, "Y" if variant == "Yplus" else variant, tuple(rows), s)
        if variant == "Yplus":
            a = y_to_yplus(a)
        if validate(a, s):
            yield a
