"""Plane partitions as height matrices, with the TSSCPP and TSPP encodings.

Symmetry predicates work on the cube-set view, so they are independent of
the height-matrix shortcuts used by the reconstruction code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from ..arrays import StaircaseArray, validate
from ..ideals import OrderIdeal, is_down_closed
from ..poset import TSSCPP_COLORS, ColoredPoset, build_tetra

Cube = tuple[int, int, int]


@dataclass(frozen=True)
class PlanePartition:
    box: tuple[int, int, int]
    heights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a, b, c = self.box
        h = tuple(tuple(int(v) for v in r) for r in self.heights)
        object.__setattr__(self, "heights", h)
        if len(h) != a or any(len(r) != b for r in h):
            raise ValueError(f"height matrix is not {a}x{b}")
        for i in range(a):
            for j in range(b):
                v = h[i][j]
                if not 0 <= v <= c:
                    raise ValueError(f"height {v} at ({i + 1},{j + 1}) outside 0..{c}")
                if j and v > h[i][j - 1] or i and v > h[i - 1][j]:
                    raise ValueError(f"heights increase at ({i + 1},{j + 1})")

    @classmethod
    def from_cubes(cls, cubes, box) -> "PlanePartition":
        a, b, _ = box
        h = [[0] * b for _ in range(a)]
        for i, j, k in cubes:
            h[i - 1][j - 1] = max(h[i - 1][j - 1], k)
        pp = cls(box, tuple(map(tuple, h)))
        if pp.cubes() != frozenset(cubes):
            raise ValueError("cube set is not a plane partition")
        return pp

    def cubes(self) -> frozenset[Cube]:
        return frozenset(
            (i + 1, j + 1, k)
            for i, row in enumerate(self.heights)
            for j, v in enumerate(row)
            for k in range(1, v + 1)
        )

    @property
    def size(self) -> int:
        return sum(map(sum, self.heights))

    def to_json(self) -> dict:
        return {"box": list(self.box), "heights": [list(r) for r in self.heights]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def is_totally_symmetric(pp: PlanePartition) -> bool:
    a, b, c = pp.box
    if not a == b == c:
        return False
    cubes = pp.cubes()
    return all(q in cubes for cube in cubes for q in permutations(cube))


def is_self_complementary(pp: PlanePartition) -> bool:
    a, b, c = pp.box
    cubes = pp.cubes()
    complement = {
        (a + 1 - i, b + 1 - j, c + 1 - k)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
        for k in range(1, c + 1)
        if (i, j, k) not in cubes
    }
    return complement == cubes


def is_tsscpp(pp: PlanePartition) -> bool:
    return pp.box[0] % 2 == 0 and is_totally_symmetric(pp) and is_self_complementary(pp)


def tsscpp_to_yplus(pp: PlanePartition) -> StaircaseArray:
    """Fundamental domain, reflected and rotated, with ``i`` added to row ``i``."""
    if not is_tsscpp(pp):
        raise ValueError("input is not a TSSCPP")
    two_n = pp.box[0]
    n = two_n // 2
    t = pp.heights
    if n and any(t[k - 1][two_n - 1] for k in range(n + 1, two_n + 1)):
        raise AssertionError("last column of the lower half should be empty")
    rows = tuple(
        tuple(i + t[two_n - i - j][two_n - j - 1] for j in range(n - i + 1))
        for i in range(1, n + 1)
    )
    return StaircaseArray(n, "Yplus", rows, TSSCPP_COLORS)


def yplus_to_tsscpp(a: StaircaseArray) -> PlanePartition:
    if a.variant != "Yplus":
        raise ValueError("expected a Yplus array")
    check = validate(a, TSSCPP_COLORS)
    if not check:
        raise ValueError(f"not a TSSCPP array: {check.violation}")
    n = a.n
    m = 2 * n
    # 1-based working matrix; index 0 unused.
    t = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(1, n + 1):
        for j in range(n - i + 1):
            r, c = m + 1 - i - j, m - j
            t[r][c] = t[c][r] = a.get(i, j) - i
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            t[i][j] = m - t[m + 1 - i][m + 1 - j]
    # Mixed quadrant: t[i][j] counts k with (i, k, j) in the partition.
    for i in range(1, n + 1):
        for j in range(n + 1, m + 1):
            v = sum(t[i][k] >= j for k in range(1, n + 1)) + sum(t[j][k] >= i for k in range(n + 1, m + 1))
            t[i][j] = t[j][i] = v
    pp = PlanePartition((m, m, m), tuple(tuple(r[1:]) for r in t[1:]))
    if not is_tsscpp(pp):
        raise AssertionError("reconstruction is not a TSSCPP")
    return pp


def _self_conjugate_rows(m: int) -> list[tuple[int, ...]]:
    """Length-``m`` rows (padded with zeros) whose partition equals its own conjugate."""
    out = []

    def rec(prefix):
        if len(prefix) == m:
            conj = tuple(sum(v >= j for v in prefix) for j in range(1, m + 1))
            if conj == tuple(prefix):
                out.append(tuple(prefix))
            return
        top = prefix[-1] if prefix else m
        for v in range(top + 1):
            rec(prefix + [v])

    rec([])
    return out


def _symmetric_partitions(m: int, self_complementary: bool) -> Iterator[PlanePartition]:
    """Symmetric height matrices in an ``m``-cube whose rows are self-conjugate.

    Those two conditions together are total symmetry; with
    ``self_complementary`` the antipodal rule ``h + h' = m`` is also imposed.
    Candidates are still re-checked on cubes by the callers.
    """
    rows = _self_conjugate_rows(m)
    chosen: dict[int, tuple[int, ...]] = {}

    def fits(r, i):
        for j, other in chosen.items():
            if r[j] != other[i]:
                return False
        if i - 1 in chosen and any(a > b for a, b in zip(r, chosen[i - 1])):
            return False
        if i + 1 in chosen and any(a < b for a, b in zip(r, chosen[i + 1])):
            return False
        return True

    def antipode(r):
        return tuple(m - r[m - 1 - j] for j in range(m))

    def rec(i):
        if len(chosen) == m:
            yield PlanePartition((m, m, m), tuple(chosen[k] for k in range(m)))
            return
        for r in rows:
            if not fits(r, i):
                continue
            chosen[i] = r
            if self_complementary:
                partner = m - 1 - i
                r2 = antipode(r)
                if partner == i or r2 not in rows_set or not fits(r2, partner):
                    del chosen[i]
                    continue
                chosen[partner] = r2
            yield from rec(i + 1)
            if self_complementary:
                del chosen[m - 1 - i]
            del chosen[i]

    rows_set = set(rows)
    yield from rec(0)


def all_tsscpps(n: int) -> Iterator[PlanePartition]:
    """Brute force over symmetric self-complementary height matrices, filtered on cubes."""
    for pp in _symmetric_partitions(2 * n, True):
        if is_tsscpp(pp):
            yield pp


def all_tspps(m: int) -> Iterator[PlanePartition]:
    for pp in _symmetric_partitions(m, False):
        if is_totally_symmetric(pp):
            yield pp


def _wedge_to_coord(cube: Cube) -> tuple[int, int, int]:
    x, y, z = cube
    return (x - y, z - 1, y - z)


def _coord_to_wedge(c) -> Cube:
    c1, c2, c3 = c
    z = c2 + 1
    y = c3 + z
    return (c1 + y, y, z)


def tspp_to_ideal(pp: PlanePartition, p: ColoredPoset | None = None) -> OrderIdeal:
    """Cubes with ``x >= y >= z`` become elements of ``T_n`` (red ~ x, orange ~ y, silver ~ z)."""
    if not is_totally_symmetric(pp):
        raise ValueError("input is not totally symmetric")
    n = pp.box[0] + 1
    p = p if p is not None else build_tetra(n)
    if p.n != n:
        raise ValueError(f"poset is T_{p.n}, box needs T_{n}")
    wedge = [c for c in pp.cubes() if c[0] >= c[1] >= c[2]]
    ideal = OrderIdeal.from_indices((p.index[_wedge_to_coord(c)] for c in wedge), len(p))
    if not is_down_closed(ideal.mask, p):
        raise AssertionError("wedge image is not an order ideal")
    return ideal


def ideal_to_tspp(ideal: OrderIdeal, p: ColoredPoset) -> PlanePartition:
    if not is_down_closed(ideal.mask, p):
        raise ValueError("not an order ideal of the poset")
    m = p.n - 1
    cubes = {q for c in ideal.coords(p) for q in permutations(_coord_to_wedge(c))}
    return PlanePartition.from_cubes(cubes, (m, m, m))


# The seven TSSCPPs in a 6x6x6 box, blanks as zeros.
TSSCPPS_N3 = tuple(
    PlanePartition((6, 6, 6), rows)
    for rows in (
        ((6, 6, 6, 3, 3, 3), (6, 6, 6, 3, 3, 3), (6, 6, 6, 3, 3, 3), (3, 3, 3, 0, 0, 0), (3, 3, 3, 0, 0, 0), (3, 3, 3, 0, 0, 0)),
        ((6, 6, 6, 4, 3, 3), (6, 6, 6, 3, 3, 3), (6, 6, 5, 3, 3, 2), (4, 3, 3, 1, 0, 0), (3, 3, 3, 0, 0, 0), (3, 3, 2, 0, 0, 0)),
        ((6, 6, 6, 4, 3, 3), (6, 6, 6, 4, 3, 3), (6, 6, 4, 3, 2, 2), (4, 4, 3, 2, 0, 0), (3, 3, 2, 0, 0, 0), (3, 3, 2, 0, 0, 0)),
        ((6, 6, 6, 5, 5, 3), (6, 5, 5, 4, 3, 1), (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1, 0), (5, 3, 2, 1, 1, 0), (3, 1, 1, 0, 0, 0)),
        ((6, 6, 6, 5, 5, 3), (6, 5, 5, 3, 3, 1), (6, 5, 5, 3, 3, 1), (5, 3, 3, 1, 1, 0), (5, 3, 3, 1, 1, 0), (3, 1, 1, 0, 0, 0)),
        ((6, 6, 6, 5, 4, 3), (6, 6, 5, 3, 3, 2), (6, 5, 5, 3, 3, 1), (5, 3, 3, 1, 1, 0), (4, 3, 3, 1, 0, 0), (3, 2, 1, 0, 0, 0)),
        ((6, 6, 6, 5, 4, 3), (6, 6, 5, 4, 3, 2), (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1, 0), (4, 3, 2, 1, 0, 0), (3, 2, 1, 0, 0, 0)),
    )
)

# The n = 4 worked example of the fundamental-domain pipeline.
TSSCPP_N4_EXAMPLE = PlanePartition(
    (8, 8, 8),
    (
        (8, 8, 8, 8, 7, 7, 6, 4),
        (8, 8, 7, 7, 5, 4, 4, 2),
        (8, 7, 7, 7, 5, 4, 4, 1),
        (8, 7, 7, 5, 4, 3, 3, 1),
        (7, 5, 5, 4, 3, 1, 1, 0),
        (7, 4, 4, 3, 1, 1, 1, 0),
        (6, 4, 4, 3, 1, 1, 0, 0),
        (4, 2, 1, 1, 0, 0, 0, 0),
    ),
)
