"""Equality, content and ``N`` statistics of ``Yplus`` arrays.

An entry ``(i, j)`` with ``j >= 1`` *has an equality* when it equals its
southwest neighbour ``(i + 1, j - 1)``; it lies on diagonal ``d = i + j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..arrays import StaircaseArray


@dataclass(frozen=True)
class ArrayStats:
    n: int
    E_ik: dict[tuple[int, int], int]
    E_row: tuple[int, ...]
    E_diag: tuple[int, ...]
    C_ik: dict[tuple[int, int], int]
    C: tuple[int, ...]
    N: int

    @property
    def E(self) -> int:
        return sum(self.E_row)

    def E_of(self, i: int) -> int:
        """Equalities in row ``i`` (1-based)."""
        return self.E_row[i - 1]

    def E_sup(self, d: int) -> int:
        """Equalities on diagonal ``d`` (1-based)."""
        return self.E_diag[d - 1]

    def C_of(self, k: int) -> int:
        return self.C[k - 1]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "E": self.E,
            "E_row": list(self.E_row),
            "E_diag": list(self.E_diag),
            "E_ik": [[i, k, v] for (i, k), v in sorted(self.E_ik.items())],
            "C": list(self.C),
            "C_ik": [[i, k, v] for (i, k), v in sorted(self.C_ik.items())],
            "N": self.N,
        }


def equalities(a: StaircaseArray) -> list[tuple[int, int]]:
    """Cells ``(i, j)`` equal to their southwest neighbour."""
    return [(i, j) for i, j in a.cells() if j >= 1 and a.get(i, j) == a.get(i + 1, j - 1)]


def compute_stats(a: StaircaseArray) -> ArrayStats:
    if a.variant != "Yplus":
        raise ValueError("statistics are defined on Yplus arrays")
    n = a.n
    e_ik: Counter = Counter()
    e_row = [0] * n
    e_diag = [0] * n
    for i, j in equalities(a):
        e_ik[i, a.get(i, j)] += 1
        e_row[i - 1] += 1
        e_diag[i + j - 1] += 1
    c_ik: Counter = Counter((i, a.get(i, j)) for i, j in a.cells())
    c = [0] * n
    for (_, k), v in c_ik.items():
        c[k - 1] += v
    neg = sum(
        1
        for i, j in a.cells()
        if j >= 1 and a.get(i, j - 1) < a.get(i, j) < a.get(i + 1, j - 1)
    )
    return ArrayStats(n, dict(e_ik), tuple(e_row), tuple(e_diag), dict(c_ik), tuple(c), neg)
