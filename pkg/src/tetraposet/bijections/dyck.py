"""Dyck paths and order ideals of ``P_n({b,g})``.

``P_n({b,g})`` is the set of intervals ``[c1, c1 + c2]`` inside ``[0, n-2]``
ordered by containment.  The path's ``c``-th down step sits at height
``h_c`` (number of up steps before it); the cells strictly under the path in
column ``c`` become the elements ``(c, r - 1 - c, 0)`` for ``c < r - 1 < h_c - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ..ideals import OrderIdeal, is_down_closed
from ..poset import ColoredPoset, ColorSet, build_pyramid, restrict

BG = ColorSet("bg")


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        steps = self.steps.upper()
        object.__setattr__(self, "steps", steps)
        if set(steps) - {"U", "D"}:
            raise ValueError("steps must be U or D")
        height = 0
        for s in steps:
            height += 1 if s == "U" else -1
            if height < 0:
                raise ValueError(f"path {steps} goes below the axis")
        if height:
            raise ValueError(f"path {steps} is unbalanced")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Up steps seen before each down step."""
        out, ups = [], 0
        for s in self.steps:
            if s == "U":
                ups += 1
            else:
                out.append(ups)
        return out

    @property
    def area(self) -> int:
        """Full unit squares between the path and the lowest path ``(UD)^n``."""
        return sum(h - c - 1 for c, h in enumerate(self.heights()))

    def __str__(self) -> str:
        return self.steps


def all_dyck_paths(n: int) -> Iterator[DyckPath]:
    for ups in combinations(range(2 * n), n):
        chosen = set(ups)
        steps = "".join("U" if k in chosen else "D" for k in range(2 * n))
        try:
            yield DyckPath(steps)
        except ValueError:
            continue


def catalan_poset(n: int) -> ColoredPoset:
    return restrict(build_pyramid(n), BG)


def dyck_to_ideal(d: DyckPath, p: ColoredPoset | None = None) -> OrderIdeal:
    p = p if p is not None else catalan_poset(d.n)
    if p.n != d.n:
        raise ValueError(f"path has n={d.n}, poset has n={p.n}")
    coords = [(c, r - 1 - c, 0) for c, h in enumerate(d.heights()) for r in range(c + 1, h)]
    ideal = OrderIdeal.from_indices((p.index[c] for c in coords), len(p))
    if not is_down_closed(ideal.mask, p):
        raise AssertionError("cells under a Dyck path must form an order ideal")
    return ideal


def ideal_to_dyck(ideal: OrderIdeal, p: ColoredPoset) -> DyckPath:
    if not is_down_closed(ideal.mask, p):
        raise ValueError("not an order ideal")
    n = p.n
    per_column = [0] * n
    for c1, _, _ in ideal.coords(p):
        per_column[c1] += 1
    steps, ups = [], 0
    for c, k in enumerate(per_column):
        target = c + 1 + k
        steps.append("U" * (target - ups) + "D")
        ups = target
    return DyckPath("".join(steps))
