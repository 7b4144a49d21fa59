"""Order ideals of colored posets: enumeration, counting and rank generating functions.

Two independent engines are provided.  ``enumerate_ideals`` walks every
ideal with a branch-on-each-element search; ``count_ideals_fast`` and
``rank_gf`` run a frontier dynamic program over a linear extension, keeping
only the membership of elements that still have undecided successors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .poset import ColoredPoset, Coord
from .polynomials import QPolynomial


@dataclass(frozen=True, order=True)
class OrderIdeal:
    """Down-closed subset stored as a bitmask over the canonical element order."""

    mask: int
    width: int

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __len__(self) -> int:
        return self.size

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def indices(self) -> list[int]:
        return [i for i in range(self.width) if self.mask >> i & 1]

    def coords(self, p: ColoredPoset) -> list[Coord]:
        return [p.elements[i] for i in self.indices()]

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> "OrderIdeal":
        mask = 0
        for i in indices:
            if not 0 <= i < width:
                raise IndexError(f"element index {i} outside poset of size {width}")
            mask |= 1 << i
        return cls(mask, width)

    @classmethod
    def from_coords(cls, coords: Iterable[Coord], p: ColoredPoset) -> "OrderIdeal":
        return cls.from_indices((p.index[tuple(c)] for c in coords), len(p))

    def hex(self) -> str:
        digits = max(1, (self.width + 3) // 4)
        return format(self.mask, f"0{digits}x")

    def to_json(self) -> dict:
        return {"bits": self.hex(), "size": self.size}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def is_down_closed(mask: int, p: ColoredPoset) -> bool:
    """True iff every edge whose head is in ``mask`` also has its tail in ``mask``."""
    return all(not (mask >> h & 1) or (mask >> t & 1) for t, h in p.all_edges())


def _iter_masks(p: ColoredPoset) -> Iterator[int]:
    order = p.topological_order
    preds = [p.predecessor_masks[i] for i in order]
    bits = [1 << i for i in order]
    m = len(order)
    stack = [(0, 0)]
    while stack:
        pos, mask = stack.pop()
        # Elements with a missing lower cover are forced out.
        while pos < m and mask & preds[pos] != preds[pos]:
            pos += 1
        if pos == m:
            yield mask
            continue
        stack.append((pos + 1, mask))
        stack.append((pos + 1, mask | bits[pos]))


def enumerate_ideals(p: ColoredPoset) -> Iterator[OrderIdeal]:
    """Every order ideal of ``p`` exactly once, in increasing bitmask order."""
    width = len(p)
    for mask in sorted(_iter_masks(p)):
        yield OrderIdeal(mask, width)


def count_ideals(p: ColoredPoset) -> int:
    """Exhaustive count of the order ideals of ``p``."""
    return sum(1 for _ in _iter_masks(p))


def rank_gf_enumerated(p: ColoredPoset) -> QPolynomial:
    hist = [0] * (len(p) + 1)
    for mask in _iter_masks(p):
        hist[bin(mask).count("1")] += 1
    return QPolynomial(hist)


def _frontier_plan(p: ColoredPoset):
    """For each step of the linear extension: the element and which bits to forget."""
    order = p.topological_order
    pos = {v: k for k, v in enumerate(order)}
    last_use = {}
    for v in order:
        succ = p.successors[v]
        last_use[v] = max((pos[w] for w in succ), default=pos[v])
    forget_at: list[int] = [0] * len(order)
    for v, k in last_use.items():
        forget_at[k] |= 1 << v
    return [(v, p.predecessor_masks[v], forget_at[k]) for k, v in enumerate(order)]


def count_ideals_fast(p: ColoredPoset) -> int:
    """Count ideals by frontier dynamic programming."""
    states = {0: 1}
    for v, pred, forget in _frontier_plan(p):
        bit = 1 << v
        keep = ~forget
        nxt: dict[int, int] = {}
        for state, c in states.items():
            s0 = state & keep
            nxt[s0] = nxt.get(s0, 0) + c
            if state & pred == pred:
                s1 = (state | bit) & keep
                nxt[s1] = nxt.get(s1, 0) + c
        states = nxt
    return sum(states.values())


def _add_shifted(acc: list[int] | None, poly: list[int], shift: int) -> list[int]:
    need = len(poly) + shift
    if acc is None:
        acc = [0] * need
    elif len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(poly):
        acc[k + shift] += c
    return acc


def rank_gf(p: ColoredPoset, method: str = "dp") -> QPolynomial:
    """Rank generating function ``sum over ideals of q**|I|``.

    ``method="dp"`` runs the frontier program with polynomial-valued states;
    ``method="enumerate"`` histograms the exhaustive stream.
    """
    if method == "enumerate":
        return rank_gf_enumerated(p)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    states: dict[int, list[int]] = {0: [1]}
    for v, pred, forget in _frontier_plan(p):
        bit = 1 << v
        keep = ~forget
        nxt: dict[int, list[int]] = {}
        for state, poly in states.items():
            s0 = state & keep
            nxt[s0] = _add_shifted(nxt.get(s0), poly, 0)
            if state & pred == pred:
                s1 = (state | bit) & keep
                nxt[s1] = _add_shifted(nxt.get(s1), poly, 1)
        states = nxt
    total: list[int] | None = None
    for poly in states.values():
        total = _add_shifted(total, poly, 0)
    return QPolynomial(total or [])


def ideal_from_coords(coords: Iterable[Coord], p: ColoredPoset) -> OrderIdeal:
    """Build an ideal from coordinates, rejecting sets that are not down-closed."""
    ideal = OrderIdeal.from_coords(coords, p)
    if not is_down_closed(ideal.mask, p):
        raise ValueError("coordinate set is not an order ideal")
    return ideal
