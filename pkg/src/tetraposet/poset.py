"""Pyramidal and tetrahedral posets with colored edges.

Elements are integer coordinates ``(c1, c2, c3)`` meaning
``c1*r + c2*g + c3*y``.  Each color is an integer move on these
coordinates, and an edge runs from the tail to the head of a move that stays
inside the simplex ``c1 + c2 + c3 <= n - 2``.  The partial order is
reachability along the colored edges.
"""

from __future__ import annotations

import enum
import json
from functools import cached_property
from typing import Iterable, Iterator, Mapping

Coord = tuple[int, int, int]


class Color(enum.Enum):
    RED = "r"
    BLUE = "b"
    GREEN = "g"
    ORANGE = "o"
    YELLOW = "y"
    SILVER = "s"

    @property
    def letter(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _COLOR_ORDER.index(self)

    @property
    def move(self) -> Coord:
        return MOVES[self]

    def __lt__(self, other: "Color") -> bool:
        return self.rank < other.rank

    def __repr__(self) -> str:
        return f"Color.{self.name}"


_COLOR_ORDER = (Color.RED, Color.BLUE, Color.GREEN, Color.ORANGE, Color.YELLOW, Color.SILVER)
COLORS = _COLOR_ORDER

# b = g - r, o = y - r, s = g - y in the (r, g, y) basis.
MOVES: dict[Color, Coord] = {
    Color.RED: (1, 0, 0),
    Color.GREEN: (0, 1, 0),
    Color.YELLOW: (0, 0, 1),
    Color.BLUE: (-1, 1, 0),
    Color.ORANGE: (-1, 0, 1),
    Color.SILVER: (0, 1, -1),
}

_BY_LETTER = {c.letter: c for c in COLORS}


class ColorSet(frozenset):
    """Immutable set of colors, printed in the canonical order r<b<g<o<y<s."""

    def __new__(cls, colors: Iterable[Color | str] = ()):
        items = []
        for c in colors:
            if isinstance(c, str):
                try:
                    c = _BY_LETTER[c.lower()]
                except KeyError:
                    raise ValueError(f"unknown color letter {c!r}") from None
            items.append(c)
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> "ColorSet":
        """Parse letters such as ``"byog"``; order, case, commas and parentheses are ignored."""
        letters = [ch for ch in text if ch not in " ,(){}"]
        return cls(letters)

    @classmethod
    def from_mask(cls, mask: int) -> "ColorSet":
        return cls(c for c in COLORS if mask >> c.rank & 1)

    @classmethod
    def all(cls) -> "ColorSet":
        return cls(COLORS)

    @property
    def mask(self) -> int:
        return sum(1 << c.rank for c in self)

    def ordered(self) -> list[Color]:
        return sorted(self)

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            item = _BY_LETTER.get(item)
        return super().__contains__(item)

    def __or__(self, other) -> "ColorSet":
        return ColorSet(frozenset.__or__(self, other))

    def __and__(self, other) -> "ColorSet":
        return ColorSet(frozenset.__and__(self, other))

    def __sub__(self, other) -> "ColorSet":
        return ColorSet(frozenset.__sub__(self, other))

    def __str__(self) -> str:
        return "".join(c.letter for c in self.ordered())

    def __repr__(self) -> str:
        return f"ColorSet({str(self)!r})"


# (premise, implied color): {r,b} => g, {o,s} => b, {s,y} => g, {r,o} => y
_INDUCTION_RULES = (
    (ColorSet("rb"), Color.GREEN),
    (ColorSet("os"), Color.BLUE),
    (ColorSet("sy"), Color.GREEN),
    (ColorSet("ro"), Color.YELLOW),
)


def is_admissible(s: Iterable[Color | str]) -> bool:
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    return all(not premise <= s or implied in s for premise, implied in _INDUCTION_RULES)


def admissible_closure(s: Iterable[Color | str]) -> ColorSet:
    """Smallest admissible superset of ``s``."""
    current = set(s if isinstance(s, ColorSet) else ColorSet(s))
    changed = True
    while changed:
        changed = False
        for premise, implied in _INDUCTION_RULES:
            if premise <= current and implied not in current:
                current.add(implied)
                changed = True
    return ColorSet(current)


def admissible_sets() -> list[ColorSet]:
    """All 40 admissible color sets, ordered by size then canonical mask."""
    found = [ColorSet.from_mask(m) for m in range(64)]
    found = [s for s in found if is_admissible(s)]
    return sorted(found, key=lambda s: (len(s), [c.rank for c in s.ordered()]))


class ColoredPoset:
    """Elements of ``P_n``, ``T_n`` or a trapezoid ``T_n^k`` with colored edges.

    ``elements`` are in canonical order (lexicographic on
    ``(c1+c2+c3, c1, c2)``); edges are index pairs ``(tail, head)`` grouped by
    color.  Instances are treated as immutable.
    """

    def __init__(
        self,
        n: int,
        kind: str,
        elements: Iterable[Coord],
        edges: Mapping[Color, Iterable[tuple[int, int]]],
        k: int = 0,
        dual: bool = False,
    ):
        self.n = n
        self.kind = kind
        self.k = k
        self.dual = dual
        self.elements: tuple[Coord, ...] = tuple(elements)
        self._edges: dict[Color, tuple[tuple[int, int], ...]] = {
            c: tuple(sorted(edges[c])) for c in COLORS if c in edges
        }

    @property
    def colors(self) -> ColorSet:
        return ColorSet(self._edges)

    @property
    def edges(self) -> dict[Color, tuple[tuple[int, int], ...]]:
        return dict(self._edges)

    def edges_of(self, color: Color | str) -> tuple[tuple[int, int], ...]:
        if isinstance(color, str):
            color = _BY_LETTER[color]
        return self._edges.get(color, ())

    def all_edges(self) -> Iterator[tuple[int, int]]:
        for es in self._edges.values():
            yield from es

    @property
    def num_edges(self) -> int:
        return sum(len(es) for es in self._edges.values())

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[Coord, int]:
        return {c: i for i, c in enumerate(self.elements)}

    @cached_property
    def predecessor_masks(self) -> tuple[int, ...]:
        """Bitmask of direct lower covers (edge tails) for every element."""
        masks = [0] * len(self.elements)
        for t, h in self.all_edges():
            masks[h] |= 1 << t
        return tuple(masks)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        succ: list[set[int]] = [set() for _ in self.elements]
        for t, h in self.all_edges():
            succ[t].add(h)
        return tuple(tuple(sorted(s)) for s in succ)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        """A linear extension.

        Every move raises ``c1 + 3*c2 + 2*c3`` (reversed for duals), so
        sorting by it keeps edges pointing forward and keeps the DP frontier
        narrow.
        """
        sign = -1 if self.dual else 1

        def key(i: int):
            c1, c2, c3 = self.elements[i]
            return (sign * (c1 + 3 * c2 + 2 * c3), i)

        order = tuple(sorted(range(len(self.elements)), key=key))
        pos = {v: p for p, v in enumerate(order)}
        if any(pos[t] >= pos[h] for t, h in self.all_edges()):
            return _kahn_order(len(self.elements), list(self.all_edges()))
        return order

    def is_acyclic(self) -> bool:
        try:
            _kahn_order(len(self.elements), list(self.all_edges()))
        except ValueError:
            return False
        return True

    def same_structure(self, other: "ColoredPoset") -> bool:
        return self.elements == other.elements and self._edges == other._edges

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind if self.kind != "trapezoid" else f"trapezoid({self.k})",
            "elements": [list(c) for c in self.elements],
            "edges": {c.letter: [list(e) for e in es] for c, es in self._edges.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self) -> str:
        tag = f"{self.kind}" + (f"^{self.k}" if self.kind == "trapezoid" else "")
        star = "*" if self.dual else ""
        return f"<ColoredPoset {tag}{star} n={self.n} colors={self.colors} |P|={len(self)} edges={self.num_edges}>"


def _kahn_order(m: int, edges: list[tuple[int, int]]) -> tuple[int, ...]:
    indeg = [0] * m
    out: list[list[int]] = [[] for _ in range(m)]
    for t, h in edges:
        indeg[h] += 1
        out[t].append(h)
    ready = [i for i in range(m) if indeg[i] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != m:
        raise ValueError("colored edge digraph has a cycle")
    return tuple(order)


def _canonical_key(c: Coord):
    return (sum(c), c[0], c[1])


def _build(n: int, kind: str, coords: Iterable[Coord], colors: Iterable[Color], k: int = 0) -> ColoredPoset:
    elements = sorted(coords, key=_canonical_key)
    index = {c: i for i, c in enumerate(elements)}
    edges: dict[Color, list[tuple[int, int]]] = {}
    for color in colors:
        d = MOVES[color]
        es = []
        for i, c in enumerate(elements):
            head = (c[0] + d[0], c[1] + d[1], c[2] + d[2])
            j = index.get(head)
            if j is not None:
                es.append((i, j))
        edges[color] = es
    return ColoredPoset(n, kind, elements, edges, k=k)


def tetra_coords(n: int) -> list[Coord]:
    return [
        (c1, c2, c3)
        for c1 in range(n - 1)
        for c2 in range(n - 1 - c1)
        for c3 in range(n - 1 - c1 - c2)
    ]


def build_tetra(n: int) -> ColoredPoset:
    """The tetrahedral poset ``T_n`` with all six edge colors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _build(n, "tetra", tetra_coords(n), COLORS)


def build_pyramid(n: int) -> ColoredPoset:
    """The pyramidal poset ``P_n`` (the ``c3 = 0`` layer) with red, green, blue edges."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = [c for c in tetra_coords(n) if c[2] == 0]
    return _build(n, "pyramid", coords, (Color.RED, Color.BLUE, Color.GREEN))


def restrict(p: ColoredPoset, s: Iterable[Color | str]) -> ColoredPoset:
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    edges = {c: es for c, es in p.edges.items() if c in s}
    return ColoredPoset(p.n, p.kind, p.elements, edges, k=p.k, dual=p.dual)


def dual(p: ColoredPoset) -> ColoredPoset:
    edges = {c: [(h, t) for t, h in es] for c, es in p.edges.items()}
    return ColoredPoset(p.n, p.kind, p.elements, edges, k=p.k, dual=not p.dual)


def tetra(n: int, s: Iterable[Color | str] | str | None = None) -> ColoredPoset:
    """Shorthand for ``restrict(build_tetra(n), s)``; ``s=None`` keeps every color."""
    p = build_tetra(n)
    if s is None:
        return p
    if isinstance(s, str):
        s = ColorSet.parse(s)
    return restrict(p, s)


def layer_of(c: Coord, n: int) -> int:
    """Index ``j`` of the ``P_j`` copy containing ``c``: layers are fixed ``c3``."""
    return n - c[2]


def truncate_trapezoid(p: ColoredPoset, k: int) -> ColoredPoset:
    """Remove the layers ``P_2 .. P_{k+1}`` and every edge touching them.

    Layer ``P_j`` is the set of elements with ``c3 = n - j``, so the survivors
    are the elements with ``c3 <= n - 2 - k``.
    """
    if p.kind != "tetra":
        raise ValueError("trapezoids are cut from tetrahedral posets")
    if not 0 <= k <= max(p.n - 1, 0):
        raise ValueError(f"k must satisfy 0 <= k <= n-1, got k={k}, n={p.n}")
    if k == 0:
        return p
    keep = [i for i, c in enumerate(p.elements) if c[2] <= p.n - 2 - k]
    remap = {old: new for new, old in enumerate(keep)}
    edges = {
        c: [(remap[t], remap[h]) for t, h in es if t in remap and h in remap]
        for c, es in p.edges.items()
    }
    return ColoredPoset(p.n, "trapezoid", [p.elements[i] for i in keep], edges, k=k, dual=p.dual)


def components(p: ColoredPoset) -> list[list[int]]:
    """Connected components of the underlying undirected graph."""
    parent = list(range(len(p)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in p.all_edges():
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rt] = rh
    groups: dict[int, list[int]] = {}
    for i in range(len(p)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: (len(g), g))


THEOREM_CLASSES = (
    "empty",
    "single",
    "two-opposite",
    "two-adjacent",
    "three-nice",
    "three-exceptional",
    "four",
    "five-a",
    "five-b",
    "six",
)

TWO_OPPOSITE = tuple(ColorSet(x) for x in ("go", "rs", "by"))
# F(J(T_n(S1))) = F(J(T_n*(S2))) = prod C_j(q)
TWO_ADJACENT_PRIMAL = tuple(ColorSet(x) for x in ("bg", "bs", "yo", "gs"))
TWO_ADJACENT_DUAL = tuple(ColorSet(x) for x in ("ry", "rg", "yg", "bo"))
THREE_EXCEPTIONAL = (ColorSet("rgy"), ColorSet("sbg"))
ASM_COLORS = ColorSet("byog")
TSSCPP_COLORS = ColorSet("rgoy")
TSSCPP_FOUR_SETS = tuple(ColorSet(x) for x in ("rgoy", "rbgy", "ysgr", "ysgb", "osbg", "rbgs"))
FIVE_A = (ColorSet("gboys"), ColorSet("rbgoy"))
FIVE_B = (ColorSet("rbsyg"),)


def classify(s: Iterable[Color | str]) -> str:
    """Name of the enumeration class an admissible color set belongs to."""
    s = s if isinstance(s, ColorSet) else ColorSet(s)
    if not is_admissible(s):
        raise ValueError(f"color set {{{s}}} is not admissible")
    size = len(s)
    if size == 0:
        return "empty"
    if size == 1:
        return "single"
    if size == 2:
        return "two-opposite" if s in TWO_OPPOSITE else "two-adjacent"
    if size == 3:
        return "three-exceptional" if s in THREE_EXCEPTIONAL else "three-nice"
    if size == 4:
        return "four"
    if size == 5:
        return "five-a" if s in FIVE_A else "five-b"
    return "six"

