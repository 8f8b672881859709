"""Edge-colored, optionally signed and graded graphs, and the AGF text format.

Vertices are the integers ``1..n``.  Every edge carries a color in ``1..N`` and
a sign (``+1`` solid, ``-1`` dashed).  Parity, when present, is a string of
``b``/``f`` characters indexed by vertex; heights are a tuple of ints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

BOSON = "b"
FERMION = "f"


class GraphError(ValueError):
    """Structural problem with a graph, or a precondition it fails."""


class AGFError(GraphError):
    """Malformed Adinkra Graph Format text."""


@dataclass(frozen=True, order=True)
class Edge:
    color: int
    u: int
    v: int
    sign: int = 1

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Violation:
    vertex: int
    color: int
    count: int

    def __str__(self) -> str:
        return f"vertex {self.vertex} meets {self.count} edges of color {self.color}"


class ColoredGraph:
    """Immutable simple graph with colored, signed edges.

    Edges are kept sorted by ``(color, u, v)`` with ``u < v``.
    """

    def __init__(
        self,
        n: int,
        colors: int,
        edges: Iterable[Edge | tuple],
        parity: str | None = None,
        height: Sequence[int] | None = None,
        labels: Sequence[str] | None = None,
    ):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if colors < 0:
            raise GraphError("color count must be non-negative")
        norm = []
        pairs: set[tuple[int, int]] = set()
        for e in edges:
            if not isinstance(e, Edge):
                u, v, c, *rest = e
                e = Edge(c, u, v, rest[0] if rest else 1)
            u, v = e.u, e.v
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge {u}-{v} has a vertex outside 1..{n}")
            if not 1 <= e.color <= colors:
                raise GraphError(f"edge {u}-{v} has color {e.color} outside 1..{colors}")
            if e.sign not in (1, -1):
                raise GraphError(f"edge {u}-{v} has sign {e.sign}")
            if (u, v) in pairs:
                raise GraphError(f"more than one edge between {u} and {v}")
            pairs.add((u, v))
            norm.append(Edge(e.color, u, v, e.sign))
        if parity is not None:
            parity = str(parity)
            if len(parity) != n or set(parity) - {BOSON, FERMION}:
                raise GraphError("parity must be a string of n 'b'/'f' characters")
        if height is not None:
            height = tuple(int(h) for h in height)
            if len(height) != n:
                raise GraphError("height must give one value per vertex")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("labels must give one string per vertex")
        self._n = n
        self._colors = colors
        self._edges = tuple(sorted(norm))
        self._parity = parity
        self._height = height
        self._labels = labels
        self._incident: dict[int, list[Edge]] = {v: [] for v in range(1, n + 1)}
        for e in self._edges:
            self._incident[e.u].append(e)
            self._incident[e.v].append(e)
        self._by_pair = {e.key: e for e in self._edges}

    @property
    def n(self) -> int:
        return self._n

    @property
    def colors(self) -> int:
        return self._colors

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def parity(self) -> str | None:
        return self._parity

    @property
    def height(self) -> tuple[int, ...] | None:
        return self._height

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def label(self, v: int) -> str:
        return self._labels[v - 1] if self._labels else str(v)

    def incident(self, v: int) -> list[Edge]:
        return self._incident[v]

    def neighbors(self, v: int) -> list[int]:
        return [e.other(v) for e in self._incident[v]]

    def edge(self, v: int, color: int) -> Edge:
        """The unique edge of ``color`` at ``v``; requires a regular coloring there."""
        found = [e for e in self._incident[v] if e.color == color]
        if len(found) != 1:
            raise GraphError(f"vertex {v} meets {len(found)} edges of color {color}")
        return found[0]

    def neighbor(self, v: int, color: int) -> int:
        return self.edge(v, color).other(v)

    def edge_between(self, u: int, v: int) -> Edge | None:
        return self._by_pair.get((min(u, v), max(u, v)))

    def is_boson(self, v: int) -> bool:
        if self._parity is None:
            raise GraphError("graph has no parity assignment")
        return self._parity[v - 1] == BOSON

    def signed(self) -> bool:
        return any(e.sign < 0 for e in self._edges)

    def replace(self, **changes) -> ColoredGraph:
        fields = dict(
            n=self._n,
            colors=self._colors,
            edges=self._edges,
            parity=self._parity,
            height=self._height,
            labels=self._labels,
        )
        fields.update(changes)
        return ColoredGraph(**fields)

    def with_signs(self, signs: Mapping[tuple[int, int], int]) -> ColoredGraph:
        edges = [Edge(e.color, e.u, e.v, signs.get(e.key, e.sign)) for e in self._edges]
        return self.replace(edges=edges)

    def _key(self):
        return (self._n, self._colors, self._edges, self._parity, self._height, self._labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self._n}, colors={self._colors}, edges={len(self._edges)})"


@dataclass(frozen=True)
class ColorPermutations:
    """One involution per color, in one-line notation (``perms[t-1][i-1] = s_t(i)``)."""

    perms: tuple[tuple[int, ...], ...]

    def __getitem__(self, t: int) -> tuple[int, ...]:
        return self.perms[t - 1]

    def __len__(self) -> int:
        return len(self.perms)

    def apply(self, t: int, i: int) -> int:
        return self.perms[t - 1][i - 1]

    def cycles(self, t: int) -> str:
        """Cycle notation, e.g. ``(14)(23)``; entries are space separated past 9 vertices."""
        perm = self.perms[t - 1]
        sep = " " if len(perm) > 9 else ""
        out, seen = [], set()
        for i in range(1, len(perm) + 1):
            if i in seen or perm[i - 1] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(str(j))
                j = perm[j - 1]
            out.append("(" + sep.join(cyc) + ")")
        return "".join(out) or "e"


def validate_regular_coloring(g: ColoredGraph) -> list[Violation]:
    out = []
    for v in g.vertices():
        counts = [0] * (g.colors + 1)
        for e in g.incident(v):
            counts[e.color] += 1
        for t in range(1, g.colors + 1):
            if counts[t] != 1:
                out.append(Violation(v, t, counts[t]))
    return out


def require_regular(g: ColoredGraph) -> None:
    bad = validate_regular_coloring(g)
    if bad:
        raise GraphError(f"coloring is not regular: {bad[0]}" + (f" (+{len(bad) - 1} more)" if len(bad) > 1 else ""))


def color_permutations(g: ColoredGraph) -> ColorPermutations:
    require_regular(g)
    perms = [[0] * g.n for _ in range(g.colors)]
    for e in g.edges:
        perms[e.color - 1][e.u - 1] = e.v
        perms[e.color - 1][e.v - 1] = e.u
    for perm in perms:
        for i, j in enumerate(perm, 1):
            assert j != i and perm[j - 1] == i
    return ColorPermutations(tuple(tuple(p) for p in perms))


def bipartition(g: ColoredGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    side: dict[int, int] = {}
    for start in g.vertices():
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    part1 = tuple(v for v in g.vertices() if side[v] == 0)
    part2 = tuple(v for v in g.vertices() if side[v] == 1)
    return part1, part2


def default_parity(g: ColoredGraph) -> str | None:
    """The stored parity, else bosons on the bipartition side of each component's first vertex."""
    if g.parity is not None:
        return g.parity
    parts = bipartition(g)
    if parts is None:
        return None
    bosons = set(parts[0])
    return "".join(BOSON if v in bosons else FERMION for v in g.vertices())


def perfect_matchings_of(g: ColoredGraph) -> list[list[Edge]]:
    require_regular(g)
    classes: list[list[Edge]] = [[] for _ in range(g.colors)]
    for e in g.edges:
        classes[e.color - 1].append(e)
    return classes


def components(g: ColoredGraph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for start in g.vertices():
        if start in seen:
            continue
        seen.add(start)
        comp, queue = [start], deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: ColoredGraph) -> bool:
    return len(components(g)) == 1


# --- AGF -------------------------------------------------------------------


def format_agf(g: ColoredGraph) -> str:
    lines = [f"n {g.n}", f"colors {g.colors}"]
    if g.parity is not None:
        lines.append(f"parity {g.parity}")
    if g.labels is not None:
        lines += [f"label {v} {g.label(v)}" for v in g.vertices()]
    if g.height is not None:
        lines += [f"height {v} {h}" for v, h in zip(g.vertices(), g.height)]
    for e in g.edges:
        lines.append(f"e {e.u} {e.v} {e.color} {'+' if e.sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise AGFError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_agf(text: str) -> ColoredGraph:
    n = colors = None
    parity = None
    heights: dict[int, int] = {}
    labels: dict[int, str] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if head == "n" and len(args) == 1:
            n = _int(args[0], lineno)
        elif head == "colors" and len(args) == 1:
            colors = _int(args[0], lineno)
        elif head == "parity" and len(args) == 1:
            parity = args[0]
        elif head == "height" and len(args) == 2:
            heights[_int(args[0], lineno)] = _int(args[1], lineno)
        elif head == "label" and len(args) == 2:
            labels[_int(args[0], lineno)] = args[1]
        elif head == "e" and len(args) in (3, 4):
            u, v, c = (_int(a, lineno) for a in args[:3])
            sign = 1
            if len(args) == 4:
                if args[3] not in ("+", "-"):
                    raise AGFError(f"line {lineno}: sign must be '+' or '-'")
                sign = 1 if args[3] == "+" else -1
            if u == v:
                raise AGFError(f"line {lineno}: loop at vertex {u}")
            edges.append(Edge(c, min(u, v), max(u, v), sign))
        else:
            raise AGFError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if n is None or colors is None:
        raise AGFError("missing 'n' or 'colors' line")
    for what, table in (("height", heights), ("label", labels)):
        if table and set(table) != set(range(1, n + 1)):
            raise AGFError(f"{what} lines must cover every vertex exactly once")
    try:
        return ColoredGraph(
            n,
            colors,
            edges,
            parity=parity,
            height=[heights[v] for v in range(1, n + 1)] if heights else None,
            labels=[labels[v] for v in range(1, n + 1)] if labels else None,
        )
    except GraphError as exc:
        raise AGFError(str(exc)) from None
