"""Adjacency lists as Latin rectangles, adjacency matrices as semi-magic squares, DOT export.

Columns follow the height order when heights exist (bottom level first,
vertex id within a level), bosons-then-fermions when only a parity exists,
and plain vertex order otherwise.  Dashed edges appear as negative entries.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import BOSON, FERMION, ColoredGraph, Edge, GraphError, require_regular


class LatinError(GraphError):
    pass


def column_order(g: ColoredGraph) -> tuple[list[int], list[int]]:
    """Vertex order and block sizes used by both the list and the matrix."""
    if g.height is not None:
        low = min(g.height)
        key = [h - low for h in g.height]
    elif g.parity is not None:
        key = [0 if p == BOSON else 1 for p in g.parity]
    else:
        return list(g.vertices()), [g.n]
    order = sorted(g.vertices(), key=lambda v: (key[v - 1], v))
    blocks: list[int] = []
    prev = None
    for v in order:
        if key[v - 1] != prev:
            blocks.append(0)
            prev = key[v - 1]
        blocks[-1] += 1
    return order, blocks


def _split(seq: Sequence, blocks: Sequence[int]) -> list[list]:
    out, k = [], 0
    for b in blocks:
        out.append(list(seq[k : k + b]))
        k += b
    return out


@dataclass(frozen=True)
class LatinAdjacencyList:
    columns: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    row_names: tuple[str, ...]
    blocks: tuple[int, ...]
    heights: tuple[int, ...] | None = None  # by vertex id
    parity: str | None = None  # by vertex id

    @property
    def separators(self) -> list[int]:
        """Column indices at which a new level block starts."""
        out, k = [], 0
        for b in self.blocks[:-1]:
            k += b
            out.append(k)
        return out

    def entry(self, row: int, vertex: int) -> int:
        return self.rows[row][self.columns.index(vertex)]

    def format(self, corner: str = "V") -> str:
        cells = [str(c) for c in self.columns] + [str(x) for r in self.rows for x in r]
        w = max(len(c) for c in cells)
        namew = max([len(corner)] + [len(n) for n in self.row_names])

        def line(name: str, values: Sequence[int]) -> str:
            parts = [" ".join(f"{x:>{w}}" for x in chunk) for chunk in _split(values, self.blocks)]
            return f"{name:<{namew}}  " + " | ".join(parts)

        header = line(corner, self.columns)
        out = [header, "-" * len(header)]
        out += [line(name, row) for name, row in zip(self.row_names, self.rows)]
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["color"] + list(self.columns))
        for name, row in zip(self.row_names, self.rows):
            writer.writerow([name] + list(row))
        return buf.getvalue()


def _row_names(g: ColoredGraph, names: Sequence[str] | None) -> tuple[str, ...]:
    if names is None:
        return tuple(str(t) for t in range(1, g.colors + 1))
    if len(names) != g.colors:
        raise ValueError(f"need {g.colors} color names, got {len(names)}")
    return tuple(names)


def to_latin(g: ColoredGraph, color_names: Sequence[str] | None = None) -> LatinAdjacencyList:
    require_regular(g)
    order, blocks = column_order(g)
    rows = []
    for t in range(1, g.colors + 1):
        row = []
        for v in order:
            e = g.edge(v, t)
            row.append(e.sign * e.other(v))
        rows.append(tuple(row))
    return LatinAdjacencyList(
        tuple(order), tuple(rows), _row_names(g, color_names), tuple(blocks), g.height, g.parity
    )


def parse_latin(text: str) -> LatinAdjacencyList:
    """Read the plain-text layout written by :meth:`LatinAdjacencyList.format`.

    Vertical bars mark level blocks; with more than one block the blocks
    become heights 0, 1, 2, ... and alternate bosons (first) and fermions.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and set(ln.strip()) != {"-"}]
    if len(lines) < 2:
        raise LatinError("need a header line and at least one row")

    def cells(ln: str) -> tuple[str, list[int], list[int]]:
        name, *rest = ln.split()
        values, blocks = [], [0]
        for tok in rest:
            if tok == "|":
                blocks.append(0)
                continue
            try:
                values.append(int(tok))
            except ValueError:
                raise LatinError(f"bad entry {tok!r}") from None
            blocks[-1] += 1
        return name, values, blocks

    _, columns, blocks = cells(lines[0])
    rows, names = [], []
    for ln in lines[1:]:
        name, values, row_blocks = cells(ln)
        if len(values) != len(columns):
            raise LatinError(f"row {name!r} has {len(values)} entries, expected {len(columns)}")
        names.append(name)
        rows.append(tuple(values))
    heights = parity = None
    if len(blocks) > 1:
        level = {}
        for b, chunk in enumerate(_split(columns, blocks)):
            for v in chunk:
                level[v] = b
        ids = sorted(columns)
        if ids == list(range(1, len(columns) + 1)):
            heights = tuple(level[v] for v in ids)
            parity = "".join(BOSON if level[v] % 2 == 0 else FERMION for v in ids)
    return LatinAdjacencyList(tuple(columns), tuple(rows), tuple(names), tuple(blocks), heights, parity)


def _check_rectangle(lst: LatinAdjacencyList) -> None:
    labels = set(lst.columns)
    if len(labels) != len(lst.columns):
        raise LatinError("column labels repeat")
    for name, row in zip(lst.row_names, lst.rows):
        if len(row) != len(lst.columns):
            raise LatinError(f"row {name} has the wrong length")
        mags = [abs(x) for x in row]
        if set(mags) != labels or len(set(mags)) != len(mags):
            raise LatinError(f"row {name} is not a permutation of the column labels")
    for k, v in enumerate(lst.columns):
        col = [v] + [abs(r[k]) for r in lst.rows]
        if len(set(col)) != len(col):
            raise LatinError(f"column {v} repeats a symbol")


@dataclass(frozen=True)
class LatinProperties:
    adjacency_ok: bool
    connected: bool
    bipartite_blocks: tuple[tuple[int, ...], tuple[int, ...]] | None
    quadrilateral_pairs: dict[tuple[int, int], bool]

    @property
    def quadrilateral(self) -> bool:
        return all(self.quadrilateral_pairs.values())


def latin_properties(lst: LatinAdjacencyList) -> LatinProperties:
    _check_rectangle(lst)
    col = {v: k for k, v in enumerate(lst.columns)}
    rows = lst.rows

    # v in column w (row r) must be matched by w in column v (same row, same sign)
    adjacency_ok = all(
        rows[r][col[abs(x)]] == (x // abs(x)) * w
        for r in range(len(rows))
        for w, x in zip(lst.columns, rows[r])
    )

    parent = {v: v for v in lst.columns}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in rows:
        for w, x in zip(lst.columns, r):
            parent[find(w)] = find(abs(x))
    connected = len({find(v) for v in lst.columns}) == 1

    side = {lst.columns[0]: 0} if lst.columns else {}
    bipartite = True
    pending = list(lst.columns)
    while pending and bipartite:
        start = pending.pop(0)
        if start not in side:
            side[start] = 0
        stack = [start]
        while stack and bipartite:
            w = stack.pop()
            for r in rows:
                x = abs(r[col[w]])
                if x not in side:
                    side[x] = 1 - side[w]
                    stack.append(x)
                elif side[x] == side[w]:
                    bipartite = False
                    break
    blocks = None
    if bipartite:
        blocks = (
            tuple(sorted(v for v in lst.columns if side[v] == 0)),
            tuple(sorted(v for v in lst.columns if side[v] == 1)),
        )

    pairs = {}
    for a, b in combinations(range(len(rows)), 2):
        ok = True
        for w in lst.columns:
            x, y = abs(rows[a][col[w]]), abs(rows[b][col[w]])
            # the entries x, y of column w reappear swapped in some other column
            if abs(rows[b][col[x]]) != abs(rows[a][col[y]]):
                ok = False
                break
        pairs[a + 1, b + 1] = ok
    return LatinProperties(adjacency_ok, connected, blocks, pairs)


def from_latin(lst: LatinAdjacencyList) -> ColoredGraph:
    _check_rectangle(lst)
    n = len(lst.columns)
    if sorted(lst.columns) != list(range(1, n + 1)):
        raise LatinError("column labels must be the vertices 1..n")
    col = {v: k for k, v in enumerate(lst.columns)}
    edges = {}
    for t, row in enumerate(lst.rows, 1):
        for w, x in zip(lst.columns, row):
            back = row[col[abs(x)]]
            if abs(back) != w or (back < 0) != (x < 0):
                raise LatinError(
                    f"row {lst.row_names[t - 1]}: {x} in column {w} but column {abs(x)} holds {back}"
                )
            u, v = sorted((w, abs(x)))
            edges[u, v] = Edge(t, u, v, -1 if x < 0 else 1)
    return ColoredGraph(n, len(lst.rows), edges.values(), parity=lst.parity, height=lst.heights)


@dataclass(frozen=True)
class SemiMagicMatrix:
    order: tuple[int, ...]
    entries: np.ndarray  # signed color numbers, rows/columns in ``order``
    blocks: tuple[int, ...]
    colors: int

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def line_sum(self) -> int:
        return self.colors * (self.colors + 1) // 2

    def unsigned(self) -> np.ndarray:
        return np.abs(self.entries)

    def adjacency(self) -> np.ndarray:
        return (self.entries != 0).astype(int)

    def color_class(self, t: int) -> np.ndarray:
        return (self.unsigned() == t).astype(int)

    def row_sums(self) -> np.ndarray:
        return self.unsigned().sum(axis=1)

    def column_sums(self) -> np.ndarray:
        return self.unsigned().sum(axis=0)

    def is_semi_magic(self) -> bool:
        a = self.unsigned()
        return (
            np.array_equal(a, a.T)
            and not a.diagonal().any()
            and bool((self.row_sums() == self.line_sum).all())
            and bool((self.column_sums() == self.line_sum).all())
        )

    def _cell(self, x: int, symbolic: bool) -> str:
        if not symbolic or x == 0:
            return str(x)
        return ("-" if x < 0 else "") + f"x{abs(x)}"

    def format(self, symbolic: bool = False) -> str:
        cells = [[self._cell(int(x), symbolic) for x in row] for row in self.entries]
        w = max(len(c) for row in cells for c in row)
        lines = []
        row_chunks = _split(cells, self.blocks)
        for bi, chunk in enumerate(row_chunks):
            for row in chunk:
                parts = [" ".join(f"{c:>{w}}" for c in part) for part in _split(row, self.blocks)]
                lines.append(" | ".join(parts))
            if bi < len(row_chunks) - 1:
                lines.append("-" * len(lines[-1]))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(self.order))
        for v, row in zip(self.order, self.entries):
            writer.writerow([v] + [int(x) for x in row])
        return buf.getvalue()


def to_matrix(g: ColoredGraph) -> SemiMagicMatrix:
    require_regular(g)
    order, blocks = column_order(g)
    pos = {v: k for k, v in enumerate(order)}
    a = np.zeros((g.n, g.n), dtype=int)
    for e in g.edges:
        a[pos[e.u], pos[e.v]] = a[pos[e.v], pos[e.u]] = e.sign * e.color
    m = SemiMagicMatrix(tuple(order), a, tuple(blocks), g.colors)
    assert m.is_semi_magic()
    return m


def from_matrix(m: SemiMagicMatrix) -> ColoredGraph:
    edges = []
    for r, u in enumerate(m.order):
        for c, v in enumerate(m.order):
            x = int(m.entries[r, c])
            if x and u < v:
                if int(m.entries[c, r]) != x:
                    raise GraphError(f"entries for {u},{v} disagree")
                edges.append(Edge(abs(x), u, v, -1 if x < 0 else 1))
    return ColoredGraph(m.n, m.colors, edges)


PALETTE = ["black", "blue", "red", "green", "orange", "purple", "brown", "cyan", "magenta", "gold"]


def export_dot(g: ColoredGraph) -> str:
    lines = ["graph adinkra {"]
    if g.height is not None:
        lines.append("  rankdir=BT;")
    lines.append("  node [shape=circle, width=0.3, fixedsize=true];")
    for v in g.vertices():
        attrs = [f'label="{g.label(v)}"']
        if g.parity is not None:
            if g.is_boson(v):
                attrs.append('style=filled, fillcolor=white')
            else:
                attrs.append('style=filled, fillcolor=black, fontcolor=white')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    if g.height is not None:
        levels: dict[int, list[int]] = {}
        for v, h in zip(g.vertices(), g.height):
            levels.setdefault(h, []).append(v)
        for h in sorted(levels):
            members = "; ".join(str(v) for v in levels[h])
            lines.append(f"  {{ rank=same; {members}; }}")
    for e in g.edges:
        color = PALETTE[(e.color - 1) % len(PALETTE)]
        attrs = [f"color={color}"]
        if e.color > 4:
            attrs.append(f'label="{e.color}"')
        if e.sign < 0:
            attrs.append("style=dashed")
        u, v = e.u, e.v
        if g.height is not None and g.height[u - 1] > g.height[v - 1]:
            u, v = v, u
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
