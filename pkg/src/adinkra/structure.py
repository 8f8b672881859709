"""Bicolor cycles, the exchange group, and recovering the code of a quadrilateral graph."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Sequence

import numpy as np

from .gf2code import BitVector, LinearCode, rref_basis
from .graph import ColoredGraph, GraphError, color_permutations, is_connected, require_regular

DEFAULT_GROUP_CAP = 10**6


@dataclass(frozen=True)
class BicolorReport:
    n: int
    colors: int
    cycles: dict[tuple[int, int], tuple[int, ...]]  # sorted cycle lengths per pair (i, j), i < j

    def m(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return lcm(*(length // 2 for length in self.cycles[i, j]))

    @property
    def m_table(self) -> dict[tuple[int, int], int]:
        return {pair: self.m(*pair) for pair in self.cycles}

    def format(self) -> str:
        lines = ["pair  m   cycle lengths"]
        for (i, j), lengths in self.cycles.items():
            lines.append(f"{i},{j}  {self.m(i, j):<3} {' '.join(map(str, lengths))}")
        return "\n".join(lines)


def _cycles_for_pair(g: ColoredGraph, i: int, j: int) -> tuple[int, ...]:
    seen = [False] * (g.n + 1)
    lengths = []
    for start in g.vertices():
        if seen[start]:
            continue
        length, v, color = 0, start, i
        while True:
            seen[v] = True
            v = g.neighbor(v, color)
            color = j if color == i else i
            length += 1
            if v == start and color == i:
                break
        lengths.append(length)
    return tuple(sorted(lengths))


def bicolor_report(g: ColoredGraph) -> BicolorReport:
    require_regular(g)
    cycles = {
        (i, j): _cycles_for_pair(g, i, j)
        for i, j in combinations(range(1, g.colors + 1), 2)
    }
    return BicolorReport(g.n, g.colors, cycles)


def is_quadrilateral(g: ColoredGraph) -> bool:
    return all(m == 2 for m in bicolor_report(g).m_table.values())


def require_quadrilateral(g: ColoredGraph) -> None:
    if not is_quadrilateral(g):
        raise GraphError("coloring does not have the quadrilateral property")


def is_perfect_1factorization(g: ColoredGraph) -> bool:
    report = bicolor_report(g)
    return all(lengths == (g.n,) for lengths in report.cycles.values())


@dataclass(frozen=True)
class ExchangeGroupSummary:
    order: int | None  # None when the cap was hit
    abelian: bool
    elementary_abelian_2: bool
    cap: int
    element_orders: dict[int, int] = field(default_factory=dict)  # order -> count, when complete

    @property
    def exceeded(self) -> bool:
        return self.order is None

    @property
    def max_element_order(self) -> int | None:
        return max(self.element_orders) if self.element_orders else None

    @property
    def dihedral(self) -> bool | None:
        """Order ``2m`` with an element of order ``m`` (the group is generated by involutions)."""
        if self.order is None or self.order < 4:
            return None if self.order is None else False
        m = self.max_element_order
        return m is not None and self.order == 2 * m

    def format(self) -> str:
        order = "exceeded cap" if self.order is None else str(self.order)
        lines = [
            f"order: {order}",
            f"abelian: {'yes' if self.abelian else 'no'}",
            f"elementary abelian 2-group: {'yes' if self.elementary_abelian_2 else 'no'}",
        ]
        if self.element_orders:
            lines.append(f"max element order: {self.max_element_order}")
            lines.append(f"dihedral: {'yes' if self.dihedral else 'no'}")
        return "\n".join(lines)


def _perm_order(p: np.ndarray) -> int:
    ident = np.arange(len(p))
    q, k = p, 1
    while not np.array_equal(q, ident):
        q = p[q]
        k += 1
    return k


def exchange_group(g: ColoredGraph, cap: int = DEFAULT_GROUP_CAP) -> ExchangeGroupSummary:
    perms = color_permutations(g)
    gens = [np.array(p, dtype=np.uint16) - 1 for p in perms.perms]
    n = g.n
    abelian = all(np.array_equal(a[b], b[a]) for a, b in combinations(gens, 2))
    elementary = abelian and all(
        np.array_equal((a[b])[a[b]], np.arange(n)) for a, b in combinations(gens, 2)
    )

    ident = np.arange(n, dtype=np.uint16)
    seen = {ident.tobytes()}
    frontier = [ident]
    elements = [ident]
    exceeded = False
    while frontier and not exceeded:
        nxt = []
        for x in frontier:
            for s in gens:
                y = s[x]  # s after x
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(y)
                    elements.append(y)
                    if len(seen) > cap:
                        exceeded = True
                        break
            if exceeded:
                break
        frontier = nxt
    if exceeded:
        return ExchangeGroupSummary(None, abelian, elementary, cap)
    orders: dict[int, int] = {}
    for x in elements:
        k = _perm_order(x)
        orders[k] = orders.get(k, 0) + 1
    return ExchangeGroupSummary(len(seen), abelian, elementary, cap, dict(sorted(orders.items())))


def act_on_labels(perm: Sequence[int], labels: str) -> str:
    """Move the label in position ``i`` to position ``perm(i)``."""
    out = [""] * len(labels)
    for i, ch in enumerate(labels, 1):
        out[perm[i - 1] - 1] = ch
    return "".join(out)


def compose(*perms: Sequence[int]) -> tuple[int, ...]:
    """Product of one-line permutations, rightmost applied first."""
    n = len(perms[0])
    result = list(range(1, n + 1))
    for p in reversed(perms):
        result = [p[x - 1] for x in result]
    return tuple(result)


def walk_endpoint(g: ColoredGraph, walk: Sequence[int], start: int) -> int:
    v = start
    for t in walk:
        if not 1 <= t <= g.colors:
            raise GraphError(f"color {t} outside 1..{g.colors}")
        v = g.neighbor(v, t)
    return v


def reduce_walk(g: ColoredGraph, walk: Sequence[int], start: int) -> BitVector:
    """Colors used an odd number of times along ``walk``, as a length-N vector."""
    require_quadrilateral(g)
    end = walk_endpoint(g, walk, start)
    value = 0
    for t in walk:
        value ^= 1 << (g.colors - t)
    reduced = BitVector(g.colors, value)
    assert walk_endpoint(g, reduced.support(), start) == end
    return reduced


def _code_from(g: ColoredGraph, base: int) -> LinearCode:
    N = g.colors
    label = {base: 0}
    queue = [base]
    for v in queue:
        for t in range(1, N + 1):
            w = g.neighbor(v, t)
            if w not in label:
                label[w] = label[v] ^ (1 << (N - t))
                queue.append(w)
    words = [
        BitVector(N, label[e.u] ^ label[e.v] ^ (1 << (N - e.color))) for e in g.edges
    ]
    return rref_basis(words, N)


def extract_code(
    g: ColoredGraph, base: int = 1, checks: int = 3, seed: int = 0
) -> LinearCode:
    """The code ``C`` with ``g`` isomorphic to the quotient ``Q_N / C``.

    The result is recomputed from ``checks`` randomly chosen base vertices
    and must agree with the one from ``base``.
    """
    if g.colors < 1:
        raise GraphError("graph has no colors")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    require_quadrilateral(g)
    code = _code_from(g, base)
    rng = random.Random(seed)
    for _ in range(checks):
        other = _code_from(g, rng.randint(1, g.n))
        if other != code:
            raise AssertionError("extracted code depends on the base vertex")
    return code
