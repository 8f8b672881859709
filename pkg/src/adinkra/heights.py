"""Height functions on bipartite colored graphs and single-vertex raise/lower moves."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .graph import BOSON, ColoredGraph, GraphError, default_parity

UP, DOWN = 1, -1


class HeightError(GraphError):
    pass


@dataclass(frozen=True)
class HeightAssignment:
    heights: tuple[int, ...]  # heights[v-1], minimum 0

    def __getitem__(self, v: int) -> int:
        return self.heights[v - 1]

    @property
    def rank_sequence(self) -> tuple[int, ...]:
        counts = Counter(self.heights)
        return tuple(counts.get(h, 0) for h in range(max(self.heights) + 1))

    def levels(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.heights) + 1)]
        for v, h in enumerate(self.heights, 1):
            out[h].append(v)
        return out


def _parity(g: ColoredGraph) -> str:
    parity = default_parity(g)
    if parity is None:
        raise HeightError("graph is not bipartite, so it has no parity assignment")
    return parity


def check_heights(g: ColoredGraph, heights: tuple[int, ...]) -> list[str]:
    """Problems with a full height assignment; empty when it is valid."""
    problems = []
    for e in g.edges:
        d = heights[e.u - 1] - heights[e.v - 1]
        if abs(d) != 1:
            problems.append(f"edge {e.u}-{e.v} spans heights {heights[e.u - 1]} and {heights[e.v - 1]}")
    parity = default_parity(g)
    if parity is not None:
        level_kind: dict[int, str] = {}
        for v, h in enumerate(heights, 1):
            kind = parity[v - 1]
            # bosons and fermions sit on levels of fixed, opposite parity
            slot = h % 2
            expected = level_kind.setdefault(slot, kind)
            if expected != kind:
                problems.append(f"vertex {v} at height {h} mixes bosons and fermions on one level parity")
                break
    return problems


def _normalize(heights) -> tuple[int, ...]:
    low = min(heights)
    return tuple(h - low for h in heights)


def valise(g: ColoredGraph) -> HeightAssignment:
    parity = _parity(g)
    return HeightAssignment(tuple(0 if p == BOSON else 1 for p in parity))


def current_heights(g: ColoredGraph) -> HeightAssignment:
    if g.height is not None:
        return assign_heights(g, dict(enumerate(g.height, 1)))
    return valise(g)


def assign_heights(
    g: ColoredGraph, h: Mapping[int, int], base: HeightAssignment | None = None
) -> HeightAssignment:
    """Override some heights of ``base`` (the graph's own heights, else the valise) and validate."""
    if base is None:
        base = valise(g) if g.height is None else HeightAssignment(_normalize(g.height))
    heights = list(base.heights)
    for v, value in h.items():
        if not 1 <= v <= g.n:
            raise HeightError(f"vertex {v} outside 1..{g.n}")
        heights[v - 1] = int(value)
    problems = check_heights(g, tuple(heights))
    if problems:
        raise HeightError(problems[0])
    return HeightAssignment(_normalize(heights))


def movable_vertices(g: ColoredGraph, h: HeightAssignment) -> dict[str, set[int]]:
    raisable, lowerable = set(), set()
    for v in g.vertices():
        around = {h[w] - h[v] for w in g.neighbors(v)}
        if around == {1}:
            raisable.add(v)
        elif around == {-1}:
            lowerable.add(v)
    return {"raisable": raisable, "lowerable": lowerable}


def move(g: ColoredGraph, h: HeightAssignment, v: int, direction: int | str) -> HeightAssignment:
    if direction in ("up", "raise"):
        direction = UP
    elif direction in ("down", "lower"):
        direction = DOWN
    if direction not in (UP, DOWN):
        raise ValueError(f"direction must be up or down, got {direction!r}")
    movable = movable_vertices(g, h)["raisable" if direction == UP else "lowerable"]
    if v not in movable:
        word = "raised" if direction == UP else "lowered"
        raise HeightError(f"vertex {v} cannot be {word}")
    heights = list(h.heights)
    heights[v - 1] += 2 * direction
    result = HeightAssignment(_normalize(heights))
    assert not check_heights(g, result.heights)
    return result


def lexicographic_order(g: ColoredGraph, h: HeightAssignment) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (h[v], v))


def with_heights(g: ColoredGraph, h: HeightAssignment) -> ColoredGraph:
    parity = g.parity if g.parity is not None else default_parity(g)
    return g.replace(height=h.heights, parity=parity)
