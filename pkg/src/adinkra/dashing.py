"""Totally odd dashings: validation, the hypercube sign-group dashing, and the full solution space."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .constructors import MAX_CUBE_DIMENSION, build_hypercube
from .gf2code import solve_linear_system
from .graph import ColoredGraph, Edge, GraphError
from .structure import require_quadrilateral

MAX_ENUMERATED_DASHINGS = 1 << 20


@dataclass(frozen=True)
class Square:
    """A bicolor 4-cycle for colors ``i < j``, listed from its smallest vertex."""

    colors: tuple[int, int]
    vertices: tuple[int, int, int, int]
    edges: tuple[Edge, Edge, Edge, Edge]

    @property
    def dashes(self) -> int:
        return sum(e.sign < 0 for e in self.edges)

    def __str__(self) -> str:
        i, j = self.colors
        return f"colors {i},{j} square {'-'.join(map(str, self.vertices))}: {self.dashes} dashed"


def bicolor_squares(g: ColoredGraph) -> list[Square]:
    """All bicolor 4-cycles, ordered by ``(i, j, smallest vertex)``."""
    require_quadrilateral(g)
    out = []
    for i, j in combinations(range(1, g.colors + 1), 2):
        seen: set[int] = set()
        for v in g.vertices():
            if v in seen:
                continue
            a = g.neighbor(v, i)
            b = g.neighbor(a, j)
            c = g.neighbor(v, j)
            seen.update((v, a, b, c))
            edges = (g.edge(v, i), g.edge(a, j), g.edge(c, i), g.edge(v, j))
            out.append(Square((i, j), (v, a, b, c), edges))
    return out


def validate_totally_odd(g: ColoredGraph) -> list[Square]:
    return [sq for sq in bicolor_squares(g) if sq.dashes % 2 == 0]


def canonical_sign(g_bits: int, i: int, N: int) -> int:
    """Sign of ``e_i g`` for the monomial ``g`` whose factors are the 1-coordinates of ``g_bits``."""
    before = g_bits >> (N - i + 1)  # coordinates 1..i-1
    return -1 if before.bit_count() % 2 else 1


def canonical_dashing_hypercube(N: int) -> ColoredGraph:
    if not 1 <= N <= MAX_CUBE_DIMENSION:
        raise GraphError(f"hypercube dimension must be in 1..{MAX_CUBE_DIMENSION}, got {N}")
    q = build_hypercube(N)
    signs = {}
    for e in q.edges:
        g_bits = int(q.label(e.u), 2)  # e.u has a 0 in coordinate e.color
        signs[e.key] = canonical_sign(g_bits, e.color, N)
    return q.with_signs(signs)


@dataclass(frozen=True)
class DashingSystem:
    """The affine GF(2) system ``sum of the four edge bits = 1`` on every bicolor square.

    Bit ``k`` of a solution mask is 1 when ``edges[k]`` is dashed.
    """

    edges: tuple[Edge, ...]
    squares: tuple[Square, ...]
    consistent: bool
    rank: int
    particular: int | None
    nullspace: tuple[int, ...]

    @property
    def solution_count(self) -> int:
        return 1 << (len(self.edges) - self.rank) if self.consistent else 0

    def assignment(self, mask: int) -> dict[tuple[int, int], int]:
        return {e.key: -1 if mask >> k & 1 else 1 for k, e in enumerate(self.edges)}

    def sign_string(self, mask: int) -> str:
        return "".join("-" if mask >> k & 1 else "+" for k in range(len(self.edges)))

    def combine(self, coefficients: int) -> int:
        """The solution ``particular + sum of the nullspace vectors selected by coefficients``."""
        if not self.consistent:
            raise GraphError("no totally odd dashing exists")
        mask = self.particular
        for k, vec in enumerate(self.nullspace):
            if coefficients >> k & 1:
                mask ^= vec
        return mask

    def solutions(self) -> Iterator[int]:
        count = self.solution_count
        if count > MAX_ENUMERATED_DASHINGS:
            raise GraphError(
                f"refusing to enumerate {count} dashings (limit {MAX_ENUMERATED_DASHINGS})"
            )
        for c in range(count if self.consistent else 0):
            yield self.combine(c)


def solve_dashings(g: ColoredGraph) -> DashingSystem:
    squares = bicolor_squares(g)
    edges = g.edges
    position = {e.key: k for k, e in enumerate(edges)}
    rows = []
    for sq in squares:
        row = 0
        for e in sq.edges:
            row |= 1 << position[e.key]
        rows.append(row)
    consistent, rank, particular, nullspace = solve_linear_system(
        rows, [1] * len(rows), len(edges)
    )
    return DashingSystem(edges, tuple(squares), consistent, rank, particular, tuple(nullspace))


def apply_dashing(
    g: ColoredGraph, solution: Mapping[tuple[int, int], int] | Sequence[int]
) -> ColoredGraph:
    """Replace every edge sign; ``solution`` maps ``(u, v)`` to ``±1`` or lists signs in edge order."""
    if isinstance(solution, Mapping):
        missing = [e.key for e in g.edges if e.key not in solution]
        if missing:
            raise GraphError(f"no sign given for edge {missing[0]}")
        signs = dict(solution)
    else:
        if len(solution) != len(g.edges):
            raise GraphError(f"expected {len(g.edges)} signs, got {len(solution)}")
        signs = {e.key: s for e, s in zip(g.edges, solution)}
    return g.with_signs(signs)
