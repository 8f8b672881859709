"""Builders for the standard colored graph families.

Hypercube and quotient vertices are numbered by their bitstring in
lexicographic order (vertex 1 is ``0...0``) and labeled with that bitstring.
"""

from __future__ import annotations

from .gf2code import (
    MAX_LENGTH,
    BitVector,
    CodeError,
    LinearCode,
    classify,
    has_low_weight_word,
    rref_basis,
    zero_code,
)
from .graph import BOSON, FERMION, ColoredGraph, Edge, GraphError

MAX_CUBE_DIMENSION = 16


def build_hypercube(N: int) -> ColoredGraph:
    if not 1 <= N <= MAX_CUBE_DIMENSION:
        raise GraphError(f"hypercube dimension must be in 1..{MAX_CUBE_DIMENSION}, got {N}")
    return build_quotient(N, zero_code(N))


def build_quotient(N: int, code: LinearCode) -> ColoredGraph:
    """The quotient of ``Q_N`` by ``code``, colored by the parallel coloring.

    Each coset is represented by its lexicographically smallest member.
    """
    if not 1 <= N <= MAX_LENGTH:
        raise GraphError(f"N must be in 1..{MAX_LENGTH}, got {N}")
    if code.length != N:
        raise CodeError(f"code has length {code.length}, expected {N}")
    bad = has_low_weight_word(code)
    if bad is not None:
        kind = "a loop" if bad.weight == 1 else "a multiple edge"
        raise CodeError(f"codeword {bad} has weight {bad.weight}; the quotient would have {kind}")
    free = N - code.dimension
    if free > MAX_CUBE_DIMENSION:
        raise GraphError(f"quotient would have 2^{free} vertices (limit 2^{MAX_CUBE_DIMENSION})")

    pivots = {r.bit_length() - 1 for r in code.rows}
    free_bits = [b for b in range(N) if b not in pivots]
    reps = []
    for m in range(1 << free):
        x = 0
        for k, b in enumerate(free_bits):
            if m >> k & 1:
                x |= 1 << b
        reps.append(x)
    reps.sort()
    index = {x: i + 1 for i, x in enumerate(reps)}

    edges = []
    for x in reps:
        for i in range(1, N + 1):
            y = code.reduce(x ^ (1 << (N - i)))
            if x < y:
                edges.append(Edge(i, index[x], index[y]))

    parity = None
    if classify(code).even:
        parity = "".join(BOSON if x.bit_count() % 2 == 0 else FERMION for x in reps)
    labels = [format(x, f"0{N}b") for x in reps]
    return ColoredGraph(len(reps), N, edges, parity=parity, labels=labels)


def build_folded_cube(N: int) -> ColoredGraph:
    if N < 3:
        raise GraphError(f"folded cube needs N >= 3, got {N}")
    return build_quotient(N, rref_basis([BitVector(N, (1 << N) - 1)]))


def build_complete_even(m: int) -> ColoredGraph:
    """``K_{2m}`` with the rotational 1-factorization.

    Polygon vertices ``0..2m-2`` become vertices ``1..2m-1`` and the center is
    vertex ``2m``.  Color ``t`` is the radial edge to polygon vertex ``t-1``
    plus every chord ``{a, b}`` with ``a + b = 2(t-1) mod (2m-1)``.
    """
    if m < 2:
        raise GraphError(f"K_2m needs m >= 2, got {m}")
    p = 2 * m - 1
    center = 2 * m
    edges = []
    for t in range(1, p + 1):
        edges.append(Edge(t, t, center))
        for a in range(p):
            b = (2 * (t - 1) - a) % p
            if a < b:
                edges.append(Edge(t, a + 1, b + 1))
    return ColoredGraph(2 * m, p, edges)


def build_complete_bipartite(n: int) -> ColoredGraph:
    """``K_{n,n}`` with ``v_i`` as vertex ``i``, ``w_j`` as vertex ``n+j``.

    The edge ``v_i w_j`` gets color ``((i + j - 2) mod n) + 1``: ``v_1`` runs
    through the colors in order starting at ``w_1``, and each later ``v_i``
    starts one color further along.
    """
    if n < 1:
        raise GraphError(f"K_nn needs n >= 1, got {n}")
    edges = [
        Edge((i + j - 2) % n + 1, i, n + j) for i in range(1, n + 1) for j in range(1, n + 1)
    ]
    labels = [f"v{i}" for i in range(1, n + 1)] + [f"w{j}" for j in range(1, n + 1)]
    return ColoredGraph(2 * n, n, edges, parity=BOSON * n + FERMION * n, labels=labels)


def build_bicolor_cycle(m: int) -> ColoredGraph:
    """The ``2m``-cycle ``1, 2, ..., 2m`` with ``{v, v+1}`` colored 1 for odd ``v`` and 2 for even ``v``."""
    if m < 2:
        raise GraphError(f"bicolor cycle needs m >= 2, got {m}")
    n = 2 * m
    edges = [Edge(1 if v % 2 else 2, v, v % n + 1) for v in range(1, n + 1)]
    return ColoredGraph(n, 2, edges, parity=(BOSON + FERMION) * m)
