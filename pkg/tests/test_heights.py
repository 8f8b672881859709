import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adinkra.constructors import build_complete_even, build_hypercube
from adinkra.heights import (
    HeightAssignment,
    HeightError,
    assign_heights,
    check_heights,
    current_heights,
    lexicographic_order,
    movable_vertices,
    move,
    valise,
    with_heights,
)


def test_rank_sequences(adinkra_242, adinkra_341, adinkra_44):
    assert current_heights(adinkra_242).rank_sequence == (2, 4, 2)
    assert current_heights(adinkra_341).rank_sequence == (3, 4, 1)
    assert current_heights(adinkra_44).rank_sequence == (4, 4)
    assert current_heights(adinkra_242).levels() == [[1, 2], [3, 4, 5, 6], [7, 8]]


def test_lowering_seven_then_eight(adinkra_242, adinkra_341, adinkra_44):
    h = move(adinkra_242, current_heights(adinkra_242), 7, "lower")
    assert h.heights == adinkra_341.height
    h = move(adinkra_242, h, 8, "lower")
    assert h.heights == adinkra_44.height


def test_movable_in_242(adinkra_242):
    m = movable_vertices(adinkra_242, current_heights(adinkra_242))
    assert m["lowerable"] == {7, 8}
    assert m["raisable"] == {1, 2}


def test_illegal_move(adinkra_242):
    h = current_heights(adinkra_242)
    with pytest.raises(HeightError):
        move(adinkra_242, h, 3, "up")
    with pytest.raises(ValueError):
        move(adinkra_242, h, 7, "sideways")


def test_raise_is_undone_by_lower():
    g = build_hypercube(3)
    h = valise(g)
    for v in movable_vertices(g, h)["raisable"]:
        assert move(g, move(g, h, v, "up"), v, "down") == h


def test_valise_and_check():
    g = build_hypercube(3)
    h = valise(g)
    assert h.rank_sequence == (4, 4)
    assert not check_heights(g, h.heights)
    assert check_heights(g, (0,) * 8)
    with pytest.raises(HeightError):
        valise(build_complete_even(2))


def test_assign_heights_partial_and_errors():
    g = build_hypercube(2)
    h = assign_heights(g, {1: 2})
    assert h.heights == (2, 1, 1, 0)
    with pytest.raises(HeightError):
        assign_heights(g, {1: 1})
    with pytest.raises(HeightError):
        assign_heights(g, {9: 0})
    shifted = assign_heights(g, {1: 10, 2: 11, 3: 11, 4: 12})
    assert shifted.heights == (0, 1, 1, 2)


def test_level_parity_rule():
    g = build_hypercube(2)
    assert check_heights(g, (0, 1, 1, 2)) == []
    assert check_heights(g, (2, 1, 3, 2)) == []
    # heights differ by one along edges, but level 1 holds a boson and a fermion
    mixed = g.replace(parity="bbfb")
    assert check_heights(mixed, (0, 1, 1, 2))


def test_lexicographic_order(adinkra_341):
    h = current_heights(adinkra_341)
    assert lexicographic_order(adinkra_341, h) == [1, 2, 7, 3, 4, 5, 6, 8]


def test_with_heights_fills_parity():
    g = build_hypercube(3).replace(parity=None)
    out = with_heights(g, valise(g))
    assert out.parity == "bffbfbbf" and out.height == valise(g).heights


def reachable(g):
    start = valise(g)
    seen = {start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        m = movable_vertices(g, h)
        for v in m["raisable"]:
            nxt = move(g, h, v, "up")
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
        for v in m["lowerable"]:
            nxt = move(g, h, v, "down")
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def brute_force_heights(g, top):
    """Every valid normalized height assignment with values up to ``top``, by exhaustive search."""
    out = set()

    def extend(prefix):
        v = len(prefix) + 1
        if v > g.n:
            h = tuple(prefix)
            if min(h) == 0 and not check_heights(g, h):
                out.add(h)
            return
        for x in range(top + 1):
            if all(abs(prefix[w - 1] - x) == 1 for w in g.neighbors(v) if w < v):
                extend(prefix + [x])

    extend([])
    return out


@pytest.mark.parametrize("N", [2, 3])
def test_moves_reach_every_assignment(N):
    # moves from the valise reach every valid height assignment
    g = build_hypercube(N)
    found = {h.heights for h in reachable(g)}
    assert found == brute_force_heights(g, N)


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_random_moves_keep_heights_valid(seed):
    rng = random.Random(seed)
    g = build_hypercube(4)
    h = valise(g)
    for _ in range(30):
        m = movable_vertices(g, h)
        opts = [(v, "up") for v in sorted(m["raisable"])] + [(v, "down") for v in sorted(m["lowerable"])]
        v, d = rng.choice(opts)
        h = move(g, h, v, d)
        assert min(h.heights) == 0
        assert not check_heights(g, h.heights)
    assert isinstance(h, HeightAssignment)
