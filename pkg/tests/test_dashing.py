from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adinkra.constructors import build_folded_cube, build_hypercube, build_quotient
from adinkra.dashing import (
    MAX_ENUMERATED_DASHINGS,
    apply_dashing,
    bicolor_squares,
    canonical_dashing_hypercube,
    solve_dashings,
    validate_totally_odd,
)
from adinkra.gf2code import BitVector, all_linear_codes, classify, d2n_family, has_low_weight_word, rref_basis
from adinkra.graph import GraphError


def test_squares_of_cube():
    g = build_hypercube(3)
    squares = bicolor_squares(g)
    assert len(squares) == 3 * 2
    assert [sq.colors for sq in squares] == [(1, 2), (1, 2), (1, 3), (1, 3), (2, 3), (2, 3)]
    for sq in squares:
        assert len(set(sq.vertices)) == 4
        assert sorted(e.color for e in sq.edges) == sorted(sq.colors * 2)


def test_q2_has_eight_dashings():
    g = build_hypercube(2)
    brute = [s for s in product((1, -1), repeat=4) if not validate_totally_odd(apply_dashing(g, s))]
    assert len(brute) == 8
    system = solve_dashings(g)
    assert system.solution_count == 8
    found = {system.sign_string(m) for m in system.solutions()}
    assert found == {"".join("+" if x > 0 else "-" for x in s) for s in brute}


@pytest.mark.parametrize("N", range(1, 7))
def test_canonical_dashing_is_totally_odd(N):
    g = canonical_dashing_hypercube(N)
    assert not validate_totally_odd(g)


@pytest.mark.parametrize("N", range(2, 6))
def test_single_flip_breaks_n_minus_one_squares(N):
    g = canonical_dashing_hypercube(N)
    for e in g.edges[:: max(1, len(g.edges) // 7)]:
        flipped = g.with_signs({x.key: (-x.sign if x.key == e.key else x.sign) for x in g.edges})
        assert len(validate_totally_odd(flipped)) == N - 1


@pytest.mark.parametrize("N", range(1, 7))
def test_hypercube_dashing_count(N):
    # one free sign per vertex (a vertex switch) on top of the all-square equations
    g = build_hypercube(N)
    system = solve_dashings(g)
    assert system.consistent
    E = len(g.edges)
    squares = N * (N - 1) // 2 * 2 ** (N - 2) if N >= 2 else 0
    assert len(system.squares) == squares
    assert system.solution_count == 2 ** (E - system.rank)


@settings(max_examples=40)
@given(st.integers(2, 5), st.data())
def test_every_solution_is_totally_odd(N, data):
    g = build_hypercube(N)
    system = solve_dashings(g)
    coeffs = data.draw(st.integers(0, 2 ** len(system.nullspace) - 1))
    dashed = apply_dashing(g, system.assignment(system.combine(coeffs)))
    assert not validate_totally_odd(dashed)


def test_even_codes_dash_iff_doubly_even():
    for N in range(2, 7):
        for c in all_linear_codes(N):
            if has_low_weight_word(c) is not None or not classify(c).even:
                continue
            system = solve_dashings(build_quotient(N, c))
            assert system.consistent == classify(c).doubly_even, [str(b) for b in c.basis]


def test_d8_has_a_dashing():
    g = build_quotient(8, d2n_family(4))
    system = solve_dashings(g)
    assert system.consistent
    assert not validate_totally_odd(apply_dashing(g, system.assignment(system.particular)))


def test_folded_cube_f6_has_no_dashing():
    system = solve_dashings(build_folded_cube(6))
    assert not system.consistent and system.solution_count == 0
    with pytest.raises(GraphError):
        system.combine(0)


def test_odd_folded_cube_f5_admits_a_dashing():
    # {00000, 11111} is odd, not doubly even, yet the square system is solvable
    g = build_folded_cube(5)
    system = solve_dashings(g)
    assert system.consistent
    dashed = apply_dashing(g, system.assignment(system.particular))
    assert not validate_totally_odd(dashed)
    assert len(bicolor_squares(g)) == 40


def test_apply_dashing_input_checks():
    g = build_hypercube(2)
    with pytest.raises(GraphError):
        apply_dashing(g, [1, 1])
    with pytest.raises(GraphError):
        apply_dashing(g, {g.edges[0].key: -1})


def test_enumeration_refused_when_too_large():
    system = solve_dashings(build_hypercube(6))
    assert system.solution_count > MAX_ENUMERATED_DASHINGS
    with pytest.raises(GraphError):
        next(system.solutions())


def test_quotient_of_weight_four_word():
    c = rref_basis([BitVector.from_str("11110")])
    system = solve_dashings(build_quotient(5, c))
    assert system.consistent
