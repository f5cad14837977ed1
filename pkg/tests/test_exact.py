"""Rational linear algebra and vertex enumeration, checked exactly."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synaptica.exact import (
    InfeasibilityCertificate,
    affine_solution_set,
    enumerate_box_vertices,
    rref,
    solve_square,
)

F = Fraction


def test_rref_pivots():
    reduced, pivots = rref([[F(2), F(4)], [F(1), F(2)]])
    assert pivots == [0]
    assert reduced[0] == [F(1), F(2)]


def test_solve_square():
    x = solve_square([[F(2), F(0)], [F(0), F(4)]], [F(6), F(8)])
    assert x == [F(3), F(2)]
    assert solve_square([[F(1), F(1)], [F(2), F(2)]], [F(1), F(2)]) is None


def test_affine_solution_set_parametrizes():
    # x + y + z = 1 has a 2-dimensional solution set
    sol = affine_solution_set([[F(1), F(1), F(1)]], [F(1)], 3)
    assert sol.dimension == 2
    pt = sol.point([F(1, 3), F(1, 5)])
    assert sum(pt) == 1


def test_affine_infeasible_certificate():
    # x + y = 1 and x + y = 2: subtracting gives 0 = 1
    sol = affine_solution_set([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)], 2)
    assert isinstance(sol, InfeasibilityCertificate)
    assert sol.kind == "equalities"


def test_simplex_vertices_are_unit_vectors():
    enum = enumerate_box_vertices([[1, 1, 1]], [1], 3)
    assert enum.feasible
    assert enum.dimension == 2
    expect = [
        [F(0), F(0), F(1)],
        [F(0), F(1), F(0)],
        [F(1), F(0), F(0)],
    ]
    assert enum.vertices == expect


def test_unconstrained_box_has_corner_vertices():
    enum = enumerate_box_vertices([], [], 2)
    assert enum.dimension == 2
    assert enum.vertices == [
        [F(0), F(0)],
        [F(0), F(1)],
        [F(1), F(0)],
        [F(1), F(1)],
    ]


def test_three_chain_state_system():
    # w0 = 0, w2 = 1, w1 + w1 = w2: the unique solution has w1 = 1/2
    rows = [[1, 0, 0], [0, 0, 1], [0, 2, -1]]
    rhs = [0, 1, 0]
    enum = enumerate_box_vertices(rows, rhs, 3)
    assert enum.dimension == 0
    assert enum.vertices == [[F(0), F(1, 2), F(1)]]


def test_equality_infeasibility_certificate():
    rows = [[1, 1], [1, 1]]
    rhs = [1, 2]
    enum = enumerate_box_vertices(rows, rhs, 2)
    assert not enum.feasible
    assert enum.certificate is not None
    assert enum.certificate.kind == "equalities"
    # the multipliers recombine the rows into 0 = nonzero
    mults = enum.certificate.multipliers
    lhs = [sum(m * F(rows[k][j]) for k, m in mults) for j in range(2)]
    rhs_comb = sum(m * F(rhs[k]) for k, m in mults)
    assert all(v == 0 for v in lhs)
    assert rhs_comb != 0


def test_bound_infeasibility_certificate():
    # x = 2 cannot meet the [0, 1] box; solution set is a single point
    enum = enumerate_box_vertices([[1]], [2], 1)
    assert not enum.feasible
    assert enum.certificate.kind == "bound"


def test_box_infeasibility_via_elimination():
    # x - y = 2 is affinely fine but incompatible with 0 <= x, y <= 1
    enum = enumerate_box_vertices([[1, -1]], [2], 2)
    assert not enum.feasible
    assert enum.certificate.kind in ("inequalities", "bound")


def test_vertices_satisfy_constraints_exactly():
    rows = [[1, 1, 0, 0], [0, 0, 1, 1]]
    rhs = [1, 1]
    enum = enumerate_box_vertices(rows, rhs, 4)
    assert enum.dimension == 2
    assert len(enum.vertices) == 4
    for v in enum.vertices:
        assert v[0] + v[1] == 1
        assert v[2] + v[3] == 1
        assert all(0 <= c <= 1 for c in v)
        assert all(c in (F(0), F(1)) for c in v)  # product of two segments


@st.composite
def random_systems(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=0, max_value=3))
    coeff = st.integers(min_value=-2, max_value=2)
    rows = [[draw(coeff) for _ in range(n)] for _ in range(m)]
    rhs = [draw(st.integers(min_value=0, max_value=2)) for _ in range(m)]
    return rows, rhs, n


@given(random_systems())
@settings(max_examples=60, deadline=None)
def test_enumeration_is_sound(case):
    rows, rhs, n = case
    enum = enumerate_box_vertices(rows, rhs, n)
    if not enum.feasible:
        assert enum.certificate is not None
        return
    for v in enum.vertices:
        assert all(0 <= c <= 1 for c in v)
        for row, b in zip(rows, rhs):
            assert sum(F(c) * x for c, x in zip(row, v)) == F(b)
    # no vertex may be the midpoint of two others
    vset = {tuple(v) for v in enum.vertices}
    vl = sorted(vset)
    for i, u in enumerate(vl):
        for j, w in enumerate(vl):
            if i < j:
                mid = tuple((a + b) / 2 for a, b in zip(u, w))
                assert mid not in vset - {u, w}
