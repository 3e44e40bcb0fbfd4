import pytest

from curvelat.curve import h_oracle
from curvelat.errors import ConsistencyError
from curvelat.hilbert import (
    build_table,
    char_poly,
    invariants,
    large_n_step_check,
    local_matroid,
    semigroup,
    symmetry_check,
)

from conftest import CORPUS, corpus_curve
from oracles import (
    REFERENCE_A3,
    REFERENCE_A3_SEMIGROUP,
    REFERENCE_D5,
    REFERENCE_D5_SEMIGROUP,
    h_a_odd,
)


# ---------------------------------------------------------------------------
# invariants


def test_invariants_single_branches():
    inv = invariants(corpus_curve("line"))
    assert (inv.delta, inv.mu, inv.conductor) == (0, 0, (0,))
    inv = invariants(corpus_curve("cusp"))
    assert (inv.delta, inv.mu, inv.conductor) == (1, 2, (2,))
    inv = invariants(corpus_curve("t2t5"))
    assert (inv.delta, inv.mu, inv.conductor) == (2, 4, (4,))


def test_invariants_two_branch_curves():
    inv = invariants(corpus_curve("a3"))
    assert inv.delta == 2
    assert inv.mu == 3
    assert inv.conductor == (2, 2)
    assert inv.pairwise[0][1] == 2
    inv = invariants(corpus_curve("d5"))
    assert inv.delta == 3
    assert inv.mu == 5
    assert inv.conductor == (2, 4)
    assert inv.delta_branches == [0, 1]


def test_invariants_triple_point():
    inv = invariants(corpus_curve("triple"))
    assert inv.delta == 3
    assert inv.mu == 2 * 3 - 3 + 1
    assert inv.conductor == (2, 2, 2)
    assert all(inv.pairwise[i][j] == 1
               for i in range(3) for j in range(3) if i != j)


def test_invariants_milnor_relation():
    for name in CORPUS:
        inv = invariants(corpus_curve(name))
        assert inv.mu == 2 * inv.delta - inv.r + 1
        assert sum(inv.conductor) == 2 * inv.delta


# ---------------------------------------------------------------------------
# table fill


def test_table_matches_reference_grids():
    t = build_table(corpus_curve("a3"), (4, 4))
    for v2 in range(5):
        for v1 in range(5):
            assert t.value((v1, v2)) == REFERENCE_A3[v2][v1]
    t = build_table(corpus_curve("d5"), (5, 5))
    for v2 in range(6):
        for v1 in range(6):
            assert t.value((v1, v2)) == REFERENCE_D5[v2][v1]


def test_table_closed_form_tangential_pairs():
    for n, name in [(2, "a3"), (3, "a5"), (4, "a7")]:
        t = build_table(corpus_curve(name), (n + 3, n + 3))
        for v1 in range(n + 4):
            for v2 in range(n + 4):
                assert t.value((v1, v2)) == h_a_odd(n, v1, v2)


def test_table_agrees_with_oracle_everywhere():
    # full agreement on a box, not only the sampled tenth
    c = corpus_curve("d5")
    t = build_table(c, (6, 6))
    for v1 in range(7):
        for v2 in range(7):
            assert t.value((v1, v2)) == h_oracle(c, (v1, v2))
    c = corpus_curve("triple")
    t = build_table(c, (4, 4, 4))
    for v1 in range(5):
        for v2 in range(5):
            for v3 in range(5):
                assert t.value((v1, v2, v3)) == h_oracle(c, (v1, v2, v3))


def test_table_path_independence():
    for name in ["a3", "d5", "triple"]:
        c = corpus_curve(name)
        box = tuple(3 for _ in range(c.r))
        a = build_table(c, box, sweep="lex")
        b = build_table(c, box, sweep="revlex")
        assert a.values == b.values


def test_table_extends_beyond_corner():
    c = corpus_curve("a3")
    t = build_table(c, (3, 3))
    assert t.value((20, 2)) == h_oracle(c, (20, 2))
    assert t.value((9, 9)) == 9 + 9 - 2
    assert t.value((-5, 4)) == t.value((0, 4))


def test_table_clamps_negatives():
    t = build_table(corpus_curve("d5"), (3, 3))
    assert t.value((-1, 3)) == t.value((0, 3)) == 2


def test_table_steps_and_membership():
    t = build_table(corpus_curve("a3"), (4, 4))
    assert t.step((1, 1), 0) == 1
    assert t.step((1, 0), 1) == 0
    assert t.in_semigroup((1, 1))
    assert not t.in_semigroup((1, 0))
    assert not t.in_semigroup((-1, 0))


# ---------------------------------------------------------------------------
# semigroup


def test_semigroup_two_branch_reference_sets():
    c = corpus_curve("a3")
    got = set(semigroup(c, (4, 4)))
    assert got == REFERENCE_A3_SEMIGROUP
    c = corpus_curve("d5")
    got = set(semigroup(c, (5, 5)))
    assert got == REFERENCE_D5_SEMIGROUP


def test_semigroup_single_branch():
    got = semigroup(corpus_curve("t2t5"), (8,))
    assert got == [(0,), (2,), (4,), (5,), (6,), (7,), (8,)]


def test_semigroup_default_box():
    got = semigroup(corpus_curve("cusp"))
    assert got == [(0,), (2,), (3,)]


def test_semigroup_min_closed():
    # componentwise minimum of two members is a member
    for name in ["a3", "d5"]:
        c = corpus_curve(name)
        members = set(semigroup(c, (6, 6)))
        for a in members:
            for b in members:
                m = tuple(min(x, y) for x, y in zip(a, b))
                assert m in members


# ---------------------------------------------------------------------------
# symmetry and far steps


def test_symmetry_all_corpus():
    for name in CORPUS:
        assert symmetry_check(corpus_curve(name)) is True


def test_large_n_steps_all_corpus():
    for name in CORPUS:
        assert large_n_step_check(corpus_curve(name)) is True


def test_symmetry_detects_corruption():
    c = corpus_curve("a3")
    t = build_table(c, (2, 2))
    t.values[(1, 0)] += 1
    with pytest.raises(ConsistencyError):
        symmetry_check(c, table=t)


# ---------------------------------------------------------------------------
# local matroids


def test_local_matroid_parallel_point():
    # at (1,1) both singletons are dependent on each other: rank 1
    t = build_table(corpus_curve("a3"), (4, 4))
    rank = local_matroid(t, (1, 1))
    assert rank[0] == 0
    assert rank[1] == 1 and rank[2] == 1
    assert rank[3] == 1


def test_local_matroid_far_point_is_free():
    t = build_table(corpus_curve("d5"), (5, 5))
    rank = local_matroid(t, (2, 4))
    assert rank[3] == 2


def test_char_poly_zero_off_semigroup():
    t = build_table(corpus_curve("a3"), (4, 4))
    for v in [(1, 0), (0, 1), (2, 1), (1, 2), (0, 3)]:
        assert not t.in_semigroup(v)
        assert all(c == 0 for c in char_poly(t, v))


def test_char_poly_values():
    t = build_table(corpus_curve("a3"), (4, 4))
    # two parallel elements of rank 1
    assert char_poly(t, (1, 1)) == (-1, 1)
    # free points of rank 2
    assert char_poly(t, (2, 2)) == (1, -2, 1)
    t5 = build_table(corpus_curve("d5"), (5, 5))
    assert char_poly(t5, (2, 4)) == (1, -2, 1)


def test_char_poly_triple_point():
    t = build_table(corpus_curve("triple"), (2, 2, 2))
    # at the origin only the constant separates: uniform rank 1
    assert char_poly(t, (0, 0, 0)) == (-1, 1)
    # at (1,1,1) the three branches behave like generic lines: U(2,3)
    assert char_poly(t, (1, 1, 1)) == (2, -3, 1)
