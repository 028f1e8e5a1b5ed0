import numpy as np
import pytest

from semirep.catalog import builtin, cyclic_group, left_zero, symmetric_group, trivial_group
from semirep.corpus import enumerate_semigroups, rees_sweep
from semirep.errors import NotRegular, NotRegularClass
from semirep.grouprep import irreducible_unitary_reps, regular_sum
from semirep.linalg import is_preunitary, opnorm
from semirep.rees import (
    build_rees,
    coordinatize_jclass,
    normalize_to_identity,
    rees_is_inverse,
    rescale,
    standard_reps,
)
from semirep.semigroup import (
    brute_force_is_inverse,
    find_isomorphism,
    green_structure,
    principal_factor,
)

ONE = [[[1.0]]]


def top_class(S):
    g = green_structure(S)
    return next(k for k, J in enumerate(g.jclasses) if S.zero not in J)


# --------------------------------------------------------------------------
# build_rees


def test_identity_sandwich_gives_b2():
    R = build_rees(2, 2, trivial_group(), [[0, None], [None, 0]])
    assert R.table.n == 5
    assert find_isomorphism(R.table, builtin("b2")) is not None


def test_row_sandwich_is_l2_with_zero():
    R = build_rees(2, 1, trivial_group(), [[0, 0]])
    assert R.table.n == 3
    # the nonzero part is the left-zero band L2: (1)_i1 (1)_k1 = (1)_i1
    assert [row[:2] for row in R.table.mul[:2]] == [r for r in left_zero(2).mul]


def test_triangular_sandwich_is_regular_non_inverse():
    R = build_rees(2, 2, trivial_group(), [[0, 0], [None, 0]])
    assert R.is_regular
    assert not brute_force_is_inverse(R.table).is_inverse


def test_rees_product_rule():
    G = symmetric_group(3)
    P = [[0, 3], [None, 5]]
    R = build_rees(2, 2, G, P)
    for x in R.table.elements:
        for y in R.table.elements:
            cx, cy = R.coords(x), R.coords(y)
            if cx is None or cy is None:
                assert R.table.mul[x][y] == R.zero
                continue
            (i, j, a), (k, l, b) = cx, cy
            p = P[j][k]
            expected = R.zero if p is None else R.element(i, l, G.prod(a, p, b))
            assert R.table.mul[x][y] == expected


# --------------------------------------------------------------------------
# rees_is_inverse


def test_identity_sandwich_is_inverse():
    assert rees_is_inverse(build_rees(2, 2, trivial_group(), [[0, None], [None, 0]]))


def test_non_square_not_inverse():
    assert not rees_is_inverse(build_rees(2, 1, trivial_group(), [[0, 0]]))


def test_triangular_not_inverse_and_oracle_agrees():
    R = build_rees(2, 2, trivial_group(), [[0, 0], [None, 0]])
    assert not rees_is_inverse(R)
    o = brute_force_is_inverse(R.table)
    assert len(o.inverses[R.element(0, 0, 0)]) == 2


def test_irregular_sandwich_rejected():
    with pytest.raises(NotRegular):
        rees_is_inverse(build_rees(2, 2, trivial_group(), [[0, 0], [None, None]]))


def test_rees_is_inverse_matches_oracle_on_sweep():
    for R in rees_sweep():
        assert rees_is_inverse(R) == brute_force_is_inverse(R.table).is_inverse


# --------------------------------------------------------------------------
# coordinatization


def test_b2_top_class_coordinates():
    S = builtin("b2")
    c = coordinatize_jclass(S, top_class(S))
    assert (c.s, c.t, c.group.order) == (2, 2, 1)
    assert c.P == ((0, None), (None, 0))


def test_l2_coordinates():
    c = coordinatize_jclass(builtin("l2"), 0)
    assert (c.s, c.t) == (2, 1) and c.P == ((0, 0),)


def test_t2_lower_class_coordinates():
    S = builtin("t2")
    g = green_structure(S)
    k = g.jclass_of[S.labels.index("[11]")]
    c = coordinatize_jclass(S, k, g)
    # constants form a left-zero band: c_i c_j = c_i
    assert (c.s, c.t, c.group.order) == (2, 1, 1)
    assert c.P == ((0, 0),)


def test_non_regular_class_rejected():
    S = builtin("null2")
    with pytest.raises(NotRegularClass):
        coordinatize_jclass(S, green_structure(S).jclass_of[1])


def _regular_classes(S):
    g = green_structure(S)
    return g, [k for k, r in enumerate(g.regular_j) if r]


ROUND_TRIP = [builtin(n) for n in ("b2", "i2", "i3", "t2", "l2", "s3")] + enumerate_semigroups(3, up_to_iso=True)


@pytest.mark.parametrize("S", ROUND_TRIP)
def test_coordinatization_invariants_and_round_trip(S):
    g, regular = _regular_classes(S)
    for k in regular:
        c = coordinatize_jclass(S, k, g)
        J = g.jclasses[k]
        assert len(J) == c.s * c.t * c.group.order
        # p_ji is nonzero exactly when y_j x_i stays in J
        for j, y in enumerate(c.y):
            for i, x in enumerate(c.x):
                assert (c.P[j][i] is not None) == (S.mul[y][x] in J)
        # every row and column of P has a nonzero entry
        assert all(any(p is not None for p in row) for row in c.P)
        assert all(any(p is not None for p in col) for col in zip(*c.P))
        # first row / first column normalized to identity or zero
        assert c.P[0][0] == c.group.identity
        assert all(p in (None, c.group.identity) for p in c.P[0])
        assert all(row[0] in (None, c.group.identity) for row in c.P)
        # Rees semigroup built from the coordinates is isomorphic to J^0
        J0, _ = principal_factor(S, J)
        R = c.as_rees()
        if len(J) + 1 == R.table.n:
            assert find_isomorphism(R.table, J0) is not None


def test_normalize_b2_and_i3():
    for name in ("b2", "i2", "i3"):
        S = builtin(name)
        g, regular = _regular_classes(S)
        for k in regular:
            if g.jclasses[k] == (S.zero,):
                continue
            c = normalize_to_identity(S, coordinatize_jclass(S, k, g), g)
            assert c.normalized
            assert all(c.P[j][i] == (c.group.identity if i == j else None)
                       for i in range(c.s) for j in range(c.t))
            assert c.e_diag == tuple(S.mul[x][y] for x, y in zip(c.x, c.y))
            assert all(S.mul[e][e] == e for e in c.e_diag)


def test_scaling_conjugates_sandwich():
    S = builtin("i3")
    g = green_structure(S)
    k = next(k for k, J in enumerate(g.jclasses) if len(J) == 18)
    c = coordinatize_jclass(S, k, g)
    G = c.group
    gs = [1 % G.order] * c.s
    hs = [1 % G.order] * c.t
    d = rescale(S, c, gs, hs, g)
    for j in range(c.t):
        for i in range(c.s):
            p = c.P[j][i]
            expected = None if p is None else G.prod(hs[j], p, gs[i])
            assert d.P[j][i] == expected
    assert find_isomorphism(c.as_rees().table, d.as_rees().table) is not None


# --------------------------------------------------------------------------
# standard representations


def test_b2_standard_left_rep():
    R = build_rees(2, 2, trivial_group(), [[0, None], [None, 0]])
    left, right = standard_reps(R, ONE)
    assert np.allclose(left[R.element(0, 0, 0)], [[1, 0], [0, 0]])
    assert is_preunitary(left[R.element(0, 0, 0)]).preunitary


def test_triangular_standard_rep_not_preunitary():
    R = build_rees(2, 2, trivial_group(), [[0, 0], [None, 0]])
    left, _ = standard_reps(R, ONE)
    A = left[R.element(0, 0, 0)]
    assert np.allclose(A, [[1, 1], [0, 0]])
    assert np.allclose(A @ A.conj().T @ A, 2 * A)
    assert not is_preunitary(A).preunitary


def test_zero_maps_to_zero_matrix():
    R = build_rees(2, 2, trivial_group(), [[0, 0], [None, 0]])
    left, right = standard_reps(R, ONE)
    assert opnorm(left[R.zero]) == 0 and opnorm(right[R.zero]) == 0


def test_standard_reps_multiplicative_on_sweep():
    for R in rees_sweep():
        sigma = regular_sum(irreducible_unitary_reps(R.group))
        left, right = standard_reps(R, sigma)
        assert left.is_multiplicative() and right.is_multiplicative()
        assert left.respects_zero() and right.respects_zero()


def test_preunitary_pair_implies_inverse():
    for R in rees_sweep():
        sigma = regular_sum(irreducible_unitary_reps(R.group))
        left, right = standard_reps(R, sigma)
        both = all(is_preunitary(m).preunitary for m in left.images + right.images)
        if both:
            assert rees_is_inverse(R)
