from itertools import permutations

import pytest

from semirep.catalog import builtin, chain, cyclic_group, group_semigroup, symmetric_group, trivial_group
from semirep.corpus import corollary_instances, enumerate_semigroups, rees_sweep
from semirep.errors import (
    FactorizationObstruction,
    NotCorollaryForm,
    NotInvolution,
    NotReesCompatible,
    SizeLimit,
)
from semirep.involution import (
    SSData,
    corollary_data,
    decompose_rees_involution,
    enumerate_involutions,
    inverse_inducing_involution,
    is_inverse_inducing,
    reconstruct_involution,
    semiunitary_star_conditions,
    verify_involution,
)
from semirep.linalg import is_preunitary
from semirep.rees import build_rees
from semirep.schutz import star_representable_all
from semirep.semigroup import brute_force_is_inverse


def _is_involution(S, f):
    return all(f[f[a]] == a for a in S.elements) and all(
        f[S.mul[a][b]] == S.mul[f[b]][f[a]] for a in S.elements for b in S.elements
    )


def _rees_star(R, z=None, g_star=None, phi=None):
    """``(a)_ij -> (z a*)_{phi(j), phi(i)}`` with the given data."""
    G = R.group
    z = G.identity if z is None else z
    g_star = tuple(G.inverse) if g_star is None else g_star
    phi = tuple(range(R.n)) if phi is None else phi
    out = []
    for x in R.table.elements:
        c = R.coords(x)
        if c is None:
            out.append(x)
        else:
            i, j, a = c
            out.append(R.element(phi[j], phi[i], G.mul(z, g_star[a])))
    return tuple(out)


B2_REES = build_rees(2, 2, trivial_group(), [[0, None], [None, 0]])


# --------------------------------------------------------------------------
# verification and enumeration


def test_verify_accepts_transpose():
    S = builtin("b2")
    assert verify_involution(S, brute_force_is_inverse(S).inverse_map) == (0, 2, 1, 3, 4)


@pytest.mark.parametrize("bad, reason", [
    ((0, 1, 2, 3, 4), r"\(ab\)\*"),   # identity is a homomorphism, not an anti-homomorphism
    ((1, 2, 0, 3, 4), r"star\(star"),  # a 3-cycle
    ((0, 0, 1, 3, 4), "permutation"),
])
def test_verify_rejects(bad, reason):
    with pytest.raises(NotInvolution, match=reason):
        verify_involution(builtin("b2"), bad)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(n):
    for S in enumerate_semigroups(n, up_to_iso=True):
        expected = [f for f in permutations(S.elements) if _is_involution(S, f)]
        assert [f.map for f in enumerate_involutions(S)] == expected


def test_b2_has_two_involutions():
    S = builtin("b2")
    invs = enumerate_involutions(S)
    assert [f.map for f in invs] == [(0, 2, 1, 3, 4), (3, 1, 2, 0, 4)]
    assert inverse_inducing_involution(S, invs).map == (0, 2, 1, 3, 4)


def test_l2_and_t2_have_no_involutions():
    assert enumerate_involutions(builtin("l2")) == []
    assert enumerate_involutions(builtin("t2")) == []


def test_commutative_identity_is_involution():
    S = chain(3)
    assert (0, 1, 2) in [f.map for f in enumerate_involutions(S)]


def test_enumeration_size_limit():
    with pytest.raises(SizeLimit):
        enumerate_involutions(builtin("i3"), max_order=10)


@pytest.mark.parametrize("name", ["b2", "i2", "i3", "c3", "s3", "chain3"])
def test_inverse_inducing_matches_oracle(name):
    S = builtin(name)
    f = inverse_inducing_involution(S)
    assert f is not None and f.map == brute_force_is_inverse(S).inverse_map


def test_no_inverse_inducing_on_non_inverse():
    assert inverse_inducing_involution(builtin("l2")) is None
    R = build_rees(2, 2, trivial_group(), [[0, 0], [0, 0]])
    assert enumerate_involutions(R.table)
    assert inverse_inducing_involution(R.table) is None


def test_regular_star_semigroup_is_not_inverse_inducing():
    """The all-ones 2x2 sandwich with the transpose satisfies s s* s = s
    (a regular *-semigroup) but is not inverse."""
    R = build_rees(2, 2, trivial_group(), [[0, 0], [0, 0]])
    star = _rees_star(R)
    S = R.table
    assert all(S.mul[S.mul[s][star[s]]][s] == s for s in S.elements)
    assert not is_inverse_inducing(S, star)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_uniqueness_of_inverse_inducing(n):
    for S in enumerate_semigroups(n, up_to_iso=True):
        survivors = [f for f in enumerate_involutions(S) if is_inverse_inducing(S, f)]
        assert len(survivors) <= 1
        assert bool(survivors) == brute_force_is_inverse(S).is_inverse


# --------------------------------------------------------------------------
# Rees decomposition


def test_b2_transpose_decomposition():
    ss = decompose_rees_involution(B2_REES, _rees_star(B2_REES))
    assert ss.phi == (0, 1) and ss.u == (0, 0) and ss.z == 0


def test_b2_swapped_transpose_decomposition():
    star = _rees_star(B2_REES, phi=(1, 0))
    ss = decompose_rees_involution(B2_REES, star)
    assert ss.phi == (1, 0) and ss.u == (0, 0)
    with pytest.raises(NotCorollaryForm):
        corollary_data(B2_REES, star)


def test_decomposition_rejects_rectangular():
    R = build_rees(1, 2, trivial_group(), [[0], [0]])
    with pytest.raises(NotReesCompatible):
        decompose_rees_involution(R, tuple(R.table.elements))


def test_triangular_sandwich_has_non_corollary_involution():
    """P = [[1,1],[0,1]] over the trivial group carries exactly one involution,
    which swaps the index sets; none is in Corollary form."""
    R = build_rees(2, 2, trivial_group(), [[0, 0], [None, 0]])
    invs = enumerate_involutions(R.table)
    assert len(invs) == 1
    ss = decompose_rees_involution(R, invs[0])
    assert ss.phi == (1, 0)
    assert not semiunitary_star_conditions(R)


def test_decompose_reconstruct_round_trip_on_sweep():
    checked = 0
    for R in rees_sweep():
        if R.m != R.n:
            continue
        for f in enumerate_involutions(R.table):
            ss = decompose_rees_involution(R, f)
            assert reconstruct_involution(R, ss) == f.map
            checked += 1
    assert checked > 10


@pytest.mark.parametrize("G", [trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)],
                         ids=["C1", "C2", "C3", "S3"])
def test_corollary_round_trip(G):
    for inst in corollary_instances(15, seed=3, G=G):
        ss = corollary_data(inst.rees, inst.star)
        assert reconstruct_involution(inst.rees, ss) == inst.star
        assert ss.z == inst.z and ss.g_star == inst.g_star


# --------------------------------------------------------------------------
# semiunitary-star conditions


def test_conditions_hold_for_c2_diagonal():
    G = cyclic_group(2)
    R = build_rees(2, 2, G, [[1, None], [None, 1]])
    cond = semiunitary_star_conditions(R, _rees_star(R))
    assert cond and cond.constant_diagonal == 1


def test_conditions_fail_for_non_constant_diagonal():
    G = cyclic_group(2)
    R = build_rees(2, 2, G, [[0, None], [None, 1]])
    cond = semiunitary_star_conditions(R, _rees_star(R))
    assert cond.p_invertible and cond.constant_diagonal is None and not cond


def test_conditions_fail_for_singular_p():
    R = build_rees(2, 2, trivial_group(), [[0, 0], [0, 0]])
    cond = semiunitary_star_conditions(R, _rees_star(R))
    assert not cond.p_invertible and not cond


def test_conditions_sweep_on_b2():
    assert semiunitary_star_conditions(B2_REES)


def _semiunitary_star_rep_exists(S, star) -> bool:
    """Every irrep of ``(S, star)`` is equivalent to a semiunitary *-representation.

    A *-form of an irreducible representation is unique up to unitary
    equivalence, so testing the constructed forms is conclusive.
    """
    try:
        v = star_representable_all(S, star)
    except FactorizationObstruction:
        return False
    return v.star_representable and all(
        is_preunitary(m).preunitary for f in v.star_forms for m in f.images
    )


@pytest.mark.parametrize("G", [trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)],
                         ids=["C1", "C2", "C3", "S3"])
def test_conditions_versus_semiunitary_star_reps(G):
    """The conditions are necessary for semiunitary *-representations; they
    are sufficient exactly when S is in addition inverse (P monomial)."""
    for inst in corollary_instances(30, seed=7, G=G):
        S = inst.rees.table
        cond = bool(semiunitary_star_conditions(inst.rees, inst.star))
        exists = _semiunitary_star_rep_exists(S, inst.star)
        if exists:
            assert cond
        assert exists == (cond and brute_force_is_inverse(S).is_inverse)
        assert exists == (brute_force_is_inverse(S).inverse_map == inst.star)


def test_conditions_not_sufficient_tridiagonal():
    """P = [[1,1,0],[1,1,1],[0,1,1]] over the trivial group with the transpose
    satisfies all three conditions, yet the 3-dim irrep has only an indefinite
    invariant form."""
    R = build_rees(3, 3, trivial_group(), [[0, 0, None], [0, 0, 0], [None, 0, 0]])
    star = _rees_star(R)
    assert semiunitary_star_conditions(R, star)
    with pytest.raises(FactorizationObstruction) as err:
        star_representable_all(R.table, star)
    assert err.value.signature == (2, 1)
    assert not _semiunitary_star_rep_exists(R.table, star)


def test_group_as_rees_with_inverse_star():
    G = symmetric_group(3)
    R = build_rees(1, 1, G, [[0]])
    cond = semiunitary_star_conditions(R, _rees_star(R))
    assert cond and cond.star_is_conjugated_inverse
    assert _semiunitary_star_rep_exists(R.table, _rees_star(R))


def test_ss_data_json_and_v():
    G = cyclic_group(2)
    R = build_rees(2, 2, G, [[1, None], [None, 1]])
    ss = corollary_data(R, _rees_star(R))
    assert ss.v(G) == (0, 0)
    d = ss.to_json(G)
    assert d["phi"] == [1, 2] and set(d) == {"phi", "u", "z", "g_star"}
