import pytest

from semirep.catalog import cyclic_group, symmetric_group
from semirep.corpus import (
    canonical_form,
    corollary_instances,
    enumerate_semigroups,
    labeled_count,
    rees_sweep,
)
from semirep.involution import verify_involution
from semirep.semigroup import find_isomorphism, validate_table

# OEIS A023814 (labeled semigroups) and A027851 (up to isomorphism)
LABELED = {1: 1, 2: 8, 3: 113, 4: 3492}
UP_TO_ISO = {1: 1, 2: 5, 3: 24, 4: 188}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_labeled_counts(n):
    assert labeled_count(n) == LABELED[n] == len(enumerate_semigroups(n))


def test_labeled_count_order_four():
    assert labeled_count(4) == LABELED[4]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_isomorphism_class_counts(n):
    assert len(enumerate_semigroups(n, up_to_iso=True)) == UP_TO_ISO[n]


def test_representatives_pairwise_non_isomorphic():
    reps = enumerate_semigroups(3, up_to_iso=True)
    for k, S in enumerate(reps):
        for T in reps[k + 1:]:
            assert find_isomorphism(S, T) is None


def test_canonical_form_is_invariant():
    S = enumerate_semigroups(3)[57]
    T = S.relabel([2, 0, 1])
    assert canonical_form(S.mul) == canonical_form(T.mul)


def test_rees_sweep_contents():
    sweep = rees_sweep()
    assert len(sweep) == 76
    assert all(R.is_regular for R in sweep)
    assert {(R.m, R.n, R.group.order) for R in sweep} == {
        (m, n, k) for m in (1, 2) for n in (1, 2) for k in (1, 2)
    }
    for R in sweep:
        validate_table(R.table.mul, R.table.zero)


@pytest.mark.parametrize("G", [cyclic_group(2), symmetric_group(3)], ids=["C2", "S3"])
def test_corollary_instances_are_involutive(G):
    insts = corollary_instances(10, seed=5, G=G)
    assert len(insts) == 10
    for inst in insts:
        verify_involution(inst.rees.table, inst.star)
        assert G.is_central(inst.z)


def test_corollary_instances_are_seeded():
    a = corollary_instances(5, seed=11)
    b = corollary_instances(5, seed=11)
    assert [(i.rees.P, i.star) for i in a] == [(i.rees.P, i.star) for i in b]
