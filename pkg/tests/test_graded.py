import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkcat.graded import (
    K3_UNIT,
    POINT,
    GradedDims,
    burnside_invariant_dims,
    fixed_subset_counts,
    hyperkahler_unit_verdict,
    invariant_dims_subset_model,
    k3_power_dims,
    kunneth_tensor,
    tensor_power,
)
from hkcat.permgroup import (
    Permutation,
    PermutationGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    homogeneity_profile,
    symmetric_group,
)
from hkcat.projgroups import projective_group_generators

import oracles

graded = st.dictionaries(st.integers(0, 12), st.integers(0, 9), max_size=5).map(GradedDims)


def random_group(rnd, max_degree=8):
    n = rnd.randint(1, max_degree)
    gens = []
    for _ in range(rnd.randint(1, 3)):
        images = list(range(n))
        rnd.shuffle(images)
        gens.append(Permutation(tuple(images)))
    return PermutationGroup(gens)


def test_graded_dims_basics():
    g = GradedDims({0: 1, 2: 0, 4: 3})
    assert g.support == (0, 4)
    assert g[2] == 0 and g[4] == 3
    assert g.total() == 4
    assert g.to_json() == {"0": 1, "4": 3}
    assert GradedDims.from_json(g.to_json()) == g
    assert g == {0: 1, 4: 3}
    with pytest.raises(ValueError):
        GradedDims({-1: 1})
    with pytest.raises(ValueError):
        GradedDims({0: -2})


def test_json_keys_ascend_numerically():
    g = GradedDims({10: 1, 2: 1, 0: 1})
    assert list(g.to_json()) == ["0", "2", "10"]


def test_kunneth_small():
    assert K3_UNIT @ K3_UNIT == {0: 1, 2: 2, 4: 1}
    assert kunneth_tensor(K3_UNIT, POINT) == K3_UNIT
    assert tensor_power(K3_UNIT, 0) == POINT


@given(graded, graded, graded)
def test_kunneth_associative_commutative_unital(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ b == b @ a
    assert a @ POINT == a
    assert (a @ b).total() == a.total() * b.total()


@given(st.integers(0, 12))
def test_k3_power_closed_form(n):
    assert tensor_power(K3_UNIT, n) == k3_power_dims(n)


def test_trivial_group_gives_full_power():
    g = PermutationGroup([Permutation.identity(5)])
    assert invariant_dims_subset_model(g) == k3_power_dims(5)


def test_fixed_subset_counts():
    # a 4-cycle fixes only the empty set and everything
    assert fixed_subset_counts((4,), 4) == [1, 0, 0, 0, 1]
    # (0 1)(2 3) fixes {}, {0,1}, {2,3}, {0,1,2,3}
    assert fixed_subset_counts((2, 2), 4) == [1, 0, 2, 0, 1]


@pytest.mark.parametrize("g", [
    cyclic_group(4), cyclic_group(6), dihedral_group(5), alternating_group(6),
    projective_group_generators("PGL2", 7),
], ids=repr)
def test_burnside_agrees_with_bfs(g):
    assert burnside_invariant_dims(g) == invariant_dims_subset_model(g)


def test_burnside_matches_element_oracle():
    g = dihedral_group(6)
    els = oracles.closure([p.images for p in g.generators], 6)
    assert [burnside_invariant_dims(g)[2 * k] for k in range(7)] == [
        oracles.burnside_count(els, 6, k) for k in range(7)
    ]


def test_burnside_vs_bfs_on_fifty_seeded_groups():
    rnd = random.Random(20240501)
    for _ in range(50):
        g = random_group(rnd)
        assert burnside_invariant_dims(g) == invariant_dims_subset_model(g), g.generators


@pytest.mark.parametrize("g, expected", [
    (symmetric_group(5), True),
    (alternating_group(7), True),
    (projective_group_generators("AGL1", 5), True),
    (projective_group_generators("PGL2", 5), True),
    (cyclic_group(5), False),
    (dihedral_group(5), False),
])
def test_unit_verdicts(g, expected):
    assert hyperkahler_unit_verdict(g).is_hyper_kahler is expected


def test_negative_verdict_reports_offenders():
    v = hyperkahler_unit_verdict(cyclic_group(4))
    assert not v.is_hyper_kahler
    assert v.offending_degrees == ((4, 2),)
    assert v.invariant_dims == {0: 1, 2: 1, 4: 2, 6: 1, 8: 1}
    assert v.to_json()["offending_degrees"] == [[4, 2]]


@given(st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_verdict_equals_homogeneity(rnd):
    g = random_group(rnd, 7)
    assert hyperkahler_unit_verdict(g).is_hyper_kahler == homogeneity_profile(g).all_transitive


@given(st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_adding_generators_never_raises_dimensions(rnd):
    g = random_group(rnd, 7)
    extra = list(range(g.degree))
    rnd.shuffle(extra)
    bigger = PermutationGroup(list(g.generators) + [Permutation(tuple(extra))])
    small, large = invariant_dims_subset_model(g), invariant_dims_subset_model(bigger)
    assert all(large[d] <= small[d] for d in small)
