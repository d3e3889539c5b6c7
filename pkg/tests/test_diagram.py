"""Core diagram type: validation, canonical forms, chains, dimension."""

from itertools import permutations

import pytest

import quasiplanar as qp

Q5_COVERS = ((0, 1), (0, 2), (1, 3), (2, 3), (3, 4))


def test_validate_accepts_catalog_fixtures():
    for d in (qp.chain(2), qp.chain(5), qp.diamond(), qp.capped_diamond(),
              qp.three_atom_diamond(), qp.pentagon(), qp.hexagon()):
        assert qp.revalidate(d) == d


def test_validate_closes_redundant_order_pairs():
    # passing the full strict order instead of covers changes nothing
    sparse = qp.validate(3, [(0, 1), (1, 2)])
    dense = qp.validate(3, [(0, 1), (1, 2), (0, 2)])
    assert sparse == dense
    assert dense.cover_pairs() == ((0, 1), (1, 2))


def test_validate_one_element_diagram():
    d = qp.validate(1, [])
    assert d.bottom == d.top == 0
    assert d.interior() == ()


def test_validate_rejects_bad_n():
    with pytest.raises(ValueError):
        qp.validate(0, [])
    with pytest.raises(ValueError):
        qp.validate(-3, [])
    with pytest.raises(ValueError):
        qp.validate("5", [])


def test_validate_rejects_malformed_pairs():
    with pytest.raises(ValueError):
        qp.validate(3, [(0, 5)])
    with pytest.raises(ValueError):
        qp.validate(3, [(0,)])
    with pytest.raises(ValueError):
        qp.validate(3, [(0, 1)], left=[(9, 0)])


def test_validate_rejects_self_loop():
    with pytest.raises(qp.NotAPartialOrder):
        qp.validate(3, [(0, 1), (1, 1)])


def test_validate_rejects_cycle():
    with pytest.raises(qp.NotAPartialOrder):
        qp.validate(2, [(0, 1), (1, 0)])


def test_validate_rejects_two_minima():
    with pytest.raises(qp.NotBounded):
        qp.validate(3, [(0, 2), (1, 2)])


def test_validate_rejects_two_maxima():
    with pytest.raises(qp.NotBounded):
        qp.validate(3, [(0, 1), (0, 2)])


def test_validate_rejects_left_on_comparable():
    with pytest.raises(qp.LeftOnComparable):
        qp.validate(5, Q5_COVERS, [(1, 2), (0, 1)])
    with pytest.raises(qp.LeftOnComparable):
        qp.validate(5, Q5_COVERS, [(1, 1)])


def test_validate_rejects_double_orientation():
    with pytest.raises(qp.NotLinearizable):
        qp.validate(5, Q5_COVERS, [(1, 2), (2, 1)])


def test_validate_rejects_missing_orientation():
    with pytest.raises(qp.LeftIncomplete):
        qp.validate(5, Q5_COVERS, [])


def test_validate_rejects_cyclic_orientation():
    # 1 left of 2 left of 3 left of 1 cannot be swept in one pass
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    with pytest.raises(qp.NotLinearizable):
        qp.validate(5, covers, [(1, 2), (2, 3), (3, 1)])


def test_relation_queries_on_capped_diamond():
    d = qp.capped_diamond()
    assert d.bottom == 0 and d.top == 4
    assert d.leq(0, 4) and d.leq(1, 3) and not d.leq(1, 2)
    assert d.lt(0, 1) and not d.lt(1, 1)
    assert d.incomparable(1, 2) and not d.incomparable(1, 3)
    assert d.left(1, 2) and not d.left(2, 1)
    assert d.interior() == (1, 2, 3)
    assert d.incomparable_pairs() == ((1, 2),)
    assert set(d.cover_pairs()) == set(Q5_COVERS)


def test_sweep_orders_on_capped_diamond():
    d = qp.capped_diamond()
    assert d.lam_order == (0, 1, 2, 3, 4)
    assert d.rho_order == (0, 2, 1, 3, 4)
    r = qp.realizer(d)
    assert r.lam_order == d.lam_order and r.rho_order == d.rho_order


def test_canonical_forms_of_fixtures():
    assert qp.canonical_form(qp.chain(2)) == ()
    assert qp.canonical_form(qp.chain(3)) == (1,)
    assert qp.canonical_form(qp.diamond()) == (2, 1)
    assert qp.canonical_form(qp.capped_diamond()) == (2, 1, 3)
    assert qp.canonical_form(qp.three_atom_diamond()) == (3, 2, 1)


def test_from_canonical_round_trips_every_small_permutation():
    for k in range(5):
        for perm in permutations(range(1, k + 1)):
            assert qp.canonical_form(qp.from_canonical(perm)) == perm


def test_from_canonical_decodes_fixtures():
    assert qp.from_canonical(()) == qp.chain(2)
    assert qp.from_canonical((1,)) == qp.chain(3)
    assert qp.similar(qp.from_canonical((2, 1, 3)), qp.capped_diamond())


def test_from_canonical_rejects_non_permutations():
    for bad in ((0, 1), (1, 1), (2, 3), (2,)):
        with pytest.raises(ValueError):
            qp.from_canonical(bad)


def test_similar_is_label_independent():
    d = qp.capped_diamond()
    shuffled = qp.relabel(d, (4, 0, 1, 2, 3))
    assert shuffled != d
    assert qp.similar(shuffled, d)
    assert not qp.similar(d, qp.chain(5))


def test_mirror_is_an_involution():
    d = qp.capped_diamond()
    assert qp.mirror(qp.mirror(d)) == d


def test_mirror_inverts_the_canonical_permutation():
    d = qp.from_canonical((2, 3, 1))
    assert qp.canonical_form(qp.mirror(d)) == (3, 1, 2)
    assert not qp.similar(d, qp.mirror(d))
    # involutions are exactly the self-mirror diagrams
    e = qp.from_canonical((2, 1, 3))
    assert qp.similar(e, qp.mirror(e))


def test_canonical_relabel_sorts_by_sweep_position():
    d = qp.relabel(qp.capped_diamond(), (4, 0, 1, 2, 3))
    c = qp.canonical_relabel(d)
    assert c.lam_order == tuple(range(5))
    assert qp.canonical_relabel(c) == c
    assert qp.similar(c, d)


def test_boundary_chains_of_fixtures():
    assert qp.boundary_chains(qp.capped_diamond()) == ((0, 1, 3, 4), (0, 2, 3, 4))
    assert qp.boundary_chains(qp.diamond()) == ((0, 1, 3), (0, 2, 3))
    assert qp.boundary_chains(qp.chain(4)) == ((0, 1, 2, 3), (0, 1, 2, 3))


def test_boundary_chains_need_a_lattice():
    with pytest.raises(qp.NotALattice) as exc:
        qp.boundary_chains(qp.hexagon())
    assert exc.value.witness == (1, 2, 3, 4)


def test_maximal_chains_of_capped_diamond():
    chains = qp.maximal_chains(qp.capped_diamond())
    assert sorted(chains) == [(0, 1, 3, 4), (0, 2, 3, 4)]


def test_chain_side_classification():
    d = qp.capped_diamond()
    left = (0, 1, 3, 4)
    assert qp.chain_side(d, left, 1) == "on"
    assert qp.chain_side(d, left, 2) == "right"
    assert qp.chain_side(d, (0, 2, 3, 4), 1) == "left"


def test_chain_side_never_mixed_on_enumerated_diagrams():
    for d in qp.enumerate_quasiplanar(5):
        for chain in qp.maximal_chains(d):
            for x in range(d.n):
                assert qp.chain_side(d, chain, x) != "mixed"


def test_order_dimension_two_orients_the_diamond():
    d = qp.order_dimension_le2(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert d is not None
    assert qp.canonical_form(d) in ((2, 1),)
    assert d.up == qp.diamond().up


def test_order_dimension_two_rejects_the_cube():
    n, covers = qp.boolean_cube_covers()
    assert qp.order_dimension_le2(n, covers) is None


def test_order_dimension_two_on_chains_and_antichains():
    d = qp.order_dimension_le2(3, [(0, 1), (1, 2)])
    assert d.left_pairs() == ()
    # wide antichain still fine: dimension two suffices for 0 + k + 1 layers
    covers = [(0, x) for x in (1, 2, 3)] + [(x, 4) for x in (1, 2, 3)]
    d = qp.order_dimension_le2(5, covers)
    assert d is not None and d.up == qp.three_atom_diamond().up


def test_order_dimension_two_requires_bounds():
    with pytest.raises(qp.NotBounded):
        qp.order_dimension_le2(3, [])
    with pytest.raises(ValueError):
        qp.order_dimension_le2(0, [])
