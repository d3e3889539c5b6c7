"""Enumeration, the independent oracle, and the law suite plumbing."""

import pytest

import quasiplanar as qp
from quasiplanar import enumeration


def test_expected_count_is_factorial():
    assert [qp.expected_count(s) for s in range(2, 10)] == [
        1, 1, 2, 6, 24, 120, 720, 5040,
    ]
    with pytest.raises(ValueError):
        qp.expected_count(1)
    with pytest.raises(ValueError):
        qp.expected_count("6")


def test_enumerate_walks_canonical_permutations_in_lex_order():
    assert [qp.canonical_form(d) for d in qp.enumerate_quasiplanar(4)] == [
        (1, 2), (2, 1),
    ]
    forms = [qp.canonical_form(d) for d in qp.enumerate_quasiplanar(5)]
    assert forms == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
    ]


def test_enumerated_diagrams_are_valid_and_canonically_labeled():
    for size in (2, 3, 4, 5, 6):
        for d in qp.enumerate_quasiplanar(size):
            assert d.n == size
            assert d.lam_order == tuple(range(size))
            assert qp.revalidate(d) == d


def test_enumerate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        list(qp.enumerate_quasiplanar(1))
    with pytest.raises(ValueError):
        qp.count_quasiplanar(0)


def test_counts_match_the_factorial():
    assert [qp.count_quasiplanar(s) for s in range(2, 8)] == [
        1, 1, 2, 6, 24, 120,
    ]


def test_labeled_poset_generator_matches_known_counts():
    # number of partial orders on k labeled points
    assert [len(enumeration._labeled_posets(k)) for k in range(6)] == [
        1, 1, 3, 19, 219, 4231,
    ]


def test_oracle_classes_match_the_fast_enumeration():
    for size in (2, 3, 4, 5):
        reps = qp.oracle_enumerate(size)
        fast = list(qp.enumerate_quasiplanar(size))
        assert len(reps) == len(fast) == qp.expected_count(size)
        for r in reps:
            matches = [f for f in fast if qp.similar_by_search(r, f)]
            assert len(matches) == 1


def test_oracle_classes_match_at_size_six():
    reps = qp.oracle_enumerate(6)
    fast = list(qp.enumerate_quasiplanar(6))
    assert len(reps) == 24
    for r in reps:
        assert sum(1 for f in fast if qp.similar_by_search(r, f)) == 1


def test_oracle_refuses_large_sizes():
    with pytest.raises(qp.SizeTooLarge):
        qp.oracle_enumerate(7)
    with pytest.raises(ValueError):
        qp.oracle_enumerate(1)


def test_search_similarity_agrees_with_canonical_similarity():
    ds = list(qp.enumerate_quasiplanar(5))
    for a in ds:
        for b in ds:
            assert qp.similar_by_search(a, b) == qp.similar(a, b)
        m = qp.mirror(a)
        assert qp.similar_by_search(a, m) == qp.similar(a, m)


def test_order_isomorphism_search():
    d = qp.capped_diamond()
    assert qp.order_isomorphic_by_search(d, qp.mirror(d))
    assert qp.order_isomorphic_by_search(d, qp.relabel(d, (3, 1, 0, 2, 4)))
    assert not qp.order_isomorphic_by_search(d, qp.chain(5))


def test_orientation_first_changes_the_lattice_at_size_six():
    assert qp.dissimilar_same_order_witness(5) is None
    pair = qp.dissimilar_same_order_witness(6)
    assert pair is not None
    a, b = pair
    assert (qp.canonical_form(a), qp.canonical_form(b)) == (
        (3, 4, 2, 1), (4, 2, 3, 1),
    )
    assert qp.order_isomorphic_by_search(a, b)
    assert not qp.similar(a, b)
    assert not qp.lattice_isomorphic(
        qp.lattice_from_filters(a), qp.lattice_from_filters(b)
    )


def test_mirror_dissimilarity_first_appears_at_size_five():
    for size in (2, 3, 4):
        assert all(
            qp.similar(d, qp.mirror(d)) for d in qp.enumerate_quasiplanar(size)
        )
    movers = [
        qp.canonical_form(d)
        for d in qp.enumerate_quasiplanar(5)
        if not qp.similar(d, qp.mirror(d))
    ]
    assert movers == [(2, 3, 1), (3, 1, 2)]


def test_filter_lattices_are_pairwise_dissimilar_at_size_five():
    forms = {
        qp.canonical_form(qp.lattice_from_filters(d))
        for d in qp.enumerate_quasiplanar(5)
    }
    assert len(forms) == 6


def test_verify_suite_reports_clean_sizes():
    report = qp.verify_suite(5)
    assert report.size == 5
    assert report.count == report.expected == 6
    assert report.passed
    assert report.elapsed >= 0
    names = [r.name for r in report.results]
    assert names == list(qp.check_names()) + [
        "filter lattices are pairwise dissimilar"
    ]
    assert all(r.passed and r.witness == "" for r in report.results)


def test_verify_suite_carries_failures_as_data(monkeypatch):
    def broken(ctx):
        raise AssertionError("injected failure")

    monkeypatch.setattr(
        enumeration, "_CHECKS", enumeration._CHECKS + (("injected law", broken),)
    )
    report = qp.verify_suite(4)
    assert not report.passed
    injected = [r for r in report.results if r.name == "injected law"]
    assert len(injected) == 1
    assert not injected[0].passed
    assert "perm (1, 2): injected failure" in injected[0].witness
    assert "1 more" in injected[0].witness
    # the real laws still pass and the count is still right
    assert report.count == report.expected == 2
    assert all(r.passed for r in report.results if r.name != "injected law")


def test_corrupted_orientation_is_caught_by_validation():
    d = qp.lattice_from_filters(qp.from_canonical((3, 4, 2, 1)))
    covers = d.cover_pairs()
    left = list(d.left_pairs())
    assert len(left) >= 2
    # dropping one orientation leaves a hole
    with pytest.raises(qp.LeftIncomplete):
        qp.validate(d.n, covers, left[1:])
    # doubling one contradicts itself
    with pytest.raises(qp.NotLinearizable):
        qp.validate(d.n, covers, left + [(left[0][1], left[0][0])])


@pytest.mark.slow
def test_verify_suite_deep_tier():
    report = qp.verify_suite(7)
    assert report.passed
    assert report.count == 120
    report = qp.verify_suite(8)
    assert report.passed
    assert report.count == 720


def test_flipping_one_orientation_never_goes_unnoticed():
    # a flipped pair either breaks validity or changes the canonical form
    d = qp.lattice_from_filters(qp.from_canonical((3, 4, 2, 1)))
    covers = d.cover_pairs()
    left = list(d.left_pairs())
    for i in range(len(left)):
        flipped = left[: i] + [(left[i][1], left[i][0])] + left[i + 1:]
        try:
            redrawn = qp.validate(d.n, covers, flipped)
        except qp.DiagramError:
            continue
        assert not qp.similar(redrawn, d)
