import itertools
import random

import pytest

from kpoly.lattice import PointSet, SignedSupport, point_set
from kpoly.stalactite import (
    collapse_fixed_components,
    dominance_sums,
    embed_signed_support,
    facet_of,
    facets_from_msupp,
    hilbert_eval,
    hilbert_text,
    hsupp_from_msupp,
    increasing_path_check,
    mobius_sum_check,
    neighbor_directions,
    stalactite,
    stalactite_union,
    verify_mobius_sums,
    verify_shelling,
)
from running_example import (
    AMBIENT_M3,
    AMBIENT_M5,
    HILBERT_3,
    HILBERT_5,
    MSUPP_3,
    MSUPP_5,
    STALACTITES_312,
    STALACTITES_NATURAL,
)


def test_stalactite_of_233():
    assert stalactite((2, 3, 3), (1, 2)) == point_set(
        [(2, 3, 3), (1, 3, 3), (2, 2, 3), (1, 2, 3)]
    )


def test_stalactite_empty_indices():
    assert stalactite((2, 3, 3), ()) == point_set([(2, 3, 3)])


def test_stalactite_cardinality_is_power_of_two():
    assert len(stalactite((3, 2, 3), (1, 2))) == 4
    assert len(stalactite((1, 1, 1), (1, 2, 3))) == 8


def test_stalactite_rejects_bad_indices():
    with pytest.raises(ValueError):
        stalactite((2, 0, 3), (2,))  # zero coordinate
    with pytest.raises(ValueError):
        stalactite((2, 1, 3), (1, 1))  # duplicates


def test_neighbor_directions_example():
    V = point_set([(1, 3, 4), (1, 4, 3), (2, 2, 4)])
    assert neighbor_directions((2, 3, 3), V) == (1, 2)
    assert neighbor_directions((1, 3, 4), PointSet(3)) == ()


def test_stalactite_tables_both_orders():
    T = point_set(MSUPP_3)
    for order, table in ((None, STALACTITES_NATURAL), ((3, 1, 2), STALACTITES_312)):
        entries = stalactite_union(T, order)
        got = {a: set(st) for a, st in entries}
        assert got == table
    nat = set().union(*STALACTITES_NATURAL.values())
    alt = set().union(*STALACTITES_312.values())
    assert nat == alt == set(HILBERT_3)


def test_hsupp_running_example_3_and_5_coords():
    H3 = hsupp_from_msupp(point_set(MSUPP_3))
    assert H3.terms == HILBERT_3
    H5 = hsupp_from_msupp(point_set(MSUPP_5))
    assert H5.terms == HILBERT_5


def test_hsupp_singleton():
    H = hsupp_from_msupp(point_set([(2, 1, 0)]))
    assert H.terms == {(2, 1, 0): 1}


def test_hsupp_requires_polymatroid():
    with pytest.raises(ValueError):
        hsupp_from_msupp(point_set([(2, 0), (0, 2)]))
    with pytest.raises(ValueError):
        hsupp_from_msupp(point_set([(1, 0), (0, 2)]))


def test_sign_alternation():
    H = hsupp_from_msupp(point_set(MSUPP_3))
    D = 8
    for n, c in H.terms.items():
        assert (c > 0) == ((D - sum(n)) % 2 == 0)


def test_hilbert_eval_at_zero_is_one():
    H = hsupp_from_msupp(point_set(MSUPP_3))
    assert hilbert_eval(H, (0, 0, 0)) == 1


def test_hilbert_eval_constant():
    H = SignedSupport(3, {(0, 0, 0): 7})
    for t in itertools.product(range(-1, 3), repeat=3):
        assert hilbert_eval(H, t) == 7


def test_hilbert_text_mentions_binomials():
    H = SignedSupport(2, {(1, 0): 1, (0, 0): -2})
    assert hilbert_text(H) == "-2*C(t1+0,0)*C(t2+0,0)+1*C(t1+1,1)*C(t2+0,0)"


def test_facet_formula():
    F = facet_of((1,), (2,))
    assert F == frozenset({(1, 1), (1, 2)})
    facets = facets_from_msupp(point_set(MSUPP_5), AMBIENT_M5)
    assert len(facets) == 7
    assert all(len(F) == 16 + 5 for F in facets)


def test_facet_intersection_is_min_facet():
    rng = random.Random(11)
    m = (4, 3, 5)
    for _ in range(100):
        s = tuple(rng.randint(0, mi) for mi in m)
        n = tuple(rng.randint(0, mi) for mi in m)
        lhs = facet_of(s, m) & facet_of(n, m)
        assert lhs == facet_of(tuple(map(min, s, n)), m)


def test_facets_require_bound():
    with pytest.raises(ValueError):
        facets_from_msupp(point_set([(3, 0)]), (2, 2))


def test_shelling_running_example():
    facets = facets_from_msupp(point_set(MSUPP_5), AMBIENT_M5)
    assert verify_shelling(facets)


def test_shelling_single_facet():
    assert verify_shelling([frozenset({(1, 0), (1, 1)})])


def test_shelling_negative_control():
    # order F_{(1,3)}, F_{(3,1)}, F_{(2,2)} on the ambient (3,3): the first
    # two facets overlap in codimension two with nothing to fill the gap
    msupp = point_set([(1, 3), (2, 2), (3, 1)])
    facets = facets_from_msupp(msupp, (3, 3))
    assert verify_shelling(facets)
    bad = [facets[0], facets[2], facets[1]]
    chk = verify_shelling(bad)
    assert not chk
    assert chk.witness == {"condition": "shelling", "i": 2, "j": 1}


def test_shelling_purity_error():
    with pytest.raises(ValueError):
        verify_shelling([frozenset({(1, 0)}), frozenset({(1, 0), (1, 1)})])


def test_increasing_paths():
    H = hsupp_from_msupp(point_set(MSUPP_3))
    assert increasing_path_check(H)
    gap = SignedSupport(2, {(0, 0): 1, (2, 0): 1})
    chk = increasing_path_check(gap)
    assert not chk and chk.witness["stuck"] == [[0, 0]]
    assert increasing_path_check(SignedSupport(2, {(1, 1): 1}))


def test_mobius_sum_check_values():
    H = hsupp_from_msupp(point_set(MSUPP_3))
    assert mobius_sum_check(H, (1, 2, 3)) == 1
    assert mobius_sum_check(H, (4, 1, 3)) == 1  # a top point itself
    assert mobius_sum_check(H, (0, 0, 0)) == 1  # the full coefficient sum
    with pytest.raises(ValueError):
        mobius_sum_check(H, (4, 4, 4))


def test_dominance_sums_match_pointwise_check():
    H = hsupp_from_msupp(point_set(MSUPP_3))
    sums = dominance_sums(H)
    tops = MSUPP_3
    for n, s in sums.items():
        if any(all(w[i] >= n[i] for i in range(3)) for w in tops):
            assert s == mobius_sum_check(H, n)
    assert verify_mobius_sums(H)


def test_collapse_and_embed():
    msupp5 = point_set(MSUPP_5)
    small, m_small, keep = collapse_fixed_components(msupp5, AMBIENT_M5)
    assert keep == (1, 2, 3)
    assert m_small == AMBIENT_M3
    assert small == point_set(MSUPP_3)
    H3 = hsupp_from_msupp(small)
    H5 = embed_signed_support(H3, keep, AMBIENT_M5)
    assert H5.terms == HILBERT_5
