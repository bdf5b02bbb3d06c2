import itertools
import random
from fractions import Fraction

import pytest

from kpoly.lattice import point_set
from kpoly.mobius import mu_support
from kpoly.polymatroid import is_base_polymatroid, is_g_polymatroid
from kpoly.subspaces import (
    SubspaceConfig,
    config_from_json,
    config_to_json,
    linear_polymatroid,
    matrix_rank,
    random_config,
    rank_of,
    rank_table,
)

F = Fraction


def lines(*vecs):
    return SubspaceConfig(len(vecs[0]), tuple((tuple(map(F, v)),) for v in vecs))


def test_matrix_rank_exact():
    assert matrix_rank([]) == 0
    assert matrix_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert matrix_rank([[F(1, 3), F(0)], [F(0), F(5, 7)]]) == 2
    # a matrix that misbehaves under floating point pivoting
    rows = [
        [F(1, 10**12), F(1)],
        [F(1), F(10**12)],
    ]
    assert matrix_rank(rows) == 1


def test_rank_of_independent_lines():
    config = lines((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert rank_of(config, (1, 2, 3)) == 3
    assert rank_of(config, ()) == 0
    assert rank_of(config, (2,)) == 1


def test_rank_duplicated_subspace():
    config = lines((1, 1), (1, 1), (0, 1))
    assert rank_of(config, (1, 2)) == rank_of(config, (1,)) == 1
    assert rank_of(config, (1, 2, 3)) == 2


def test_rank_generic_line_pairs():
    config = lines((1, 0), (0, 1), (1, 1))
    for pair in itertools.combinations((1, 2, 3), 2):
        assert rank_of(config, pair) == 2


def test_rank_submodularity_randomized():
    rng = random.Random(21)
    for _ in range(60):
        p, q = rng.randint(2, 4), rng.randint(2, 4)
        config = random_config(p, q, rng)
        table = rank_table(config)
        subsets = list(table)
        for _ in range(20):
            A, B = rng.choice(subsets), rng.choice(subsets)
            assert table[A] + table[B] >= table[A | B] + table[A & B]
        # monotone and bounded
        for J, r in table.items():
            assert 0 <= r <= config.q


def test_linear_polymatroid_independent_lines():
    config = lines((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert linear_polymatroid(config) == point_set([(1, 1, 1)])


def test_linear_polymatroid_duplicate_line():
    config = lines((2, 3), (2, 3))
    assert linear_polymatroid(config) == point_set([(1, 0), (0, 1)])


def test_linear_polymatroid_three_generic_lines_in_plane():
    config = lines((1, 0), (0, 1), (1, 1))
    assert linear_polymatroid(config) == point_set([(1, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_linear_polymatroid_mixed_dimensions():
    config = SubspaceConfig(
        3,
        (
            ((F(1), F(0), F(0)), (F(0), F(1), F(0))),  # a plane
            ((F(1), F(1), F(1)),),                      # a line inside general position
        ),
    )
    P = linear_polymatroid(config)
    assert is_base_polymatroid(P)
    assert all(sum(y) == 3 for y in P)


def test_output_always_base_polymatroid_randomized():
    rng = random.Random(1001)
    for _ in range(80):
        config = random_config(rng.randint(1, 4), rng.randint(1, 4), rng)
        P = linear_polymatroid(config)
        assert is_base_polymatroid(P)


def test_theorem_c_battery_small():
    rng = random.Random(555)
    for _ in range(40):
        config = random_config(rng.randint(2, 4), rng.randint(2, 4), rng)
        P = linear_polymatroid(config)
        assert is_g_polymatroid(mu_support(P), "axioms")


def test_config_validation():
    with pytest.raises(ValueError):
        SubspaceConfig(2, (((F(0), F(0)),),))  # all zero
    with pytest.raises(ValueError):
        SubspaceConfig(2, (((F(1),),),))  # wrong length


def test_config_json_roundtrip():
    rng = random.Random(8)
    config = random_config(3, 3, rng)
    assert config_from_json(config_to_json(config)) == config
