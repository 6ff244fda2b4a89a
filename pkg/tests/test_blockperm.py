import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altperm.blockperm import (
    EMPTY_PERM,
    BlockPerm,
    all_perms,
    alt_basis,
    block_normalize,
    cross_cycle,
    euler_zigzag,
    is_alternating,
    make_block_perm,
    marker_simplex,
    parse_perm,
    prec_less,
    prefix_set,
)
from altperm.chains import boundary

from conftest import block_perms, index_sets


class TestConstruction:
    def test_build_from_index_set(self):
        x = make_block_perm({1, 2, 3, 4}, [1, 3, 2, 4])
        assert str(x) == "1,3/2,4"

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError):
            make_block_perm({1, 2, 3, 4}, [1, 3, 2])

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            BlockPerm((1, 1, 2, 3))

    def test_wrong_index_set_rejected(self):
        with pytest.raises(ValueError):
            make_block_perm({1, 2, 3, 4}, [1, 3, 2, 5])

    def test_three_block_example(self):
        x = make_block_perm({2, 3, 5, 6, 7, 9}, [7, 9, 5, 6, 2, 3])
        assert x.blocks == ((7, 9), (5, 6), (2, 3))

    def test_parse_round_trip(self):
        assert parse_perm("7,9/5,6/2,3").entries == (7, 9, 5, 6, 2, 3)
        assert parse_perm(str(parse_perm("1,4/2,3"))) == parse_perm("1,4/2,3")
        assert parse_perm("") == EMPTY_PERM


class TestAlternating:
    def test_up_down_pattern(self):
        assert is_alternating(parse_perm("1,3/2,4"))
        assert not is_alternating(parse_perm("1,2/3,4"))
        assert is_alternating(parse_perm("3,4/1,2"))
        assert is_alternating(EMPTY_PERM)

    def test_basis_of_four(self):
        basis = alt_basis({1, 2, 3, 4})
        assert [str(a) for a in basis] == [
            "1,3/2,4", "1,4/2,3", "2,3/1,4", "2,4/1,3", "3,4/1,2",
        ]

    def test_empty_basis(self):
        assert alt_basis(()) == [EMPTY_PERM]

    def test_basis_count_six_against_filter(self):
        # brute-force oracle: filter all 720 orderings by the zigzag pattern
        I = (1, 2, 3, 4, 5, 7)
        expected = set()
        for p in itertools.permutations(I):
            if all(p[i] < p[i + 1] if i % 2 == 0 else p[i] > p[i + 1]
                   for i in range(len(p) - 1)):
                expected.add(p)
        assert {a.entries for a in alt_basis(I)} == expected
        assert len(expected) == 61

    @pytest.mark.parametrize("size", [0, 2, 4, 6, 8, 10])
    def test_basis_counts_match_zigzag(self, size):
        I = tuple(range(1, size + 1))
        assert len(alt_basis(I)) == euler_zigzag(size)


class TestZigzagNumbers:
    def test_reference_values(self):
        assert euler_zigzag(0) == 1
        assert euler_zigzag(4) == 5
        assert euler_zigzag(6) == 61
        assert euler_zigzag(8) == 1385

    def test_enumeration_cross_check(self):
        for size in (2, 4, 6):
            count = sum(
                1
                for p in itertools.permutations(range(1, size + 1))
                if all(p[i] < p[i + 1] if i % 2 == 0 else p[i] > p[i + 1]
                       for i in range(size - 1))
            )
            assert euler_zigzag(size) == count


class TestPrefixSets:
    def test_singleton_positions(self):
        x = parse_perm("1,5/3,4")
        assert prefix_set(x, 1) == (1,)
        assert prefix_set(x, 2) == (5,)

    def test_later_positions(self):
        x = parse_perm("1,5/3,4")
        assert prefix_set(x, 3) == (1, 3, 5)
        assert prefix_set(x, 4) == (1, 4, 5)
        assert prefix_set(parse_perm("1,3/4,5"), 4) == (1, 3, 5)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            prefix_set(parse_perm("1,2"), 3)


class TestMarkerSimplex:
    def test_two_blocks(self):
        assert marker_simplex(parse_perm("1,3/2,4")) == ((1,), (1, 2, 3))

    def test_three_blocks(self):
        assert marker_simplex(parse_perm("7,9/5,6/2,3")) == (
            (7,), (5, 7, 9), (2, 5, 6, 7, 9),
        )

    def test_paper_sets_example(self):
        assert marker_simplex(parse_perm("1,5/3,4")) == ((1,), (1, 3, 5))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            marker_simplex(EMPTY_PERM)


class TestCrossCycle:
    def test_signed_expansion(self):
        chain = cross_cycle(parse_perm("1,5/3,4"))
        assert chain == {
            ((1,), (1, 3, 5)): Fraction(1),
            ((1,), (1, 4, 5)): Fraction(-1),
            ((5,), (1, 3, 5)): Fraction(-1),
            ((5,), (1, 4, 5)): Fraction(1),
        }

    def test_zero_sphere(self):
        assert cross_cycle(parse_perm("1,2")) == {
            ((1,),): Fraction(1),
            ((2,),): Fraction(-1),
        }

    def test_is_cycle(self):
        assert boundary(cross_cycle(parse_perm("1,3/2,4"))) == {}

    @settings(max_examples=60, deadline=None)
    @given(block_perms(max_blocks=3))
    def test_boundary_vanishes(self, x):
        assert boundary(cross_cycle(x)) == {}

    @settings(max_examples=60, deadline=None)
    @given(block_perms(max_blocks=3))
    def test_marker_is_in_support(self, x):
        assert marker_simplex(x) in cross_cycle(x)


class TestBlockSumOrder:
    def test_last_sum_decides(self):
        assert prec_less(parse_perm("1,3/2,4"), parse_perm("1,2/3,4"))
        assert prec_less(parse_perm("3,4/1,2"), parse_perm("1,3/2,4"))

    def test_equal_sum_vectors_incomparable(self):
        x, y = parse_perm("1,4/2,3"), parse_perm("2,3/1,4")
        assert not prec_less(x, y)
        assert not prec_less(y, x)

    def test_mismatched_sets_rejected(self):
        with pytest.raises(ValueError):
            prec_less(parse_perm("1,2"), parse_perm("3,4"))

    @settings(max_examples=80, deadline=None)
    @given(index_sets(max_blocks=2), st.randoms(use_true_random=False))
    def test_strict_partial_order(self, I, rnd):
        perms = [BlockPerm(tuple(rnd.sample(I, len(I)))) for _ in range(3)]
        x, y, z = perms
        assert not prec_less(x, x)
        if prec_less(x, y):
            assert not prec_less(y, x)
        if prec_less(x, y) and prec_less(y, z):
            assert prec_less(x, z)

    def test_alternating_minimal_in_face_set(self):
        # sources are order-minimal among the permutations whose cycle
        # carries their marker; alternating members sit strictly above
        from altperm.coeffgraph import face_decompose

        I = (1, 2, 3, 4)
        for alpha in alt_basis(I):
            for x in all_perms(I):
                if face_decompose(alpha, x) is None or x == alpha:
                    continue
                assert not prec_less(x, alpha)
                if is_alternating(x):
                    assert prec_less(alpha, x)


class TestBlockNormalize:
    def test_single_swap(self):
        assert block_normalize(parse_perm("2,1/3,4")) == (parse_perm("1,2/3,4"), -1)

    def test_identity(self):
        assert block_normalize(parse_perm("1,3/2,4")) == (parse_perm("1,3/2,4"), 1)

    def test_double_swap(self):
        assert block_normalize(parse_perm("2,1/4,3")) == (parse_perm("1,2/3,4"), 1)

    @settings(max_examples=60, deadline=None)
    @given(block_perms(max_blocks=4))
    def test_idempotent(self, x):
        norm, _ = block_normalize(x)
        renorm, sign = block_normalize(norm)
        assert renorm == norm and sign == 1
