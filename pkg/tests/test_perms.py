import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bigdescents import perms
from bigdescents.errors import BudgetError
from bigdescents.perms import (DistributionTable, PatternSet, bdes, contains,
                               count_avoiders, des, des_r, distribution_table,
                               enumerate_avoiders, lddes, parse_pattern_set,
                               parse_permutation, pk, rbdes, sdes, standardize,
                               statistic, statistic_set, symmetry)

perm_strategy = st.integers(0, 7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


class TestStandardize:
    def test_known_values(self):
        assert standardize((5, 7, 1, 8)) == (2, 3, 1, 4)
        assert standardize((1, 2, 3)) == (1, 2, 3)
        assert standardize((9, 7, 5)) == (3, 2, 1)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            standardize((1, 1, 2))

    @given(st.lists(st.integers(1, 100), unique=True, max_size=8))
    def test_order_isomorphic(self, word):
        out = standardize(word)
        for i in range(len(word)):
            for j in range(len(word)):
                assert (word[i] < word[j]) == (out[i] < out[j])


class TestSymmetry:
    def test_known_values(self):
        pi = (1, 4, 2, 5, 7, 3, 6)
        assert symmetry(pi, "reverse") == (6, 3, 7, 5, 2, 4, 1)
        assert symmetry(pi, "complement") == (7, 4, 6, 3, 1, 5, 2)
        assert symmetry(pi, "reverse_complement") == (2, 5, 1, 3, 6, 4, 7)

    @given(perm_strategy)
    def test_rc_is_involution_and_commutes(self, pi):
        rc = symmetry(pi, "reverse_complement")
        assert symmetry(rc, "reverse_complement") == pi
        assert rc == symmetry(symmetry(pi, "reverse"), "complement")

    @given(perm_strategy)
    def test_bdes_invariant_under_rc(self, pi):
        assert bdes(pi) == bdes(symmetry(pi, "reverse_complement"))


class TestContains:
    def test_known_values(self):
        assert contains((1, 5, 2, 3, 7, 6, 4), (2, 1, 3))
        assert not contains((7, 6, 1, 2, 5, 4, 3), (2, 1, 3))
        assert not contains((1, 2), (1, 2, 3))

    def test_longer_patterns(self):
        assert contains((1, 3, 2, 4, 5), (1, 2, 3, 4))
        assert contains((5, 2, 4, 1, 3), (3, 1, 2))
        assert not contains((2, 4, 1, 3, 5), (1, 2, 3, 4))  # LIS is 3
        assert not contains((4, 5, 1, 2, 3), (1, 2, 3, 4))

    @given(perm_strategy)
    def test_every_perm_contains_its_own_prefix_pattern(self, pi):
        if len(pi) >= 2:
            assert contains(pi, standardize(pi[:2]))


class TestEnumerateAvoiders:
    def test_known_counts(self):
        assert count_avoiders(3, ((1, 2, 3),)) == 5
        assert count_avoiders(5, ((1, 2, 3), (3, 2, 1))) == 0
        assert count_avoiders(4, ((2, 3, 1), (3, 1, 2))) == 8

    @pytest.mark.parametrize("sigma", list(itertools.permutations((1, 2, 3))))
    def test_catalan_counts(self, sigma):
        from bigdescents.genfun import catalan
        for n in range(8):
            assert count_avoiders(n, (sigma,)) == catalan(n)

    def test_lexicographic_order(self):
        out = list(enumerate_avoiders(4, ((1, 3, 2),)))
        assert out == sorted(out)
        assert len(out) == len(set(out))

    def test_matches_naive_filter(self):
        # insertion-based generation against the direct containment oracle
        pattern_sets = [((1, 3, 2),), ((3, 2, 1),), ((2, 1, 3), (2, 3, 1)),
                        ((1, 2, 3), (1, 3, 2)), ((2, 3, 1), (3, 2, 1))]
        for pats in pattern_sets:
            for n in range(7):
                naive = [pi for pi in itertools.permutations(range(1, n + 1))
                         if all(not contains(pi, p) for p in pats)]
                assert list(enumerate_avoiders(n, pats)) == naive

    def test_general_length_patterns(self):
        for n in range(7):
            naive = [pi for pi in itertools.permutations(range(1, n + 1))
                     if not contains(pi, (1, 2, 3, 4))]
            assert list(enumerate_avoiders(n, ((1, 2, 3, 4),))) == naive

    def test_budget_guard(self):
        with pytest.raises(BudgetError):
            list(enumerate_avoiders(12, ()))
        with pytest.raises(BudgetError):
            list(enumerate_avoiders(15, ((1, 3, 2),)))
        # explicit override allows more
        assert count_avoiders(12, (), max_n=12) or True  # type: ignore


class TestStatistics:
    def test_des_family(self):
        pi = (7, 4, 2, 1, 3, 6, 5)
        assert des_r(pi, 0) == 4
        assert des_r(pi, 1) == 2
        assert des_r(pi, 2) == 1
        assert statistic(pi, "des_r(1)") == statistic(pi, "bdes") == 2

    def test_sdes_lddes_pk(self):
        pi = (2, 1, 4, 8, 6, 3, 9, 7, 5)
        assert sdes(pi) == 1
        assert lddes(pi) == 3
        assert pk(pi) == 2

    def test_hibasc_lobasc(self):
        pi = (2, 4, 1, 3, 7, 5, 6)
        assert statistic(pi, "hibasc") == 2
        assert statistic(pi, "lobasc") == 1

    def test_empty_permutation(self):
        for name in ("des", "bdes", "sdes", "lddes", "pk", "rbdes", "basc",
                     "lbasc", "hibasc", "lobasc", "des_r(3)"):
            assert statistic((), name) == 0

    def test_rbdes_small(self):
        assert rbdes((1,)) == 0
        assert rbdes((2, 1)) == 0
        assert rbdes((1, 2)) == 1

    def test_unknown_stat_rejected(self):
        with pytest.raises(ValueError):
            statistic((1,), "zigzag")

    @given(perm_strategy)
    def test_des_chain_and_splits(self, pi):
        assert des_r(pi, 2) <= des_r(pi, 1) <= des_r(pi, 0)
        assert des(pi) == bdes(pi) + sdes(pi)
        assert des(pi) == pk(pi) + lddes(pi)

    @given(perm_strategy)
    def test_rbdes_is_bdes_with_zero_appended(self, pi):
        padded = pi + (0,)
        direct = sum(1 for a, b in zip(padded, padded[1:]) if a > b + 1)
        assert rbdes(pi) == direct

    @given(perm_strategy)
    def test_hibasc_lobasc_split(self, pi):
        assert statistic(pi, "basc") == (statistic(pi, "hibasc")
                                         + statistic(pi, "lobasc"))


class TestStatisticSets:
    def test_rlmax(self):
        assert statistic_set((2, 7, 4, 5, 3, 6, 1), "RLmax") == {1, 6, 7}

    def test_bdes_set(self):
        assert statistic_set((7, 4, 2, 1, 3, 6, 5), "Bdes") == {1, 2}
        assert statistic_set(tuple(range(1, 8)), "Bdes") == set()

    def test_des_r_set_matches_counts(self):
        pi = (7, 4, 2, 1, 3, 6, 5)
        for r in range(3):
            assert len(statistic_set(pi, f"Des_r({r})")) == des_r(pi, r)

    @given(perm_strategy)
    def test_n_is_always_a_rl_maximum(self, pi):
        if pi:
            assert len(pi) in statistic_set(pi, "RLmax")


class TestDistributionTable:
    def test_known_rows(self):
        assert distribution_table(5, ((1, 3, 2),), "bdes").counts == \
            (5, 25, 12, 0, 0, 0)
        assert distribution_table(6, ((3, 2, 1),), "bdes").counts == \
            (13, 72, 45, 2, 0, 0, 0)
        assert distribution_table(7, ((2, 1, 3), (2, 3, 1)), "bdes").counts == \
            (7, 35, 21, 1, 0, 0, 0, 0)

    def test_total_is_class_size(self):
        table = distribution_table(6, ((2, 3, 1),), "bdes")
        assert table.total() == count_avoiders(6, ((2, 3, 1),))

    def test_poly_trims(self):
        table = DistributionTable(2, "bdes", (), (2, 0, 0))
        assert table.poly() == [2]


class TestWilfEquivalenceData:
    def test_tables_equal_within_singleton_classes(self):
        for n in range(8):
            a = distribution_table(n, ((2, 3, 1),), "bdes").counts
            b = distribution_table(n, ((3, 1, 2),), "bdes").counts
            assert a == b
            c = distribution_table(n, ((1, 3, 2),), "bdes").counts
            d = distribution_table(n, ((2, 1, 3),), "bdes").counts
            assert c == d

    def test_231_and_132_joint_with_des_equidistributed(self):
        # (bdes, des) matches (pk, des) over the 231-avoiders
        for n in range(8):
            lhs = {}
            rhs = {}
            for pi in enumerate_avoiders(n, ((2, 3, 1),)):
                lhs[(bdes(pi), des(pi))] = lhs.get((bdes(pi), des(pi)), 0) + 1
                rhs[(pk(pi), des(pi))] = rhs.get((pk(pi), des(pi)), 0) + 1
            assert lhs == rhs

    def test_sdes_lddes_equidistributed_over_231(self):
        for n in range(8):
            lhs = [0] * (n + 1)
            rhs = [0] * (n + 1)
            for pi in enumerate_avoiders(n, ((2, 3, 1),)):
                lhs[sdes(pi)] += 1
                rhs[lddes(pi)] += 1
            assert lhs == rhs


class TestSerialization:
    def test_permutation_round_trip(self):
        assert parse_permutation("2413756") == (2, 4, 1, 3, 7, 5, 6)
        big = tuple(range(1, 12))
        assert parse_permutation(perms.format_permutation(big)) == big
        assert parse_permutation("") == ()

    def test_pattern_set_round_trip(self):
        assert parse_pattern_set("213,231") == ((2, 1, 3), (2, 3, 1))
        assert parse_pattern_set("") == ()

    def test_canonical_id_rc_invariant(self):
        ps = PatternSet([(1, 2, 3), (1, 3, 2)])
        rc = PatternSet([perms.reverse_complement(p) for p in ps])
        assert ps.canonical_id == rc.canonical_id
