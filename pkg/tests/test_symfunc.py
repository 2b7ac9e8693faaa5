import pytest

from bigdescents.errors import BudgetError
from bigdescents.symfunc import (QsymExpansion, SymExpansion,
                                 asymmetry_witness, composition_from_set,
                                 compositions_of, format_schur,
                                 fundamental_to_monomial, is_schur_positive,
                                 is_symmetric, kostka, partitions_of,
                                 qsym_fundamental, qsym_sum,
                                 schur_expand, schur_to_monomial_qsym)
from table_data import SCHUR_TABLES


class TestCompositionsAndPartitions:
    def test_composition_from_set(self):
        assert composition_from_set(6, {2, 3}) == (2, 1, 3)
        assert composition_from_set(4, set()) == (4,)
        assert composition_from_set(0, set()) == ()

    def test_compositions_count(self):
        for n in range(1, 7):
            assert sum(1 for _ in compositions_of(n)) == 2 ** (n - 1)

    def test_partitions(self):
        assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert partitions_of(0) == [()]

    def test_kostka_values(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((3,), (1, 1, 1)) == 1
        assert kostka((2, 2), (2, 1, 1)) == 1
        assert kostka((1, 1), (2,)) == 0
        for lam in partitions_of(5):
            assert kostka(lam, lam) == 1


class TestFundamental:
    def test_empty_set_has_all_refinements(self):
        q = fundamental_to_monomial(3, set())
        assert q.coeffs == {(3,): 1, (1, 2): 1, (2, 1): 1, (1, 1, 1): 1}

    def test_full_set_is_single_composition(self):
        q = fundamental_to_monomial(3, {1, 2})
        assert q.coeffs == {(1, 1, 1): 1}

    def test_middle_set(self):
        q = fundamental_to_monomial(4, {2})
        assert q.coeffs == {(2, 2): 1, (1, 1, 2): 1, (2, 1, 1): 1,
                            (1, 1, 1, 1): 1}

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            fundamental_to_monomial(3, {3})

    def test_single_fundamental_not_symmetric(self):
        q = fundamental_to_monomial(3, {1})
        assert asymmetry_witness(q) == ((1, 2), (2, 1))
        assert not is_symmetric(q)


class TestQsymSums:
    def test_dimension_counts_avoiders(self):
        from bigdescents.perms import count_avoiders
        for patterns in ((), ((1, 2, 3),)):
            for n in range(6):
                q = qsym_fundamental(n, patterns)
                assert q.dimension() == count_avoiders(n, patterns)

    def test_weight_two(self):
        q = qsym_sum(2, ())
        assert q.coeffs == {(2,): 2, (1, 1): 2}  # 2*F_{2,{}} = 2*s_2

    def test_budget_guard(self):
        with pytest.raises(BudgetError):
            qsym_sum(9, ())
        assert qsym_sum(4, (), max_n=4).n == 4

    @pytest.mark.parametrize("patterns", sorted(SCHUR_TABLES))
    def test_schur_tables(self, patterns):
        for n, want in SCHUR_TABLES[patterns].items():
            q = qsym_sum(n, patterns)
            assert is_symmetric(q)
            expansion = schur_expand(q)
            assert expansion.coeffs == want
            assert is_schur_positive(expansion)

    @pytest.mark.parametrize("patterns", sorted(SCHUR_TABLES))
    def test_round_trip(self, patterns):
        for n in range(7):
            q = qsym_sum(n, patterns)
            back = schur_to_monomial_qsym(schur_expand(q))
            assert back.coeffs == q.coeffs


class TestSchurMachinery:
    def test_h_like_input_is_single_row(self):
        q = fundamental_to_monomial(5, set())
        assert schur_expand(q).coeffs == {(5,): 1}

    def test_e_like_input_is_single_column(self):
        q = fundamental_to_monomial(4, {1, 2, 3})
        assert schur_expand(q).coeffs == {(1, 1, 1, 1): 1}

    def test_schur_pair_sum(self):
        # F_{3,{1}} + F_{3,{2}} = s_(2,1)
        a = fundamental_to_monomial(3, {1})
        b = fundamental_to_monomial(3, {2})
        combined = QsymExpansion(n=3, basis="monomial_qsym", coeffs={
            c: a.coefficient(c) + b.coefficient(c)
            for c in set(a.coeffs) | set(b.coeffs)})
        assert schur_expand(combined).coeffs == {(2, 1): 1}

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError):
            schur_expand(fundamental_to_monomial(3, {1}))

    def test_zero_expansion_is_symmetric(self):
        q = QsymExpansion(n=4, basis="monomial_qsym", coeffs={})
        assert is_symmetric(q)
        assert schur_expand(q).coeffs == {}

    def test_schur_positivity_detects_negatives(self):
        e = SymExpansion(n=2, basis="schur", coeffs={(2,): 1, (1, 1): -1})
        assert not is_schur_positive(e)

    def test_format(self):
        e = SymExpansion(n=5, basis="schur",
                         coeffs={(2, 2, 1): 1, (3, 2): 4, (4, 1): 3, (5,): 5})
        assert format_schur(e) == "s(2,2,1)+4s(3,2)+3s(4,1)+5s(5)"

    def test_r_parameter_changes_the_sum(self):
        q0 = qsym_sum(3, (), r=0)
        q1 = qsym_sum(3, (), r=1)
        assert q0.coeffs != q1.coeffs
        # r = 0 gives the descent-set sum, which is also symmetric
        assert is_symmetric(q0)
