"""
Unit tests for the rational generating functions and the gf engine.
"""

import pytest

from evenup_words.core_app.engine_base import WordTarget
from evenup_words.engines.catalan.logic.catalan_words import CatalanVariant
from evenup_words.engines.genfunc import GeneratingFunctionEngine
from evenup_words.engines.genfunc.logic.rational_gf import (
    IntegrityError,
    RationalGF,
    build_gf,
    cyclic_even_up_by_insertion,
    cyclic_even_up_closed_form,
    cyclic_even_up_telescoped_form,
    ending_letter_gf,
    expand_gf,
    gf_table,
    telescoper,
    telescoping_check,
    telescoping_summand,
)
from evenup_words.engines.transfer.logic.transfer_matrix import (
    build_matrix,
    class_counts,
    count_by_last_letter,
)
from evenup_words.shared_libs.exact_algebra import IntPoly
from evenup_words.shared_libs.words import WordClass, all_word_classes, count_brute_force

from conftest import CATALAN_TABLE, WORD_TABLES

EVEN_UP = WordClass.from_name("even-up")


class TestRationalGF:
    """Test cases for RationalGF construction and arithmetic."""

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(ValueError, match="zero constant term"):
            RationalGF(IntPoly.constant(1), IntPoly.x())

    def test_sign_normalised(self):
        # -1/(x - 1) is stored as 1/(1 - x)
        gf = RationalGF(IntPoly.constant(-1), IntPoly((-1, 1)))
        assert gf.denominator.constant_term == 1
        assert gf.numerator == IntPoly.constant(1)
        assert expand_gf(gf, 4) == [1, 1, 1, 1, 1]

    def test_sign_normalisation_keeps_value(self):
        # 1/(x - 1) = -1/(1 - x) has negative coefficients
        gf = RationalGF(IntPoly.constant(1), IntPoly((-1, 1)))
        assert gf.denominator.constant_term == 1
        with pytest.raises(IntegrityError, match="negative"):
            expand_gf(gf, 4)

    def test_sum_over_common_denominator(self):
        geometric = RationalGF(IntPoly.constant(1), IntPoly((1, -1)))
        assert expand_gf(geometric + geometric, 3) == [2, 2, 2, 2]
        assert expand_gf(1 + IntPoly.x() * geometric, 3) == [1, 1, 1, 1]

    def test_fractional_coefficient(self):
        with pytest.raises(IntegrityError, match="not an integer"):
            expand_gf(RationalGF(IntPoly.constant(1), IntPoly((2, -1))), 3)

    def test_negative_coefficient(self):
        with pytest.raises(IntegrityError, match="negative"):
            expand_gf(RationalGF(IntPoly.constant(1), IntPoly((1, 1))), 3)

    def test_integrity_error_is_arithmetic(self):
        assert issubclass(IntegrityError, ArithmeticError)

    def test_negative_n_max(self):
        with pytest.raises(ValueError):
            expand_gf(RationalGF.of(1), -1)


class TestClosedForms:
    """Test cases for the eight class generating functions."""

    @pytest.mark.parametrize("word_class", all_word_classes(), ids=lambda c: c.name)
    def test_reproduces_tables(self, word_class):
        for k in range(1, 7):
            assert gf_table(word_class, k, 10).counts == WORD_TABLES[word_class.name][k]

    @pytest.mark.parametrize("word_class", all_word_classes(), ids=lambda c: c.name)
    def test_agrees_with_transfer_matrix(self, word_class):
        for k in range(1, 9):
            assert expand_gf(build_gf(word_class, k), 30) == class_counts(word_class, k, 30)

    @pytest.mark.parametrize("word_class", all_word_classes(), ids=lambda c: c.name)
    def test_agrees_with_brute_force(self, word_class):
        for k in range(1, 6):
            closed_form = expand_gf(build_gf(word_class, k), 10)
            brute = [count_brute_force(word_class, k, n, workers=4) for n in range(11)]
            assert closed_form == class_counts(word_class, k, 10) == brute, k

    @pytest.mark.parametrize(
        "name,k",
        [("cyclic-even-up", 3), ("cyclic-odd-up", 2), ("cyclic-odd-up", 4)],
    )
    def test_consecutive_alphabets_coincide(self, name, k):
        # adding the letter k + 1 only adds the single-letter word
        word_class = WordClass.from_name(name)
        smaller = expand_gf(build_gf(word_class, k), 20)
        larger = expand_gf(build_gf(word_class, k + 1), 20)
        assert larger[2:] == smaller[2:]
        assert larger[1] == smaller[1] + 1

    def test_spot_values(self):
        assert expand_gf(build_gf(EVEN_UP, 5), 10)[10] == 911219
        assert expand_gf(build_gf(WordClass.from_name("odd-up"), 6), 10)[10] == 4779290

    def test_invalid_alphabet(self):
        with pytest.raises(ValueError):
            build_gf(EVEN_UP, 0)

    def test_cyclic_even_up_forms_agree(self):
        for k in range(1, 9):
            closed = expand_gf(cyclic_even_up_closed_form(k), 20)
            telescoped = expand_gf(cyclic_even_up_telescoped_form(k), 20)
            assert closed == telescoped

    def test_cyclic_even_up_closed_form(self):
        # 1 + x(1 + 2(x+1)/(2 - (x+1)^2)) for k = 3
        assert expand_gf(cyclic_even_up_closed_form(3), 4) == [1, 3, 6, 14, 34]


class TestEndingLetter:
    """Test cases for the per-ending-letter generating functions."""

    def test_agrees_with_transfer_matrix(self):
        for k in range(1, 7):
            m = build_matrix(EVEN_UP, k)
            for i in range(1, k + 1):
                series = expand_gf(ending_letter_gf(k, i), 12)
                assert series[0] == 0
                assert series[1:] == [count_by_last_letter(m, n, i) for n in range(1, 13)]

    def test_sum_over_letters_is_class_count(self):
        k = 5
        total = [0] * 11
        for i in range(1, k + 1):
            total = [t + c for t, c in zip(total, expand_gf(ending_letter_gf(k, i), 10))]
        assert total[1:] == WORD_TABLES["even-up"][k][1:]

    def test_known_value(self):
        assert expand_gf(ending_letter_gf(4, 1), 3)[3] == 5

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError):
            ending_letter_gf(3, 4)


class TestTelescoping:
    """Test cases for the telescoping identity behind the cyclic even-up count."""

    def test_identity_holds(self):
        assert telescoping_check(0, 10)
        assert telescoping_check(6, 20)

    def test_perturbed_summand_fails(self):
        assert not telescoping_check(
            5, 20, summand=lambda i: telescoping_summand(i, cube_exponent_shift=1)
        )

    def test_base_telescoper_is_zero(self):
        assert expand_gf(telescoper(-1).value, 5) == [0] * 6

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            telescoper(-2)
        with pytest.raises(ValueError):
            telescoping_summand(-1)
        with pytest.raises(ValueError):
            telescoping_check(-1, 10)

    def test_insertion_recurrence(self):
        for k in range(1, 7):
            assert cyclic_even_up_by_insertion(k, 10) == WORD_TABLES["cyclic-even-up"][k]

    def test_insertion_recurrence_matches_closed_form(self):
        cyclic = WordClass.from_name("cyclic-even-up")
        for k in range(1, 9):
            assert cyclic_even_up_by_insertion(k, 20) == expand_gf(build_gf(cyclic, k), 20)
        assert cyclic_even_up_by_insertion(9, 15) == expand_gf(build_gf(cyclic, 9), 15)


class TestGeneratingFunctionEngine:
    """Test cases for the gf engine."""

    def setup_method(self):
        self.engine = GeneratingFunctionEngine()

    def test_info(self):
        info = self.engine.get_engine_info()
        assert info.method == "gf"
        assert set(info.targets) == {"words", "catalan"}

    def test_word_sequence(self):
        target = WordTarget(WordClass.from_name("weakly-odd-up"), 4)
        assert self.engine.count_sequence(target, 10) == WORD_TABLES["weakly-odd-up"][4]
        assert self.engine.count(target, 10) == 259808

    def test_catalan_sequence(self):
        variant = CatalanVariant.from_name("strict-odd-up")
        assert self.engine.count_sequence(variant, 10) == CATALAN_TABLE["strict-odd-up"]

    def test_unrestricted_catalan_unsupported(self):
        variant = CatalanVariant.from_name("unrestricted")
        assert not self.engine.supports(variant)
        with pytest.raises(ValueError, match="cannot count"):
            self.engine.count_sequence(variant, 3)

    def test_series_order_limits_catalan(self):
        variant = CatalanVariant.from_name("weakly-even-up")
        with pytest.raises(ValueError, match="series order"):
            self.engine.count_sequence(variant, 65)
