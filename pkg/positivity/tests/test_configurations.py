from fractions import Fraction

from django.test import SimpleTestCase, tag
from hypothesis import given, settings
from hypothesis import strategies as st

from positivity.configurations import (
    BinaryConfiguration,
    configuration,
    diagonal_offset,
    has_all_ones_2x2,
    kth_smallest_value,
    multiplicity,
    smallest_k_audit,
    value_rank,
)
from positivity.cycles import exists_positive_collection
from positivity.exact import ExactMatrix, random_tp, tp_from_exponents
from positivity.exceptions import InputError, PreconditionError

VALUES = ExactMatrix.from_rows([[1, 2, 3], [5, 2, 4], [2, 7, 2]])


class BinaryConfigurationTests(SimpleTestCase):

    def test_from_text(self):
        M = BinaryConfiguration.from_text('0101\n0011\n1100\n1010\n')
        self.assertEqual(M.weight, 8)
        self.assertEqual(M.row_sums(), [2, 2, 2, 2])
        self.assertEqual(M.col_sums(), [2, 2, 2, 2])
        self.assertEqual(M.to_text(), '0101\n0011\n1100\n1010')

    def test_bad_characters(self):
        with self.assertRaises(InputError):
            BinaryConfiguration.from_text('01x\n')

    def test_position_outside_frame(self):
        with self.assertRaises(InputError):
            BinaryConfiguration.from_positions(2, 2, [(3, 1)])

    def test_transpose(self):
        M = BinaryConfiguration.from_positions(2, 3, [(1, 3)])
        self.assertEqual(M.transpose().ones(), [(3, 1)])


class ConfigurationTests(SimpleTestCase):

    def test_configuration_of_repeated_value(self):
        self.assertEqual(configuration(VALUES, 2).to_text(), '010\n010\n101')
        self.assertEqual(multiplicity(VALUES, 2), 4)

    def test_absent_value(self):
        self.assertEqual(multiplicity(VALUES, 8), 0)
        self.assertEqual(configuration(VALUES, 8), BinaryConfiguration.zeros(3, 3))

    def test_rational_value(self):
        A = ExactMatrix.from_rows([['1/2', 1], [1, '2/4']])
        self.assertEqual(multiplicity(A, '1/2'), 2)

    def test_ranks(self):
        self.assertEqual(value_rank(VALUES, 2), (2, 5))
        self.assertEqual(kth_smallest_value(VALUES, 1), 1)
        self.assertEqual(kth_smallest_value(VALUES, 1, largest=True), 7)
        with self.assertRaises(InputError):
            kth_smallest_value(VALUES, 7)
        with self.assertRaises(InputError):
            value_rank(VALUES, 6)

    @given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=m, max_size=m),
    )))
    @settings(deadline=None, max_examples=100)
    def test_multiplicities_partition_the_entries(self, rows):
        A = ExactMatrix.from_rows(rows)
        self.assertEqual(sum(multiplicity(A, value) for value in set(A.values())), A.rows * A.cols)

    def test_tp_configurations_carry_no_positive_collection(self):
        matrices = [random_tp(3, 3, seed) for seed in range(5)] + [random_tp(3, 4, seed) for seed in range(5)]
        matrices.append(tp_from_exponents([[0, 0, 0], [0, 1, 2], [0, 2, 5]]).matrix)
        for index, A in enumerate(matrices):
            for value in set(A.values()):
                with self.subTest(matrix=index, value=str(value)):
                    self.assertFalse(exists_positive_collection(configuration(A, value))[0])


class AllOnesBlockTests(SimpleTestCase):

    def test_block_found(self):
        M = BinaryConfiguration.from_rows([[0, 1, 0, 1], [0, 1, 1, 1]])
        self.assertEqual(has_all_ones_2x2(M), (True, ((1, 2), (2, 4))))

    def test_cycle_mask_has_no_block(self):
        M = BinaryConfiguration.from_text('0101\n0011\n1100\n1010')
        self.assertEqual(has_all_ones_2x2(M), (False, None))

    @given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2 ** 25 - 1))
    @settings(deadline=None, max_examples=200)
    def test_matches_brute_force(self, m, n, bits):
        M = BinaryConfiguration(m, n, tuple(bool(bits >> k & 1) for k in range(m * n)))
        expected = any(
            M.bit(r1, c1) and M.bit(r1, c2) and M.bit(r2, c1) and M.bit(r2, c2)
            for r1 in range(1, m + 1) for r2 in range(r1 + 1, m + 1)
            for c1 in range(1, n + 1) for c2 in range(c1 + 1, n + 1)
        )
        self.assertEqual(has_all_ones_2x2(M)[0], expected)


class AuditTests(SimpleTestCase):

    def test_diagonal_offsets(self):
        self.assertEqual(diagonal_offset(3, 1, 3), 2)
        self.assertEqual(diagonal_offset(1, 1, 3, anti=True), -2)
        self.assertEqual(diagonal_offset(3, 3, 3, anti=True), 2)

    def test_requires_square_tp(self):
        with self.assertRaises(InputError):
            smallest_k_audit(ExactMatrix.from_rows([[1, 2, 1], [6, 18, 12]]), 1)
        with self.assertRaises(PreconditionError):
            smallest_k_audit(ExactMatrix.constant(2, 2), 1)

    def test_smallest_value_of_small_tp(self):
        A = ExactMatrix.from_rows([[1, 1], [1, 2]])
        report = smallest_k_audit(A, 1)
        self.assertEqual(report.values, (Fraction(1),))
        self.assertEqual(report.total, 3)
        self.assertEqual(report.per_diagonal_counts, {-1: 1, 0: 1, 1: 1})
        self.assertTrue(report.diagonals_within_bound)

    def test_rank_beyond_distinct_values(self):
        A = ExactMatrix.from_rows([[1, 1], [1, 2]])
        self.assertEqual(smallest_k_audit(A, 5).total, 4)

    @tag('slow')
    def test_diagonal_bounds_on_random_tp(self):
        for seed in range(100):
            n = 2 + seed % 5
            A = random_tp(n, n, seed)
            for k in range(1, 5):
                for largest in (False, True):
                    with self.subTest(seed=seed, k=k, largest=largest):
                        self.assertTrue(smallest_k_audit(A, k, largest=largest).diagonals_within_bound)
