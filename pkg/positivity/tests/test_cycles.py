from django.test import SimpleTestCase, tag
from hypothesis import given, settings
from hypothesis import strategies as st

from positivity.configurations import BinaryConfiguration, configuration
from positivity.cycles import (
    CycleCollection,
    OrthogonalCycle,
    PartialPattern,
    bounded_positive_collection,
    change_to_tp,
    collection_is_positive,
    exists_positive_collection,
    pattern_obstruction,
    simple_cycle_collection_search,
    simple_cycles,
    support_masks,
    weight_function,
    weight_table,
)
from positivity.exact import MatrixClass, classify
from positivity.exceptions import BudgetExhausted, InputError, PreconditionError

EXAMPLE_CYCLE = OrthogonalCycle.from_sequence(
    [(1, 2), (1, 4), (2, 4), (2, 3), (4, 3), (4, 1), (3, 1), (3, 2)]
)
EXAMPLE_MASK = BinaryConfiguration.from_text('0101\n0011\n1100\n1010')
IDENTITY_MASK = BinaryConfiguration.from_text('100\n010\n001')
ONES_MASK = BinaryConfiguration.from_text('11\n11')


def mask_from_int(m, n, bits):
    return BinaryConfiguration(m, n, tuple(bool(bits >> k & 1) for k in range(m * n)))


def pattern_from_mask(M):
    return PartialPattern(M.rows, M.cols, M.bits, (None,) * len(M.bits))


class OrthogonalCycleTests(SimpleTestCase):

    def test_closed_form_accepted(self):
        closed = OrthogonalCycle.from_sequence(EXAMPLE_CYCLE.closed())
        self.assertEqual(closed, EXAMPLE_CYCLE)
        self.assertEqual(closed.half_length, 4)

    def test_bad_moves_rejected(self):
        with self.assertRaises(InputError):
            OrthogonalCycle.from_sequence([(1, 1), (2, 2), (2, 1), (1, 2)])
        with self.assertRaises(InputError):
            OrthogonalCycle.from_sequence([(1, 1), (1, 2), (2, 2)])

    def test_odd_rotation_rejected(self):
        with self.assertRaises(InputError):
            EXAMPLE_CYCLE.rotated(1)

    def test_reversal_swaps_parity(self):
        reversed_cycle = EXAMPLE_CYCLE.reversed()
        self.assertEqual(reversed_cycle.positions[0], (1, 4))
        self.assertEqual(set(reversed_cycle.evens), set(EXAMPLE_CYCLE.odds))
        self.assertEqual(reversed_cycle.reversed(), EXAMPLE_CYCLE)


class WeightFunctionTests(SimpleTestCase):

    def test_example_values(self):
        self.assertEqual(weight_function(EXAMPLE_CYCLE, 1, 1), 0)
        self.assertEqual(weight_function(EXAMPLE_CYCLE, 2, 2), 1)

    def test_outside_range(self):
        with self.assertRaises(InputError):
            weight_function(EXAMPLE_CYCLE, 5, 0)

    def test_table_matches_pointwise(self):
        table = weight_table(EXAMPLE_CYCLE)
        for i in range(5):
            for j in range(5):
                self.assertEqual(table[i][j], weight_function(EXAMPLE_CYCLE, i, j))

    def test_example_cycle_is_positive(self):
        self.assertTrue(collection_is_positive(CycleCollection((EXAMPLE_CYCLE,))))
        self.assertFalse(collection_is_positive(CycleCollection((EXAMPLE_CYCLE.reversed(),))))

    def test_cycle_with_its_reversal_cancels(self):
        collection = CycleCollection((EXAMPLE_CYCLE, EXAMPLE_CYCLE.reversed()))
        self.assertTrue(all(v == 0 for row in collection.weight_sums() for v in row))
        self.assertFalse(collection_is_positive(collection))


class SimpleCycleTests(SimpleTestCase):

    def test_two_orientations_of_the_square(self):
        self.assertEqual(len(simple_cycles(ONES_MASK)), 2)

    def test_identity_has_none(self):
        self.assertEqual(simple_cycles(IDENTITY_MASK), [])

    def test_brute_force_search(self):
        found = simple_cycle_collection_search(ONES_MASK)
        self.assertIsNotNone(found)
        self.assertTrue(collection_is_positive(CycleCollection(tuple(found))))
        self.assertIsNone(simple_cycle_collection_search(IDENTITY_MASK))


class PositiveCollectionTests(SimpleTestCase):

    def test_example_mask(self):
        exists, certificate = exists_positive_collection(EXAMPLE_MASK)
        self.assertTrue(exists)
        self.assertTrue(certificate.verify(EXAMPLE_MASK))

    def test_identity_mask(self):
        exists, certificate = exists_positive_collection(IDENTITY_MASK)
        self.assertFalse(exists)
        self.assertTrue(certificate.feasible)
        self.assertTrue(certificate.verify(IDENTITY_MASK))

    def test_single_row(self):
        exists, certificate = exists_positive_collection(BinaryConfiguration.from_text('1111'))
        self.assertFalse(exists)
        self.assertTrue(certificate.verify(BinaryConfiguration.from_text('1111')))

    def test_all_ones_square(self):
        self.assertTrue(exists_positive_collection(ONES_MASK)[0])
        self.assertIsNotNone(bounded_positive_collection(ONES_MASK))

    @given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 2 ** 16 - 1))
    @settings(deadline=None, max_examples=150)
    def test_certificates_verify(self, m, n, bits):
        M = mask_from_int(m, n, bits)
        exists, certificate = exists_positive_collection(M)
        self.assertEqual(exists, not certificate.feasible)
        self.assertTrue(certificate.verify(M))

    def test_every_three_by_three_mask_agrees_with_bounded_search(self):
        supports = list(support_masks(3, 3, 6))
        for bits in range(2 ** 9):
            M = mask_from_int(3, 3, bits)
            expected = any(support & ~bits == 0 for support in supports)
            with self.subTest(mask=M.to_text()):
                self.assertEqual(exists_positive_collection(M)[0], expected)

    def test_every_three_by_three_mask_agrees_with_cycle_search(self):
        checked, found = 0, 0
        for bits in range(2 ** 9):
            M = mask_from_int(3, 3, bits)
            try:
                collection = simple_cycle_collection_search(M, max_cycles=8)
            except BudgetExhausted:
                continue
            checked += 1
            found += collection is not None
            with self.subTest(mask=M.to_text()):
                self.assertEqual(exists_positive_collection(M)[0], collection is not None)
        self.assertGreater(found, 0)
        self.assertGreater(checked, found)

    @tag('slow')
    def test_every_three_by_four_mask_agrees_with_bounded_search(self):
        supports = list(support_masks(3, 4, 6))
        disagreements = []
        for bits in range(2 ** 12):
            M = mask_from_int(3, 4, bits)
            expected = any(support & ~bits == 0 for support in supports)
            if exists_positive_collection(M)[0] != expected:
                disagreements.append(M.to_text())
        self.assertEqual(disagreements, [])


class PatternObstructionTests(SimpleTestCase):

    def test_example_pattern_is_obstructed(self):
        verdict = pattern_obstruction(pattern_from_mask(EXAMPLE_MASK))
        self.assertTrue(verdict.obstructed)
        self.assertEqual(verdict.label, 'Obstructed')

    def test_single_cell(self):
        M = BinaryConfiguration.from_positions(3, 3, [(2, 2)])
        self.assertEqual(pattern_obstruction(pattern_from_mask(M)).label, 'NoObstruction')

    def test_fully_unspecified(self):
        M = BinaryConfiguration.zeros(3, 3)
        self.assertFalse(pattern_obstruction(pattern_from_mask(M)).obstructed)

    def test_removing_a_cell_is_recomputed(self):
        pattern = pattern_from_mask(EXAMPLE_MASK)
        for i, j in EXAMPLE_MASK.ones():
            reduced = pattern.without(i, j)
            self.assertEqual(reduced.mask().weight, 7)
            verdict = pattern_obstruction(reduced)
            self.assertTrue(verdict.certificate.verify(reduced.mask()))

    def test_fully_specified_block(self):
        with self.assertRaises(PreconditionError):
            pattern_obstruction(pattern_from_mask(ONES_MASK))


class ChangeToTpTests(SimpleTestCase):

    def test_identity_mask(self):
        construction = change_to_tp(IDENTITY_MASK)
        self.assertEqual(configuration(construction.matrix, 1), IDENTITY_MASK)
        self.assertTrue(classify(construction.matrix, MatrixClass('tp')).member)

    def test_mask_with_positive_collection(self):
        with self.assertRaises(PreconditionError):
            change_to_tp(EXAMPLE_MASK)
