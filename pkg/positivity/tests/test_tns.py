import random
from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from positivity.configurations import BinaryConfiguration, configuration, has_all_ones_2x2
from positivity.exact import MatrixClass, classify
from positivity.exceptions import InputError, PreconditionError
from positivity.tns import LATTICE, TnsFillRequest, fill_to_tns, get_tns_fill_service

EXAMPLE_MASK = BinaryConfiguration.from_text('0101\n0011\n1100\n1010')


def admissible_masks(count, seed):
    rng = random.Random(seed)
    masks = []
    while len(masks) < count:
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        mask = BinaryConfiguration(m, n, tuple(rng.random() < 0.4 for _ in range(m * n)))
        if not has_all_ones_2x2(mask)[0]:
            masks.append(mask)
    return masks


class TnsFillRequestTests(SimpleTestCase):

    def test_default_radius(self):
        request = TnsFillRequest(EXAMPLE_MASK, '-3')
        self.assertEqual(request.b, -3)
        self.assertEqual(request.eps, Fraction(3, 2))

    def test_zero_value(self):
        with self.assertRaises(InputError):
            TnsFillRequest(EXAMPLE_MASK, 0)

    def test_radius_must_be_positive(self):
        with self.assertRaises(InputError):
            TnsFillRequest(EXAMPLE_MASK, 1, eps='-1/2')


class FillTests(SimpleTestCase):

    def test_example_mask(self):
        fill = fill_to_tns(TnsFillRequest(EXAMPLE_MASK, 1, seed=0))
        self.assertTrue(classify(fill.matrix, MatrixClass('tns')).member)
        self.assertEqual(configuration(fill.matrix, 1), EXAMPLE_MASK)

    def test_entries_stay_in_radius(self):
        fill = fill_to_tns(TnsFillRequest(EXAMPLE_MASK, 2, eps='1/4', seed=1))
        for e in fill.matrix.entries:
            self.assertLess(abs(e - 2), Fraction(1, 4))
            self.assertEqual((e - 2) * 4 * LATTICE % 1, 0)

    def test_seeded(self):
        request = TnsFillRequest(EXAMPLE_MASK, 1, seed=9)
        self.assertEqual(fill_to_tns(request), fill_to_tns(request))

    def test_block_of_ones(self):
        with self.assertRaises(PreconditionError):
            fill_to_tns(TnsFillRequest(BinaryConfiguration.from_text('110\n110'), 1))

    def test_retry_budget(self):
        # A 2x2 mask with three ones leaves one free entry whose only bad value is b itself
        fill = fill_to_tns(TnsFillRequest(BinaryConfiguration.from_text('11\n10'), 1, retry_budget=1))
        self.assertEqual(fill.attempts, 1)

    def test_tns_configurations_have_no_block(self):
        fill = fill_to_tns(TnsFillRequest(EXAMPLE_MASK, 1, seed=2))
        for value in fill.matrix.values():
            self.assertFalse(has_all_ones_2x2(configuration(fill.matrix, value))[0])

    @tag('slow')
    def test_seeded_corpus(self):
        masks = admissible_masks(199, seed=0) + [EXAMPLE_MASK]
        for index, mask in enumerate(masks):
            with self.subTest(index=index, mask=mask.to_text()):
                fill = fill_to_tns(TnsFillRequest(mask, 1, seed=index, retry_budget=16))
                self.assertEqual(configuration(fill.matrix, 1), mask)


class TnsFillServiceTests(SimpleTestCase):

    @override_settings(TPM_TNS_RETRY_BUDGET=3)
    def test_budget_from_settings(self):
        self.assertEqual(get_tns_fill_service().retry_budget, 3)

    @override_settings(TPM_TNS_SIZE_WARNING=2)
    def test_size_warning_logged(self):
        with self.assertLogs('positivity.tns', level='WARNING'):
            get_tns_fill_service().fill(BinaryConfiguration.from_text('100\n010\n001'), 1)

