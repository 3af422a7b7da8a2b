import time
from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from positivity.configurations import configuration, multiplicity
from positivity.exact import MatrixClass, classify, second_differences
from positivity.exceptions import BudgetExhausted, InputError, PreconditionError
from positivity.geometry import (
    Arrangement,
    above_below_counts,
    _tightest_denominators,
    exp_matrix_tp,
    general_position_candidates,
    general_position_report,
    get_construction_service,
    grid_arrangement,
    incidence_count,
    normalize_general_position,
    second_difference_spread,
    sorted_incidences,
    vertical_distance_matrix,
)

SMALL = Arrangement(((0, 0), (1, 1), (2, 5)), ((1, 0), (-1, 2), (3, -1)))


class ArrangementTests(SimpleTestCase):

    def test_rational_coordinates(self):
        arrangement = Arrangement((('1/2', 3),), ((2, '-1/3'),))
        self.assertEqual(arrangement.points[0], (Fraction(1, 2), Fraction(3)))

    def test_empty_rejected(self):
        with self.assertRaises(InputError):
            Arrangement((), ((1, 0),))

    def test_small_arrangement(self):
        self.assertTrue(general_position_report(SMALL).ok)
        self.assertEqual(incidence_count(SMALL), 4)
        self.assertEqual(above_below_counts(SMALL), (2, 3, 4))

    def test_grid_incidences(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                grid = grid_arrangement(k)
                self.assertEqual(len(grid.points), 2 * k ** 3)
                self.assertEqual(len(grid.lines), k ** 3)
                self.assertEqual(incidence_count(grid), k ** 4)

    def test_grid_parameter(self):
        with self.assertRaises(InputError):
            grid_arrangement(0)


class NormalizationTests(SimpleTestCase):

    def test_general_position_returned_unchanged(self):
        self.assertIs(normalize_general_position(SMALL, seed=3), SMALL)

    def test_grid_is_normalized_and_keeps_incidences(self):
        grid = grid_arrangement(2)
        self.assertFalse(general_position_report(grid).ok)
        normalized = normalize_general_position(grid, seed=0)
        self.assertTrue(general_position_report(normalized).ok)
        self.assertEqual(incidence_count(normalized), 16)

    def test_seeded(self):
        grid = grid_arrangement(2)
        self.assertEqual(normalize_general_position(grid, seed=5), normalize_general_position(grid, seed=5))

    def test_zero_budget(self):
        with self.assertRaises(BudgetExhausted):
            normalize_general_position(grid_arrangement(1), retry_budget=0)

    def test_tightest_map_denominators(self):
        self.assertEqual(_tightest_denominators(grid_arrangement(2)), (8, 4))
        self.assertEqual(_tightest_denominators(grid_arrangement(3)), (18, 9))

    def test_candidates_keep_incidences(self):
        grid = grid_arrangement(2)
        candidates = list(general_position_candidates(grid, seed=1, retry_budget=8))
        self.assertTrue(candidates)
        for candidate in candidates:
            self.assertTrue(general_position_report(candidate).ok)
            self.assertEqual(incidence_count(candidate), 16)

    def test_general_position_is_its_only_candidate(self):
        self.assertEqual(list(general_position_candidates(SMALL, seed=0)), [SMALL])


class VerticalDistanceTests(SimpleTestCase):

    def test_sorted_orders(self):
        distances = vertical_distance_matrix(SMALL)
        self.assertEqual(distances.row_order, (1, 2, 3))
        self.assertEqual(distances.col_order, (2, 1, 3))
        self.assertEqual(distances.matrix.to_rows(), [[2, 0, -1], [0, 0, 1], [-5, -3, 0]])

    def test_needs_general_position(self):
        with self.assertRaises(PreconditionError):
            vertical_distance_matrix(grid_arrangement(2))

    def test_crossing_left_between_and_right_of_points(self):
        # lines y = 5 and y = x + 5 - X cross at x = X
        for crossing in (-1, 1, 3):
            with self.subTest(crossing=crossing):
                arrangement = Arrangement(((0, 0), (2, 0)), ((0, 5), (1, 5 - crossing)))
                rows = vertical_distance_matrix(arrangement).matrix.to_rows()
                self.assertEqual(rows, [[5, 5 - crossing], [5, 7 - crossing]])
                self.assertEqual(second_differences(rows), [[2]])
                self.assertTrue(classify(exp_matrix_tp(arrangement).matrix, MatrixClass('tp')).member)


class ConstructionTests(SimpleTestCase):

    def test_small_arrangement_to_tp(self):
        construction = exp_matrix_tp(SMALL)
        self.assertTrue(classify(construction.matrix, MatrixClass('tp')).member)
        self.assertEqual(multiplicity(construction.matrix, 1), 4)
        incidences = sorted_incidences(SMALL, construction.row_order, construction.col_order)
        self.assertEqual(incidences.to_text(), '010\n110\n001')

    def test_grid_of_one(self):
        normalized, construction = get_construction_service().build(grid_arrangement(1), seed=0)
        self.assertTrue(classify(construction.matrix, MatrixClass('tp')).member)
        self.assertEqual(multiplicity(construction.matrix, 1), 1)

    def test_grid_of_two(self):
        normalized, construction = get_construction_service().build(grid_arrangement(2), seed=0)
        self.assertEqual(construction.matrix.shape, (16, 8))
        self.assertTrue(classify(construction.matrix, MatrixClass('tp')).member)
        self.assertEqual(multiplicity(construction.matrix, 1), 16)
        incidences = sorted_incidences(normalized, construction.row_order, construction.col_order)
        self.assertEqual(configuration(construction.matrix, 1).to_text(), incidences.to_text())

    def test_values_split_around_one(self):
        for arrangement in (SMALL, normalize_general_position(grid_arrangement(2))):
            with self.subTest(points=len(arrangement.points)):
                below, above, incident = above_below_counts(arrangement)
                values = exp_matrix_tp(arrangement).matrix.entries
                self.assertEqual(sum(1 for v in values if v > 1), below)
                self.assertEqual(sum(1 for v in values if v < 1), above)
                self.assertEqual(sum(1 for v in values if v == 1), incident)
                self.assertLess(min(values), 1)
                self.assertGreater(max(values), 1)

    def test_distinct_values_below_one_follow_exponents(self):
        construction = exp_matrix_tp(SMALL)
        negative = {e for row in construction.exponents.exponents for e in row if e < 0}
        below_one = {v for v in construction.matrix.entries if v < 1}
        self.assertEqual(len(below_one), len(negative))

    @tag('slow')
    def test_grid_of_three_within_two_minutes(self):
        started = time.perf_counter()
        _, construction = get_construction_service().build(grid_arrangement(3), seed=0)
        self.assertTrue(classify(construction.matrix, MatrixClass('tp')).member)
        self.assertEqual(multiplicity(construction.matrix, 1), 81)
        self.assertLess(time.perf_counter() - started, 120)


class ConstructionServiceTests(SimpleTestCase):

    def test_overrides(self):
        service = get_construction_service(base='3', cap=8)
        self.assertEqual(service.base, 3)
        self.assertEqual(service.cap, 8)

    @override_settings(TPM_EXP_BASE='5/2', TPM_NORMALIZE_RETRY_BUDGET=7)
    def test_settings_defaults(self):
        service = get_construction_service()
        self.assertEqual(service.base, Fraction(5, 2))
        self.assertEqual(service.retry_budget, 7)

    @override_settings(TPM_NORMALIZE_CANDIDATES=3)
    def test_candidate_count_from_settings(self):
        self.assertEqual(get_construction_service().candidates, 3)

    def test_best_normalization_has_least_spread(self):
        grid = grid_arrangement(2)
        service = get_construction_service(candidates=4)
        best = service.best_normalization(grid, seed=0)
        spreads = [
            second_difference_spread(candidate)
            for candidate in list(general_position_candidates(grid, 0, service.retry_budget))[:4]
        ]
        self.assertEqual(second_difference_spread(best), min(spreads))

    def test_no_normalization_within_budget(self):
        with self.assertRaises(BudgetExhausted):
            get_construction_service(retry_budget=0).build(grid_arrangement(2), seed=0)
