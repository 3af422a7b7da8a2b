from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from positivity.exceptions import InputError
from positivity.simplex import find_feasible_point


class PhaseOneTests(SimpleTestCase):

    def test_feasible_point(self):
        point = find_feasible_point([[1, 1]], [1], 2)
        self.assertEqual(sum(point), 1)
        self.assertTrue(all(x >= 0 for x in point))

    def test_negative_right_hand_side(self):
        point = find_feasible_point([[1, -1]], [-1], 2)
        self.assertEqual(point[0] - point[1], -1)

    def test_infeasible(self):
        self.assertIsNone(find_feasible_point([[1, 1]], [-1], 2))
        self.assertIsNone(find_feasible_point([[1, 0], [1, 0]], [1, 2], 2))

    def test_no_constraints(self):
        self.assertEqual(find_feasible_point([], [], 3), [0, 0, 0])

    def test_dimension_mismatch(self):
        with self.assertRaises(InputError):
            find_feasible_point([[1, 2, 3]], [1], 2)

    @given(
        st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4),
        st.lists(st.integers(0, 3), min_size=4, max_size=4),
    )
    @settings(deadline=None, max_examples=200)
    def test_finds_point_when_one_is_planted(self, rows, planted):
        rhs = [sum(a * x for a, x in zip(row, planted)) for row in rows]
        point = find_feasible_point(rows, rhs, 4)
        self.assertIsNotNone(point)
        self.assertTrue(all(x >= 0 for x in point))
        for row, b in zip(rows, rhs):
            self.assertEqual(sum(Fraction(a) * x for a, x in zip(row, point)), b)
