import json
from fractions import Fraction
from pathlib import Path

from django.test import SimpleTestCase

from positivity.exact import ExactMatrix
from positivity.exceptions import InputError
from positivity.formats import (
    arrangement_to_dict,
    dump_matrix,
    matrix_to_dict,
    parse_arrangement,
    parse_configuration,
    parse_cycles,
    parse_graph,
    parse_matrix,
    parse_pattern,
    read_text,
)

FIXTURES = Path(__file__).resolve().parent / 'fixtures'


class MatrixFormatTests(SimpleTestCase):

    def test_rational_entries(self):
        A = parse_matrix(read_text(FIXTURES / 'tp2_not_tp.json'))
        self.assertEqual(A.entry(3, 3), Fraction(19, 4))
        self.assertEqual(matrix_to_dict(A)['entries'][2], [1, 3, '19/4'])

    def test_dump_is_readable(self):
        A = ExactMatrix.from_rows([['1/2', 3]])
        self.assertEqual(parse_matrix(dump_matrix(A)), A)

    def test_declared_size_must_match(self):
        with self.assertRaises(InputError):
            parse_matrix(json.dumps({'rows': 3, 'cols': 2, 'entries': [[1, 2], [3, 4]]}))

    def test_float_entries_rejected(self):
        with self.assertRaises(InputError):
            parse_matrix(json.dumps({'entries': [[1.5]]}))

    def test_invalid_json(self):
        with self.assertRaises(InputError):
            parse_matrix('{"entries": [[1, 2]')

    def test_entries_must_be_rows(self):
        for entries in ([1, 2], 'abc', [[1], 2], 7):
            with self.subTest(entries=entries):
                with self.assertRaises(InputError):
                    parse_matrix(json.dumps({'rows': 1, 'cols': 2, 'entries': entries}))

    def test_missing_file(self):
        with self.assertRaises(InputError):
            read_text(FIXTURES / 'missing.json')


class MaskAndPatternFormatTests(SimpleTestCase):

    def test_mask(self):
        mask = parse_configuration(read_text(FIXTURES / 'cycle_4x4.mask'))
        self.assertEqual(mask.weight, 8)

    def test_pattern_tokens(self):
        pattern = parse_pattern('? x\n3/4 ?\n')
        self.assertEqual(pattern.specified, (False, True, True, False))
        self.assertEqual(pattern.values, (None, None, Fraction(3, 4), None))

    def test_pattern_fixture_matches_mask(self):
        pattern = parse_pattern(read_text(FIXTURES / 'cycle_4x4.pattern'))
        self.assertEqual(pattern.mask(), parse_configuration(read_text(FIXTURES / 'cycle_4x4.mask')))

    def test_ragged_pattern(self):
        with self.assertRaises(InputError):
            parse_pattern('? x\n?\n')


class CycleFormatTests(SimpleTestCase):

    def test_single_cycle(self):
        collection = parse_cycles(read_text(FIXTURES / 'cycle_4x4.json'))
        self.assertEqual(len(collection.cycles), 1)
        self.assertEqual(collection.frame, (4, 4))

    def test_collection_with_frame(self):
        text = json.dumps({'frame': [3, 3], 'cycles': [[[1, 1], [1, 2], [2, 2], [2, 1]]]})
        self.assertEqual(parse_cycles(text).frame, (3, 3))

    def test_bad_positions(self):
        with self.assertRaises(InputError):
            parse_cycles('[[1, 2, 3]]')

    def test_frame_must_be_a_pair(self):
        cycle = [[1, 1], [1, 2], [2, 2], [2, 1]]
        for frame in (4, [4], 'ab', [4, '4']):
            with self.subTest(frame=frame):
                with self.assertRaises(InputError):
                    parse_cycles(json.dumps({'frame': frame, 'cycles': [cycle]}))


class ArrangementAndGraphFormatTests(SimpleTestCase):

    def test_arrangement(self):
        arrangement = parse_arrangement(read_text(FIXTURES / 'small_arrangement.json'))
        self.assertEqual(len(arrangement.points), 3)
        self.assertEqual(arrangement_to_dict(arrangement)['lines'][2], [3, -1])

    def test_arrangement_keys(self):
        with self.assertRaises(InputError):
            parse_arrangement('{"points": []}')

    def test_graph(self):
        graph = parse_graph(read_text(FIXTURES / 'fan_5.graph'))
        self.assertEqual(graph.n, 5)
        self.assertEqual(graph.chords, frozenset({(1, 3), (1, 4)}))

    def test_crossing_graph(self):
        with self.assertRaises(InputError):
            parse_graph(read_text(FIXTURES / 'crossing_4.graph'))

    def test_order_length(self):
        with self.assertRaises(InputError):
            parse_graph('4\n1 2 3\n')
