"""
Point-line arrangements and the incidence-based TP construction.

Usage:
    python manage.py geom grid --k 2 grid.json
    python manage.py geom normalize --seed 0 grid.json --output normal.json
    python manage.py geom to-matrix --base 2 --cap 64 grid.json
    python manage.py geom stats grid.json

``grid`` writes the generated arrangement to the given file; every other
action reads it.
"""

from positivity.configurations import multiplicity
from positivity.exceptions import InputError
from positivity.formats import (
    arrangement_to_dict,
    dump_arrangement,
    matrix_to_dict,
    parse_arrangement,
    read_text,
    write_text,
)
from positivity.geometry import (
    above_below_counts,
    general_position_report,
    get_construction_service,
    grid_arrangement,
    incidence_count,
    sorted_incidences,
)

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Generate, normalize and measure arrangements, or turn one into a TP matrix'
    command_name = 'geom'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=['grid', 'normalize', 'to-matrix', 'stats'])
        parser.add_argument('arrangement', help='Arrangement JSON file (written by grid, read otherwise)')
        parser.add_argument('--k', type=int, default=None, help='Grid parameter')
        parser.add_argument('--base', default=None, help='Exponential base t > 1')
        parser.add_argument('--cap', type=int, default=None, help='Largest Hadamard exponent tried')
        parser.add_argument('--output', default=None, help='Write the normalized arrangement to this file')

    def _write(self, arrangement, path):
        if path:
            write_text(path, dump_arrangement(arrangement))

    def run(self, seed, **options):
        action = options['action']
        if action == 'grid':
            if options['k'] is None:
                raise InputError("geom grid needs --k")
            arrangement = grid_arrangement(options['k'])
            self._write(arrangement, options['arrangement'])
            return Outcome('generated', True, {
                'k': options['k'],
                'points': len(arrangement.points),
                'lines': len(arrangement.lines),
                'incidences': incidence_count(arrangement),
                'arrangement': arrangement_to_dict(arrangement),
            })

        arrangement = parse_arrangement(read_text(options['arrangement']))
        service = get_construction_service(base=options['base'], cap=options['cap'])

        if action == 'normalize':
            normalized = service.normalize(arrangement, seed)
            self._write(normalized, options['output'])
            return Outcome('normalized', True, {
                'incidences_before': incidence_count(arrangement),
                'incidences_after': incidence_count(normalized),
                'arrangement': arrangement_to_dict(normalized),
            })

        if action == 'stats':
            report = general_position_report(arrangement)
            result = {
                'points': len(arrangement.points),
                'lines': len(arrangement.lines),
                'incidences': incidence_count(arrangement),
                'distinct_x': report.distinct_x,
                'distinct_slopes': report.distinct_slopes,
                'no_vertical': report.no_vertical,
                'below': None,
                'above': None,
            }
            if report.ok:
                result['below'], result['above'], _ = above_below_counts(arrangement)
            return Outcome('measured', True, result)

        normalized, construction = service.build(arrangement, seed)
        incidences = sorted_incidences(normalized, construction.row_order, construction.col_order)
        return Outcome('constructed', True, {
            'matrix': matrix_to_dict(construction.matrix),
            'exponents': [list(row) for row in construction.exponents.exponents],
            'exponent_method': construction.exponents.method,
            'exponent_scale': construction.exponents.scale,
            'base': construction.base,
            'hadamard_exponent': construction.hadamard_exponent,
            'row_order': list(construction.row_order),
            'col_order': list(construction.col_order),
            'incidences': incidences.weight,
            'multiplicity_of_one': multiplicity(construction.matrix, 1),
        })
