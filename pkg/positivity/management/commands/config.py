"""
Configuration of a value in a matrix: where it sits, how often, and its rank.

Usage:
    python manage.py config --value 2 matrix.json
"""
from positivity.configurations import configuration, has_all_ones_2x2, value_rank
from positivity.exact import parse_rational
from positivity.formats import parse_matrix, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Report the configuration C_x(A) of a value x'
    command_name = 'config'

    def add_command_arguments(self, parser):
        parser.add_argument('--value', required=True, help='Rational value x, e.g. 2 or 3/4')
        parser.add_argument('matrix', type=str, help='Matrix JSON file')

    def run(self, seed, **options):
        A = parse_matrix(read_text(options['matrix']))
        x = parse_rational(options['value'])
        config = configuration(A, x)
        has_block, witness = has_all_ones_2x2(config)
        rank = value_rank(A, x) if config.weight else None
        return Outcome(
            verdict='present' if config.weight else 'absent',
            affirmative=True,
            result={
                'value': x,
                'configuration': config.to_text().splitlines(),
                'multiplicity': config.weight,
                'distinct_values': len(A.values()),
                'rank_from_bottom': rank[0] if rank else None,
                'rank_from_top': rank[1] if rank else None,
                'all_ones_2x2': {'rows': list(witness[0]), 'cols': list(witness[1])} if has_block else None,
            },
        )
