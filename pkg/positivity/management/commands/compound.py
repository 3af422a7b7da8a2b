"""
k-th compound of a matrix.

Usage:
    python manage.py compound --k 2 matrix.json
"""
from positivity.exact import initial_minors_positive, kth_compound
from positivity.formats import matrix_to_dict, parse_matrix, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Compute the matrix of k-by-k minors (lexicographic index sets)'
    command_name = 'compound'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help='Minor order')
        parser.add_argument('matrix', type=str, help='Matrix JSON file')

    def run(self, seed, **options):
        A = parse_matrix(read_text(options['matrix']))
        compound = kth_compound(A, options['k'])
        is_tp, _ = initial_minors_positive(compound)
        return Outcome(
            verdict='computed',
            affirmative=True,
            result={'k': options['k'], 'compound': matrix_to_dict(compound), 'compound_is_tp': is_tp},
        )
