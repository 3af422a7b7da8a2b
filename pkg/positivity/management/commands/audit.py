"""
Diagonal audit of the k smallest (or largest) distinct values of a TP matrix.

Usage:
    python manage.py audit --k 2 matrix.json
    python manage.py audit --k 2 --largest matrix.json
"""
from positivity.configurations import smallest_k_audit
from positivity.formats import parse_matrix, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Count smallest-k (or largest-k) entries per diagonal of a square TP matrix'
    command_name = 'audit'

    def add_command_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help='Number of distinct values')
        parser.add_argument('--largest', action='store_true', help='Audit the largest values on anti-diagonals')
        parser.add_argument('matrix', type=str, help='Matrix JSON file')

    def run(self, seed, **options):
        A = parse_matrix(read_text(options['matrix']))
        report = smallest_k_audit(A, options['k'], largest=options['largest'])
        within = report.diagonals_within_bound and report.total_within_bound
        return Outcome(
            verdict='within-bound' if within else 'bound-exceeded',
            affirmative=within,
            result={
                'k': report.k,
                'largest': report.largest,
                'values': list(report.values),
                'per_diagonal_counts': {str(c): n for c, n in sorted(report.per_diagonal_counts.items())},
                'total': report.total,
                'diagonal_bound': report.diagonal_bound,
                'total_bound': report.total_bound,
            },
        )
