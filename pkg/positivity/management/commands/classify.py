"""
Decide membership of a matrix in TP, TN, TP2, TPk or TNS.

Usage:
    python manage.py classify --class tp matrix.json
    python manage.py classify --class tpk:3 matrix.json
"""
from django.conf import settings

from positivity.exact import MatrixClass, classify
from positivity.formats import parse_matrix, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Check whether a matrix belongs to a total-positivity class'
    command_name = 'classify'

    def add_command_arguments(self, parser):
        parser.add_argument('--class', dest='matrix_class', required=True,
                            help='One of tp, tn, tp2, tns or tpk:<k>')
        parser.add_argument('matrix', type=str, help='Matrix JSON file')

    def run(self, seed, **options):
        matrix_class = MatrixClass.parse(options['matrix_class'])
        A = parse_matrix(read_text(options['matrix']))
        outcome = classify(A, matrix_class, exhaustive_cap=getattr(settings, 'TPM_EXHAUSTIVE_MINOR_CAP', 10))
        return Outcome(
            verdict='member' if outcome.member else 'not-member',
            affirmative=outcome.member,
            result={
                'class': str(matrix_class),
                'shape': [A.rows, A.cols],
                'member': outcome.member,
                'method': outcome.method,
                'witness': outcome.witness.as_dict() if outcome.witness else None,
            },
        )
