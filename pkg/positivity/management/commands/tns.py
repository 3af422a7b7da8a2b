"""
Totally nonsingular fill of a 0-1 mask.

Usage:
    python manage.py tns fill --b 1 --eps 1/2 --seed 0 mask.txt
"""
from positivity.configurations import configuration
from positivity.exact import parse_rational
from positivity.formats import matrix_to_dict, parse_configuration, read_text
from positivity.tns import get_tns_fill_service

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Fill a mask with no 2x2 block of ones into a totally nonsingular matrix'
    command_name = 'tns'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=['fill'])
        parser.add_argument('mask', type=str, help='Mask file (lines of 0/1)')
        parser.add_argument('--b', required=True, help='Value placed at the ones of the mask')
        parser.add_argument('--eps', default=None, help='Perturbation radius (default |b|/2)')
        parser.add_argument('--retries', type=int, default=None, help='Retry budget (default TPM_TNS_RETRY_BUDGET)')

    def run(self, seed, **options):
        mask = parse_configuration(read_text(options['mask']))
        fill = get_tns_fill_service().fill(
            mask, options['b'], seed=seed, eps=options['eps'], retry_budget=options['retries'],
        )
        round_trip = configuration(fill.matrix, parse_rational(options['b'])) == mask
        return Outcome('constructed', True, {
            'matrix': matrix_to_dict(fill.matrix),
            'attempts': fill.attempts,
            'round_trip': round_trip,
        })
