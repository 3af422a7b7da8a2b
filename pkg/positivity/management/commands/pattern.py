"""
Completability obstruction for a partial-matrix pattern.

Usage:
    python manage.py pattern obstruct pattern.txt
"""
from positivity.cycles import pattern_obstruction
from positivity.formats import parse_pattern, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Look for a positive collection of orthogonal cycles on the specified cells of a pattern'
    command_name = 'pattern'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=['obstruct'])
        parser.add_argument('pattern', type=str, help='Pattern file of ?, x and rational tokens')

    def run(self, seed, **options):
        pattern = parse_pattern(read_text(options['pattern']))
        verdict = pattern_obstruction(pattern)
        return Outcome(verdict.label, verdict.obstructed, {
            'specified': pattern.mask().to_text().splitlines(),
            'obstructed': verdict.obstructed,
            'certificate': verdict.certificate.as_dict(),
        })
