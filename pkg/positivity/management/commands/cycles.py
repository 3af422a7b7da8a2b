"""
Orthogonal cycles: weight tables, positivity, the exponent LP and its use
for changing J to a TP matrix.

Usage:
    python manage.py cycles eval cycle.json
    python manage.py cycles positive collection.json
    python manage.py cycles feasible mask.txt
    python manage.py cycles change mask.txt
"""
from django.conf import settings

from positivity.cycles import collection_is_positive, exists_positive_collection, change_to_tp
from positivity.exact import parse_rational
from positivity.formats import cycle_to_list, matrix_to_dict, parse_configuration, parse_cycles, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Evaluate cycles, test positivity, or decide whether a 0-1 mask carries a positive collection'
    command_name = 'cycles'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=['eval', 'positive', 'feasible', 'change'])
        parser.add_argument('input', type=str, help='Cycle JSON file (eval, positive) or mask file (feasible, change)')
        parser.add_argument('--base', default=None, help='Exponential base for change (default TPM_EXP_BASE)')
        parser.add_argument('--cap', type=int, default=None, help='Hadamard cap for change')

    def run(self, seed, **options):
        action = options['action']
        text = read_text(options['input'])

        if action in ('eval', 'positive'):
            collection = parse_cycles(text)
            sums = collection.weight_sums()
            positive = collection_is_positive(collection)
            result = {
                'frame': list(collection.frame),
                'cycles': [cycle_to_list(c) for c in collection.cycles],
                'weight_sums': sums,
                'positive': positive,
            }
            if action == 'eval':
                return Outcome('evaluated', True, result)
            return Outcome('positive' if positive else 'not-positive', positive, result)

        mask = parse_configuration(text)
        if action == 'feasible':
            exists, certificate = exists_positive_collection(mask)
            return Outcome(
                'positive-collection' if exists else 'no-positive-collection',
                exists,
                {
                    'mask': mask.to_text().splitlines(),
                    'positive_collection_exists': exists,
                    'certificate': certificate.as_dict(),
                    'certificate_verified': certificate.verify(mask),
                },
            )

        base = parse_rational(options['base'] or getattr(settings, 'TPM_EXP_BASE', '2'))
        cap = options['cap'] or getattr(settings, 'TPM_EVENTUAL_TP_CAP', 64)
        construction = change_to_tp(
            mask, base=base, cap=cap, ceiling=getattr(settings, 'TPM_EXACT_EXPONENT_CEILING', 4096),
        )
        return Outcome('constructed', True, {
            'mask': mask.to_text().splitlines(),
            'matrix': matrix_to_dict(construction.matrix),
            'exponents': [list(row) for row in construction.exponents.exponents],
            'exponent_method': construction.exponents.method,
            'base': construction.base,
            'hadamard_exponent': construction.hadamard_exponent,
        })
