"""
Bruhat order tests.

Usage:
    python manage.py bruhat perm 1324 3412
    python manage.py bruhat ars first.txt second.txt
    python manage.py bruhat cycle cycle.json
"""
from positivity.bruhat import (
    Permutation,
    RSClass,
    bruhat_leq_perm,
    compare_ars,
    cycle_positive_iff_bruhat,
    cycle_to_permutation_pair,
)
from positivity.exceptions import InputError
from positivity.formats import cycle_to_list, parse_configuration, parse_cycles, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Compare permutations or A(R,S) matrices in Bruhat order, or split a cycle into two permutations'
    command_name = 'bruhat'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=['perm', 'ars', 'cycle'])
        parser.add_argument('operands', nargs='+',
                            help='Two permutations (perm), two mask files (ars) or one cycle file (cycle)')

    def run(self, seed, **options):
        action, operands = options['action'], options['operands']
        expected = 1 if action == 'cycle' else 2
        if len(operands) != expected:
            raise InputError(f"bruhat {action} takes {expected} operand(s), got {len(operands)}")

        if action == 'perm':
            p, q = Permutation.parse(operands[0]), Permutation.parse(operands[1])
            leq = bruhat_leq_perm(p, q)
            return Outcome('leq' if leq else 'not-leq', leq, {'p': str(p), 'q': str(q), 'leq': leq})

        if action == 'ars':
            first = parse_configuration(read_text(operands[0]))
            second = parse_configuration(read_text(operands[1]))
            rs_class = RSClass.of(first)
            comparison = compare_ars(first, second, rs_class)
            return Outcome('leq' if comparison.dominates else 'not-leq', comparison.dominates, {
                'R': list(rs_class.R),
                'S': list(rs_class.S),
                'leq': comparison.dominates,
                'strict_somewhere': comparison.strict,
            })

        collection = parse_cycles(read_text(operands[0]))
        if len(collection.cycles) != 1:
            raise InputError("bruhat cycle takes a file holding a single cycle")
        cycle = collection.cycles[0]
        pair = cycle_to_permutation_pair(cycle)
        is_positive, pi_leq_sigma = cycle_positive_iff_bruhat(cycle)
        return Outcome('leq' if pi_leq_sigma else 'not-leq', pi_leq_sigma, {
            'pi': str(pair.pi),
            'sigma': str(pair.sigma),
            'normalized_cycle': cycle_to_list(pair.normalized),
            'p0_left_of_p1': pair.p0_left_of_p1,
            'cycle_positive': is_positive,
            'pi_leq_sigma': pi_leq_sigma,
            'sides_agree': is_positive == pi_leq_sigma,
        })
