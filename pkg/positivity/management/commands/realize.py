"""
Realize an outerplanar graph as equal 2x2 minors of a 2xn TP matrix.

Usage:
    python manage.py realize graph.txt
"""
from positivity.equal_minors import alpha_set, check_realization, forbidden_quadruples, realize_outerplanar
from positivity.formats import matrix_to_dict, parse_graph, read_text

from ._reporting import Outcome, ReportCommand


class Command(ReportCommand):
    help = 'Build a 2xn TP matrix whose equal 2x2 minors contain the edges of an outerplanar graph'
    command_name = 'realize'

    def add_command_arguments(self, parser):
        parser.add_argument('graph', type=str, help='Graph file: n, outer-face order, chords')

    def run(self, seed, **options):
        graph = parse_graph(read_text(options['graph']))
        realization = realize_outerplanar(graph)
        check = check_realization(realization, graph.edges)
        pairs = alpha_set(realization.matrix, realization.alpha)
        return Outcome('realized' if check.ok else 'unverified', check.ok, {
            'matrix': matrix_to_dict(realization.matrix),
            'alpha': realization.alpha,
            'labeling': {str(v): c for v, c in sorted(realization.labeling.items())},
            'requested_edges': sorted(list(e) for e in graph.edges),
            'triangulated_edges': sorted(list(e) for e in realization.graph.edges),
            'alpha_pairs': sorted(list(p) for p in pairs.pairs),
            'forbidden_quadruples': [list(v.quadruple) for v in forbidden_quadruples(pairs, graph.n)],
            'tp_by_contiguity': check.tp_by_contiguity,
            'tp_by_enumeration': check.tp_by_enumeration,
            'missing_edges': [list(e) for e in check.missing_edges],
        })
