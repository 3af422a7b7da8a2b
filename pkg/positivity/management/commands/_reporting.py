"""
Shared base for the positivity management commands.

Each command implements ``run()`` returning an Outcome; the base turns it
(or a PositivityError) into one JSON report on stdout and an exit status:
0 affirmative, 1 negative or out of budget, 2 bad input or precondition.
"""

import logging
import sys
import time
from dataclasses import dataclass, field

from django.conf import settings
from django.core.management.base import BaseCommand

from positivity.exceptions import BudgetExhausted, PositivityError
from positivity.reports import build_report, render_report

logger = logging.getLogger('positivity.commands')


@dataclass
class Outcome:
    verdict: str
    affirmative: bool
    result: dict = field(default_factory=dict)

    @property
    def exit_status(self) -> int:
        return 0 if self.affirmative else 1


class ReportCommand(BaseCommand):
    command_name = None
    requires_system_checks = []

    exit_status = 0
    report = None

    def add_arguments(self, parser):
        parser.add_argument(
            '--seed', type=int, default=None,
            help='Seed for every randomized step (default: TPM_DEFAULT_SEED)',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, seed: int, **options) -> Outcome:
        raise NotImplementedError

    def handle(self, *args, **options):
        seed = options.pop('seed', None)
        if seed is None:
            seed = getattr(settings, 'TPM_DEFAULT_SEED', 0)
        started = time.perf_counter()
        error = None
        try:
            outcome = self.run(seed=seed, **options)
            verdict, exit_status, result = outcome.verdict, outcome.exit_status, outcome.result
        except PositivityError as e:
            logger.warning(f"{self.command_name} failed: {e.code}: {e.message}")
            verdict = 'failure' if isinstance(e, BudgetExhausted) else 'error'
            exit_status, result, error = e.exit_status, {}, e.as_dict()

        elapsed_ms = (time.perf_counter() - started) * 1000
        self.exit_status = exit_status
        self.report = build_report(
            self.command_name, verdict, exit_status, result, error, seed=seed, elapsed_ms=elapsed_ms,
        )
        self.stdout.write(render_report(self.report))

    def run_from_argv(self, argv):
        super().run_from_argv(argv)
        if self.exit_status:
            sys.exit(self.exit_status)
