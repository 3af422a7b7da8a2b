"""
JSON reports written by every management command.

Everything except ``meta`` is deterministic for a given invocation and
seed; ``meta`` carries the timestamp and timing.
"""

import json
from fractions import Fraction
from pathlib import Path

import jsonschema
from django.core.serializers.json import DjangoJSONEncoder
from django.utils import timezone

from .exact import format_rational

SCHEMA_PATH = Path(__file__).resolve().parent / 'schemas' / 'report.schema.json'


class ReportEncoder(DjangoJSONEncoder):
    """Fractions as int or "p/q", sets as sorted lists."""

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        return super().default(o)


def build_report(command: str, verdict: str, exit_status: int, result: dict,
                 error: dict = None, seed: int = 0, elapsed_ms: float = 0.0) -> dict:
    return {
        'command': command,
        'verdict': verdict,
        'exit_status': exit_status,
        'result': result,
        'error': error,
        'meta': {
            'generated_at': timezone.now().isoformat(),
            'elapsed_ms': round(elapsed_ms, 3),
            'seed': seed,
        },
    }


def render_report(report: dict) -> str:
    return json.dumps(report, cls=ReportEncoder, sort_keys=True, indent=2)


def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text())


def validate_report(report) -> None:
    """Raise jsonschema.ValidationError unless report (dict or rendered text) fits the schema."""
    if isinstance(report, str):
        report = json.loads(report)
    else:
        report = json.loads(render_report(report))
    jsonschema.validate(instance=report, schema=load_schema())
