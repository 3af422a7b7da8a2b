"""
File formats read and written by the management commands.

    matrix       JSON {"rows": m, "cols": n, "entries": [[...], ...]}, entries int or "p/q"
    mask         m lines of n characters from {0,1}
    pattern      m lines of whitespace-separated "?", "x" or rational literals
    cycles       JSON list of [row, col] pairs (one cycle), a list of such lists,
                 or {"frame": [m, n], "cycles": [...]}
    arrangement  JSON {"points": [[x, y], ...], "lines": [[m, b], ...]}
    graph        "n", then the outer-face order, then one "u v" chord per line

Every parser raises InputError on malformed input.
"""

import json
from pathlib import Path

from .configurations import BinaryConfiguration
from .cycles import CycleCollection, OrthogonalCycle, PartialPattern
from .equal_minors import OuterplanarInput
from .exact import ExactMatrix, format_rational, parse_rational
from .exceptions import InputError
from .geometry import Arrangement


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except FileNotFoundError:
        raise InputError(f"No such file: {path}")
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}")


def write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e}")


def _load_json(text: str, label: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid {label} JSON: {e}")


# ==================== MATRICES ====================

def parse_matrix(text: str) -> ExactMatrix:
    data = _load_json(text, 'matrix')
    if not isinstance(data, dict) or 'entries' not in data:
        raise InputError('Matrix file must be an object with "rows", "cols" and "entries"')
    entries = data['entries']
    if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
        raise InputError('Matrix "entries" must be a list of rows')
    A = ExactMatrix.from_rows(entries)
    if data.get('rows', A.rows) != A.rows or data.get('cols', A.cols) != A.cols:
        raise InputError(
            f"Declared size {data.get('rows')}x{data.get('cols')} does not match entries {A.rows}x{A.cols}"
        )
    return A


def matrix_to_dict(A: ExactMatrix) -> dict:
    return {
        'rows': A.rows,
        'cols': A.cols,
        'entries': [[format_rational(e) for e in row] for row in A.to_rows()],
    }


def dump_matrix(A: ExactMatrix) -> str:
    return json.dumps(matrix_to_dict(A))


# ==================== MASKS AND PATTERNS ====================

def parse_configuration(text: str) -> BinaryConfiguration:
    return BinaryConfiguration.from_text(text)


def parse_pattern(text: str) -> PartialPattern:
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise InputError("Empty pattern")
    width = len(lines[0])
    if any(len(tokens) != width for tokens in lines):
        raise InputError("Pattern rows have different lengths")
    specified, values = [], []
    for tokens in lines:
        for token in tokens:
            if token == '?':
                specified.append(False)
                values.append(None)
            elif token.lower() == 'x':
                specified.append(True)
                values.append(None)
            else:
                specified.append(True)
                values.append(parse_rational(token))
    return PartialPattern(len(lines), width, tuple(specified), tuple(values))


# ==================== CYCLES ====================

def _is_position(item) -> bool:
    return isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)


def parse_cycles(text: str) -> CycleCollection:
    data = _load_json(text, 'cycle')
    frame = None
    if isinstance(data, dict):
        if 'frame' in data:
            if not _is_position(data['frame']):
                raise InputError('Cycle "frame" must be a [rows, cols] pair of integers')
            frame = tuple(data['frame'])
        data = data.get('cycles', data.get('cycle'))
    if not isinstance(data, list) or not data:
        raise InputError("Cycle file must hold a nonempty list")
    groups = [data] if all(_is_position(p) for p in data) else data
    for group in groups:
        if not isinstance(group, list) or not all(_is_position(p) for p in group):
            raise InputError("Each cycle must be a list of [row, col] integer pairs")
    if frame is None:
        frame = (
            max(p[0] for group in groups for p in group),
            max(p[1] for group in groups for p in group),
        )
    return CycleCollection(tuple(OrthogonalCycle.from_sequence(group, frame) for group in groups))


def cycle_to_list(cycle: OrthogonalCycle) -> list:
    return [list(p) for p in cycle.closed()]


# ==================== ARRANGEMENTS ====================

def parse_arrangement(text: str) -> Arrangement:
    data = _load_json(text, 'arrangement')
    if not isinstance(data, dict) or 'points' not in data or 'lines' not in data:
        raise InputError('Arrangement file must be an object with "points" and "lines"')
    try:
        return Arrangement(
            tuple(tuple(p) for p in data['points']),
            tuple(tuple(line) for line in data['lines']),
        )
    except (TypeError, ValueError):
        raise InputError("Points and lines must be pairs of rational literals")


def arrangement_to_dict(arrangement: Arrangement) -> dict:
    return {
        'points': [[format_rational(x), format_rational(y)] for x, y in arrangement.points],
        'lines': [[format_rational(m), format_rational(b)] for m, b in arrangement.lines],
    }


def dump_arrangement(arrangement: Arrangement) -> str:
    return json.dumps(arrangement_to_dict(arrangement), indent=1)


# ==================== GRAPHS ====================

def parse_graph(text: str) -> OuterplanarInput:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) < 2:
        raise InputError("Graph file needs a vertex count and an outer-face order")
    try:
        n = int(lines[0])
        order = tuple(int(v) for v in lines[1].split())
        chords = []
        for line in lines[2:]:
            u, v = line.split()
            chords.append((int(u), int(v)))
    except ValueError:
        raise InputError("Graph file must contain integers only")
    if len(order) != n:
        raise InputError(f"Outer-face order lists {len(order)} vertices, expected {n}")
    return OuterplanarInput(n, order, frozenset(chords))
