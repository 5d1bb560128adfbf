"""Utils."""
import json
import sys
from typing import Any, List, Optional, TextIO

from bicliques import common


def parse_ints(text: str, count: Optional[int] = None, name: str = 'value') -> List[int]:
    """Parse a comma-separated list of integers."""
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError as err:
        raise common.BicliqueError(f'Invalid {name} {text!r}: {err}') from err
    if count is not None and len(values) != count:
        raise common.BicliqueError(f'Expected {count} integers for {name}, got {len(values)}')
    return values


def dumps(payload: Any) -> str:
    """Deterministic JSON: sorted keys, no trailing whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


def emit(payload: Any, out: Optional[TextIO] = None) -> None:
    """Write one JSON document to standard output."""
    out = out or sys.stdout
    out.write(dumps(payload) + '\n')


def fail(msg: str) -> None:
    """Report a diagnostic on standard error."""
    sys.stderr.write(f'Error: {msg}\n')
