"""Repair hints for faulty programs written in a small imperative language."""

import json

from ._minthint import MintHintError, localize, pretty_print, spearman, spearman_partial
from ._minthint import analyze as _analyze
from ._minthint import estimate_noise
from ._minthint import run as _run

__all__ = [
    "MintHintError",
    "analyze",
    "estimate_noise",
    "localize",
    "pretty_print",
    "run",
    "spearman",
    "spearman_partial",
]


def analyze(program, tests, **options):
    """Ranked hints for `program` (source text) under `tests` (JSON lines text)."""
    return json.loads(_analyze(program, tests, **options))


def run(program, args):
    """Outputs of the entry function on `args`: printed values, then the return value."""
    return json.loads(_run(program, json.dumps(args)))
