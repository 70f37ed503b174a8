"""Variable-free dynamic semantics: typing, derivation search and evaluation."""

import json

from ._donkeykit import (
    BudgetExceeded,
    Error,
    ParseError,
    UnknownLexeme,
    default_lexicon,
    normalize_type,
    run_cli,
    spec_ids,
    typecheck,
)
from . import _donkeykit

__all__ = [
    "BudgetExceeded",
    "Error",
    "ParseError",
    "UnknownLexeme",
    "check",
    "default_lexicon",
    "derive",
    "evaluate",
    "normalize_type",
    "run_cli",
    "spec_ids",
    "typecheck",
]


def derive(sentence, target=None, *, max_index=2, max_shifts=3, allow_s=False,
           static=False, lexicon=None):
    """Derivations of a bracketed sentence, as dicts with term, type, shifts and reading."""
    return json.loads(_donkeykit.derive_json(sentence, target, max_index, max_shifts,
                                             allow_s, static, lexicon))


def evaluate(term, type, model, *, static=False, lexicon=None):
    """Truth value or table of a term at a type on a model given as a dict."""
    return json.loads(_donkeykit.evaluate_json(term, type, json.dumps(model), static, lexicon))


def check(spec, max_size, *, random=0, seed=7):
    """Compare a shipped sentence reading with its first-order oracle."""
    return json.loads(_donkeykit.check_json(spec, max_size, random, seed))
