"""Curate masked-language-model suggestions into a name blacklist."""

from blacklist_curator.suggest import (
    BackendError,
    CuratorError,
    FixtureBackend,
    FixtureError,
    SuggestionBatch,
    TransformersBackend,
    harvest_suggestions,
)
from blacklist_curator.wordlist import emit_pattern_file, filter_suggestions

__version__ = "0.1.0"

__all__ = [
    "BackendError",
    "CuratorError",
    "FixtureBackend",
    "FixtureError",
    "SuggestionBatch",
    "TransformersBackend",
    "emit_pattern_file",
    "filter_suggestions",
    "harvest_suggestions",
    "__version__",
]
