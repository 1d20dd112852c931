"""Rule-based recognition and normalization of German temporal expressions."""

from .corpus import CorpusDoc, load_corpus
from .diffeval import (
    DiffCounts,
    DiffReport,
    InspectionSample,
    classify_pair,
    diff_corpus,
    sample_for_inspection,
)
from .document import Document, Token
from .errors import (
    DanglingReferenceError,
    InputError,
    NormalizationError,
    PackError,
    ResourceCycleError,
    ResourceLimitError,
    TemponymError,
)
from .harvest import GoldTimex, parse_timeml, probe_expressions
from .interpolate import interpolate
from .matcher import match_document
from .normalize import is_valid_value, resolve_relative
from .packcheck import PackManifest, validate_pack
from .preprocess import (
    normalize_whitespace,
    pipeline,
    segment_and_tokenize,
    tag_pos_heuristic,
)
from .rulepack import RulePack, load_rulepack
from .timex import Timex3Annotation

__all__ = [
    "CorpusDoc",
    "DanglingReferenceError",
    "DiffCounts",
    "DiffReport",
    "Document",
    "GoldTimex",
    "InputError",
    "InspectionSample",
    "NormalizationError",
    "PackError",
    "PackManifest",
    "ResourceCycleError",
    "ResourceLimitError",
    "RulePack",
    "TemponymError",
    "Timex3Annotation",
    "Token",
    "classify_pair",
    "diff_corpus",
    "interpolate",
    "is_valid_value",
    "load_corpus",
    "load_rulepack",
    "match_document",
    "normalize_whitespace",
    "parse_timeml",
    "pipeline",
    "probe_expressions",
    "resolve_relative",
    "sample_for_inspection",
    "segment_and_tokenize",
    "tag_pos_heuristic",
    "validate_pack",
]

__version__ = "0.1.0"
