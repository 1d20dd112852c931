"""Harvesting gold expressions from TimeML and probing them against a pack.

Gold TIMEX3 surfaces can be pulled out of annotated corpora, optionally
translated, and then probed one expression at a time to see which ones a
rule pack recognizes and how it normalizes them.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .errors import InputError
from .matcher import match_document
from .preprocess import normalize_whitespace, tag_pos_heuristic, \
    tokenize_single_sentence

_XML_LANG = "{http://www.w3.org/XML/1998/namespace}lang"


def _local_name(tag):
    return tag.rsplit("}", 1)[-1]


def _parse_xml(content, source):
    try:
        return ET.fromstring(content)
    except ET.ParseError as exc:
        line, column = exc.position
        raise InputError(f"bad XML (column {column}): {exc.msg}", source, line)


@dataclass(frozen=True)
class GoldTimex:
    source: str
    surface: str
    timex_type: str
    value: str
    language: str = ""


def parse_timeml(content, source="<timeml>"):
    """Extract every TIMEX3 element as a GoldTimex, nested text flattened."""
    root = _parse_xml(content, source)
    language = root.get(_XML_LANG) or root.get("lang") or ""
    out = []
    for element in root.iter():
        if _local_name(element.tag) != "TIMEX3":
            continue
        out.append(
            GoldTimex(
                source=source,
                surface="".join(element.itertext()),
                timex_type=element.get("type", ""),
                value=element.get("value", ""),
                language=language,
            )
        )
    return out


def timeml_text(content, source="<timeml>"):
    """The flattened character content of a TimeML file."""
    return "".join(_parse_xml(content, source).itertext())


@dataclass(frozen=True)
class TranslationOutcome:
    source: str
    target: str
    translated: bool
    error: str | None = None


class IdentityClient:
    """Passes expressions through unchanged; the same-language default."""

    def translate(self, text):
        return text, True


class DictionaryClient:
    """Phrase-for-phrase lookup; misses pass through untranslated."""

    def __init__(self, mapping):
        self.mapping = dict(mapping)

    @classmethod
    def from_tsv(cls, content, path="<dictionary>"):
        mapping = {}
        for lineno, raw in enumerate(content.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise InputError(
                    f"expected 2 tab-separated fields, got {len(fields)}",
                    path,
                    lineno,
                )
            if fields[0] in mapping:
                raise InputError(
                    f"duplicate source phrase {fields[0]!r}", path, lineno
                )
            mapping[fields[0]] = fields[1]
        return cls(mapping)

    def translate(self, text):
        if text in self.mapping:
            return self.mapping[text], True
        return text, False


def translate_expressions(expressions, client):
    """Translate each expression; client failures become per-item outcomes."""
    out = []
    for expression in expressions:
        try:
            target, translated = client.translate(expression)
        except Exception as exc:
            out.append(
                TranslationOutcome(expression, expression, False, str(exc))
            )
            continue
        out.append(TranslationOutcome(expression, target, translated))
    return out


@dataclass(frozen=True)
class ProbeResult:
    expression: str
    annotations: tuple


@dataclass
class ProbeReport:
    unmatched: list = field(default_factory=list)
    matched: list = field(default_factory=list)


def probe_expressions(pack, expressions, disabled=frozenset()):
    """Run each expression through the pack as its own single sentence.

    No document time is attached, so relative values come out in their
    unanchored forms. Unmatched expressions are reported first.
    """
    report = ProbeReport()
    for expression in expressions:
        normalized, _ = normalize_whitespace(expression)
        doc = tokenize_single_sentence(normalized)
        doc = tag_pos_heuristic(doc)
        annotations = match_document(pack, doc, disabled=disabled)
        result = ProbeResult(normalized, tuple(annotations))
        if annotations:
            report.matched.append(result)
        else:
            report.unmatched.append(result)
    return report


def render_probe_report(report):
    lines = []
    for result in report.unmatched:
        lines.append(f"MISS\t{result.expression}")
    for result in report.matched:
        for a in result.annotations:
            lines.append(
                "\t".join(
                    (
                        "OK",
                        result.expression,
                        a.surface,
                        a.timex_type,
                        a.value if a.value is not None else "",
                        a.rule_name,
                    )
                )
            )
    summary = (
        f"matched {len(report.matched)} of "
        f"{len(report.matched) + len(report.unmatched)} expressions"
    )
    return "\n".join([*lines, summary]) + "\n"
