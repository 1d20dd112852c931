"""Serialization of annotation runs: JSONL records, inline markup, tables."""

from __future__ import annotations

import json
from xml.sax.saxutils import escape, quoteattr

from .errors import InputError
from .timex import Timex3Annotation

_RECORD_KEYS = (
    "doc",
    "begin",
    "end",
    "surface",
    "type",
    "value",
    "freq",
    "quant",
    "mod",
    "rule_name",
)


def record_line(record):
    """One compact, key-sorted JSON line for a record dict."""
    return json.dumps(
        record, ensure_ascii=False, sort_keys=True, separators=(",", ":")
    )


def render_records(run):
    """JSONL for ``run``: {doc_id: [Timex3Annotation, ...]} in doc order."""
    lines = []
    for doc_id in sorted(run):
        for annotation in sorted(run[doc_id], key=lambda a: a.begin):
            lines.append(record_line(annotation.to_record(doc=doc_id)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_records(content, path="<records>"):
    """Parse JSONL back into {doc_id: [Timex3Annotation, ...]}."""
    run = {}
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON record: {exc.msg}", path, lineno)
        if not isinstance(record, dict):
            raise InputError("record is not an object", path, lineno)
        missing = [k for k in _RECORD_KEYS if k not in record]
        if missing:
            raise InputError(
                "record missing keys: " + ", ".join(missing), path, lineno
            )
        try:
            annotation = Timex3Annotation.from_record(record)
        except Exception as exc:
            raise InputError(f"bad record: {exc}", path, lineno)
        run.setdefault(record["doc"], []).append(annotation)
    for annotations in run.values():
        annotations.sort(key=lambda a: a.begin)
    return run


def _timex_attrs(annotation, tid):
    attrs = [("tid", tid), ("type", annotation.timex_type)]
    if annotation.value is not None:
        attrs.append(("value", annotation.value))
    if annotation.freq is not None:
        attrs.append(("freq", annotation.freq))
    if annotation.quant is not None:
        attrs.append(("quant", annotation.quant))
    if annotation.mod is not None:
        attrs.append(("mod", annotation.mod))
    return " ".join(f"{name}={quoteattr(value)}" for name, value in attrs)


def render_inline(doc_id, text, annotations):
    """Wrap ``text`` in a TimeML envelope with inline TIMEX3 elements."""
    parts = [f"<TimeML doc={quoteattr(doc_id)}>"]
    cursor = 0
    for number, annotation in enumerate(
        sorted(annotations, key=lambda a: a.begin), start=1
    ):
        parts.append(escape(text[cursor:annotation.begin]))
        parts.append(f"<TIMEX3 {_timex_attrs(annotation, f't{number}')}>")
        parts.append(escape(text[annotation.begin:annotation.end]))
        parts.append("</TIMEX3>")
        cursor = annotation.end
    parts.append(escape(text[cursor:]))
    parts.append("</TimeML>")
    return "".join(parts)


def format_table(headers, rows):
    """Left-aligned monospace table; every cell is stringified."""
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in cells:
        lines.append(
            "  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip()
        )
    return "\n".join(lines)
