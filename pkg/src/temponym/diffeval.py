"""Annotation-diff evaluation between two runs over the same corpus.

Overlapping spans from run A and run B are paired greedily, largest
overlap first, symmetrically in A and B. Each pair is classified as
unchanged (identical), extended (B strictly contains A), reduced
(A strictly contains B), or shifted (any other overlap); unpaired spans
are missing (A only) or novel (B only). Swapping the runs swaps
extended with reduced and novel with missing and preserves everything
else.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError

CATEGORIES = ("unchanged", "novel", "extended", "reduced", "shifted", "missing")


def _check_side(spans, side):
    ordered = sorted(spans)
    for (b1, e1), (b2, e2) in zip(ordered, ordered[1:]):
        if b2 < e1:
            raise InputError(
                f"overlapping spans within side {side}: "
                f"[{b1}, {e1}) and [{b2}, {e2})"
            )
    return ordered


def classify_pair(a_spans, b_spans):
    """Categorize two span sets; returns (category, a_span, b_span) rows.

    Spans are (begin, end) pairs; each side must be internally disjoint.
    Rows for unpaired spans carry None on the absent side. The result is
    ordered by the position of the spans involved.
    """
    a_ordered = _check_side(a_spans, "A")
    b_ordered = _check_side(b_spans, "B")

    candidates = []
    for ai, a in enumerate(a_ordered):
        for bi, b in enumerate(b_ordered):
            overlap = min(a[1], b[1]) - max(a[0], b[0])
            if overlap <= 0:
                continue
            key = (
                min(a[0], b[0]),
                -overlap,
                max(a[0], b[0]),
                min(a[1], b[1]),
                max(a[1], b[1]),
            )
            candidates.append((key, ai, bi))
    candidates.sort()

    paired = []
    used_a = set()
    used_b = set()
    for _, ai, bi in candidates:
        if ai in used_a or bi in used_b:
            continue
        used_a.add(ai)
        used_b.add(bi)
        a, b = a_ordered[ai], b_ordered[bi]
        if a == b:
            category = "unchanged"
        elif b[0] <= a[0] and a[1] <= b[1]:
            category = "extended"
        elif a[0] <= b[0] and b[1] <= a[1]:
            category = "reduced"
        else:
            category = "shifted"
        paired.append((category, a, b))

    rows = list(paired)
    rows.extend(
        ("missing", a, None)
        for i, a in enumerate(a_ordered)
        if i not in used_a
    )
    rows.extend(
        ("novel", None, b) for i, b in enumerate(b_ordered) if i not in used_b
    )
    rows.sort(key=lambda row: min(s for s in row[1:] if s is not None))
    return rows


@dataclass
class DiffCounts:
    total_a: int = 0
    total_b: int = 0
    unchanged: int = 0
    novel: int = 0
    extended: int = 0
    reduced: int = 0
    shifted: int = 0
    missing: int = 0

    def __add__(self, other):
        return DiffCounts(
            **{
                name: getattr(self, name) + getattr(other, name)
                for name in self.__dataclass_fields__
            }
        )

    def as_dict(self):
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


def count_rows(rows, total_a, total_b):
    counts = DiffCounts(total_a=total_a, total_b=total_b)
    for category, _, _ in rows:
        setattr(counts, category, getattr(counts, category) + 1)
    return counts


@dataclass
class DiffReport:
    per_doc: dict = field(default_factory=dict)
    per_sample: dict = field(default_factory=dict)
    doc_rows: dict = field(default_factory=dict)

    @property
    def total(self):
        out = DiffCounts()
        for counts in self.per_sample.values():
            out = out + counts
        return out

    def as_dict(self):
        return {
            "per_sample": {
                s: c.as_dict() for s, c in sorted(self.per_sample.items())
            },
            "per_doc": {
                d: c.as_dict() for d, c in sorted(self.per_doc.items())
            },
            "total": self.total.as_dict(),
        }


def _sample_of(doc_id):
    return doc_id.split("#", 1)[0]


def diff_corpus(run_a, run_b, sample_of=_sample_of):
    """Diff two runs keyed by document id; both must cover the same docs."""
    if set(run_a) != set(run_b):
        only_a = sorted(set(run_a) - set(run_b))
        only_b = sorted(set(run_b) - set(run_a))
        parts = []
        if only_a:
            parts.append("only in A: " + ", ".join(only_a))
        if only_b:
            parts.append("only in B: " + ", ".join(only_b))
        raise InputError("document sets differ; " + "; ".join(parts))

    report = DiffReport()
    for doc_id in sorted(run_a):
        a_spans = [x.span for x in run_a[doc_id]]
        b_spans = [x.span for x in run_b[doc_id]]
        rows = classify_pair(a_spans, b_spans)
        counts = count_rows(rows, len(a_spans), len(b_spans))
        report.doc_rows[doc_id] = rows
        report.per_doc[doc_id] = counts
        sample = sample_of(doc_id)
        base = report.per_sample.get(sample, DiffCounts())
        report.per_sample[sample] = base + counts
    return report


def diff_table(report):
    headers = ("sample", *CATEGORIES, "total_a", "total_b")
    rows = []
    for sample in sorted(report.per_sample):
        c = report.per_sample[sample]
        rows.append(
            (
                sample,
                c.unchanged,
                c.novel,
                c.extended,
                c.reduced,
                c.shifted,
                c.missing,
                c.total_a,
                c.total_b,
            )
        )
    t = report.total
    rows.append(
        (
            "TOTAL",
            t.unchanged,
            t.novel,
            t.extended,
            t.reduced,
            t.shifted,
            t.missing,
            t.total_a,
            t.total_b,
        )
    )
    return headers, rows


def corpus_stats(docs):
    """Sentence and token totals per sample for loaded corpus documents."""
    per_sample = {}
    for corpus_doc in docs:
        sentences, tokens = per_sample.get(corpus_doc.sample, (0, 0))
        per_sample[corpus_doc.sample] = (
            sentences + len(corpus_doc.document.sentences),
            tokens + len(corpus_doc.document.tokens),
        )
    return per_sample


def stats_table(per_sample):
    headers = ("sample", "sentences", "tokens")
    rows = [
        (sample, *per_sample[sample]) for sample in sorted(per_sample)
    ]
    rows.append(
        (
            "TOTAL",
            sum(s for s, _ in per_sample.values()),
            sum(t for _, t in per_sample.values()),
        )
    )
    return headers, rows


@dataclass(frozen=True)
class InspectionSample:
    sample: str
    doc: str
    begin: int
    end: int
    surface: str
    left: str
    right: str
    rule_name: str
    label: str = ""


_INSPECTION_HEADER = (
    "sample",
    "doc",
    "begin",
    "end",
    "surface",
    "left",
    "right",
    "rule_name",
    "label",
)


def sample_for_inspection(population, n, seed, window=60):
    """Draw n context snippets, reproducibly for a given seed.

    ``population`` holds (sample, doc_id, text, annotation) tuples; the
    result is ordered by document and span.
    """
    ordered = sorted(
        population, key=lambda item: (item[1], item[3].begin, item[3].end)
    )
    if n > len(ordered):
        raise InputError(
            f"requested {n} samples from a population of {len(ordered)}"
        )
    indexes = sorted(random.Random(seed).sample(range(len(ordered)), n))
    out = []
    for index in indexes:
        sample, doc_id, text, annotation = ordered[index]
        out.append(
            InspectionSample(
                sample=sample,
                doc=doc_id,
                begin=annotation.begin,
                end=annotation.end,
                surface=annotation.surface,
                left=text[max(0, annotation.begin - window):annotation.begin],
                right=text[annotation.end:annotation.end + window],
                rule_name=annotation.rule_name,
            )
        )
    return out


def inspection_tsv(samples):
    lines = ["\t".join(_INSPECTION_HEADER)]
    for s in samples:
        lines.append(
            "\t".join(
                (
                    s.sample,
                    s.doc,
                    str(s.begin),
                    str(s.end),
                    s.surface,
                    s.left,
                    s.right,
                    s.rule_name,
                    s.label,
                )
            )
        )
    return "\n".join(lines) + "\n"


def parse_inspection_tsv(content, path="<labels>"):
    lines = content.splitlines()
    if not lines or lines[0].split("\t") != list(_INSPECTION_HEADER):
        raise InputError(
            "expected header: " + "\t".join(_INSPECTION_HEADER), path, 1
        )
    samples = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        fields = raw.split("\t")
        if len(fields) != len(_INSPECTION_HEADER):
            raise InputError(
                f"expected {len(_INSPECTION_HEADER)} fields, got {len(fields)}",
                path,
                lineno,
            )
        label = fields[8].strip().lower()
        if label not in ("", "true", "false"):
            raise InputError(f"label must be true, false, or empty, got "
                             f"{fields[8]!r}", path, lineno)
        try:
            begin, end = int(fields[2]), int(fields[3])
        except ValueError:
            raise InputError("begin and end must be integers", path, lineno)
        samples.append(
            InspectionSample(
                sample=fields[0],
                doc=fields[1],
                begin=begin,
                end=end,
                surface=fields[4],
                left=fields[5],
                right=fields[6],
                rule_name=fields[7],
                label=label,
            )
        )
    return samples


def label_totals(samples):
    """Per-sample counts of true, false, and unlabeled inspection rows."""
    totals = {}
    for s in samples:
        counts = totals.setdefault(s.sample, {"true": 0, "false": 0,
                                              "unlabeled": 0})
        counts[s.label if s.label else "unlabeled"] += 1
    return totals


def label_table(totals):
    headers = ("sample", "true", "false", "unlabeled")
    rows = [
        (sample, c["true"], c["false"], c["unlabeled"])
        for sample, c in sorted(totals.items())
    ]
    rows.append(
        (
            "TOTAL",
            sum(c["true"] for c in totals.values()),
            sum(c["false"] for c in totals.values()),
            sum(c["unlabeled"] for c in totals.values()),
        )
    )
    return headers, rows


def novel_annotations(base_run, ext_run):
    """Annotations in ext_run whose spans pair as novel against base_run."""
    report = diff_corpus(base_run, ext_run)
    out = {}
    for doc_id, rows in report.doc_rows.items():
        spans = {b for category, _, b in rows if category == "novel"}
        out[doc_id] = [a for a in ext_run[doc_id] if a.span in spans]
    return out
