"""Sentence-bounded rule matching over documents.

Per sentence: every enabled rule is tried at every token start (a match
must also end on a token end), POS constraints are checked against the
token containing each constrained group, negative matches suppress every
positive match they intersect, and surviving overlaps are resolved by
longest span, then higher priority, then pack order. Survivors are
normalized; the result is sorted by span start and pairwise disjoint.
"""

from __future__ import annotations

from .normalize import normalize_match
from .rulepack import rule_is_disabled
from .timex import Timex3Annotation


def _pos_constraints_hold(rule, match, doc):
    for group, tag in rule.pos_constraints:
        begin, end = match.span(group)
        if begin == -1:
            continue
        token = doc.token_at(begin)
        if token is None or token.pos != tag or end > token.end:
            return False
    return True


def _active_rules(pack, disabled, enabled):
    active = []
    for index, compiled in enumerate(pack.rules):
        rule = compiled.rule
        on = rule.enabled_by_default or rule_is_disabled(rule, enabled)
        if rule_is_disabled(rule, disabled):
            on = False
        if on:
            active.append((index, compiled))
    return active


def _spans_intersect(a_begin, a_end, b_begin, b_end):
    return a_begin < b_end and b_begin < a_end


def match_document(pack, doc, disabled=frozenset(), enabled=frozenset()):
    """Run a pack over a document and return its annotations.

    ``disabled`` and ``enabled`` accept full rule names or unqualified
    trailing segments; ``disabled`` wins on conflict.
    """
    active = _active_rules(pack, disabled, enabled)
    positives = []
    negative_spans = []

    for sentence_begin, sentence_end in doc.sentences:
        tokens = doc.sentence_tokens((sentence_begin, sentence_end))
        starts = [t.begin for t in tokens]
        ends = {t.end for t in tokens}
        for index, compiled in active:
            pattern = compiled.pattern
            for start in starts:
                m = pattern.match(doc.text, start, sentence_end)
                if m is None or m.end() == m.start():
                    continue
                if m.end() not in ends:
                    continue
                if not _pos_constraints_hold(compiled.rule, m, doc):
                    continue
                if compiled.rule.is_negative:
                    negative_spans.append((m.start(), m.end()))
                else:
                    positives.append((index, compiled, m))

    survivors = [
        (index, compiled, m)
        for index, compiled, m in positives
        if not any(
            _spans_intersect(m.start(), m.end(), nb, ne)
            for nb, ne in negative_spans
        )
    ]

    survivors.sort(
        key=lambda item: (
            -(item[2].end() - item[2].start()),
            -item[1].rule.priority,
            item[0],
            item[2].start(),
        )
    )
    chosen = []
    occupied = []
    for index, compiled, m in survivors:
        if any(
            _spans_intersect(m.start(), m.end(), b, e) for b, e in occupied
        ):
            continue
        occupied.append((m.start(), m.end()))
        chosen.append((compiled, m))

    annotations = []
    for compiled, m in chosen:
        value, freq, quant, mod = normalize_match(
            compiled, m, pack.norm_resources, doc.dct
        )
        annotations.append(
            Timex3Annotation(
                begin=m.start(),
                end=m.end(),
                surface=doc.text[m.start():m.end()],
                timex_type=compiled.rule.timex_type,
                value=value,
                freq=freq,
                quant=quant,
                mod=mod,
                rule_name=compiled.rule.name,
            )
        )
    annotations.sort(key=lambda a: a.begin)
    return annotations
