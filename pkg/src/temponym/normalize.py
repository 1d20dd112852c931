"""Normalization: value templates, the value grammar, and relative anchoring.

Norm templates are literal text plus two constructs:

* ``group(N)``          - the text captured by extraction group N
* ``%name(ARG)``        - look up ARG (itself a template) in norm resource
                          ``name``; the reserved name ``REL`` instead
                          resolves ARG as a relative-date spec against the
                          document creation time

Relative specs are ``day±N``, ``month±N``, ``year±N``, ``prev-wd:<day>``,
``next-wd:<day>``, or ``present``/``past``/``future``. Well-known German
lexemes ("übermorgen", "Vorjahr", "vorheriger Freitag", "nun", ...) are
accepted as aliases. Without a document creation time, anchorable specs
fall back to ``UNDEF-``-prefixed placeholder values.
"""

from __future__ import annotations

import datetime
import re

from .errors import NormalizationError

VALUE_RE = re.compile(
    r"^(?:UNDEF-)?(?:"
    r"PRESENT_REF|PAST_REF|FUTURE_REF"
    r"|[0-9X]{4}(?:"
    r"-(?:Q[1-4X]|SP|SU|FA|WI)"
    r"|-[0-9X]{2}(?:-[0-9X]{2}(?:T[0-9X]{2}:[0-9X]{2})?)?"
    r")?"
    r"|P(?:\d+|X+)[YMWD]"
    r"|PT(?:\d+|X+)[HM]"
    r")$"
)


def is_valid_value(value):
    """True if ``value`` conforms to the normalized value grammar."""
    return bool(VALUE_RE.match(value))


# --- relative-date specs -------------------------------------------------

_WEEKDAYS = {
    "monday": 0, "tuesday": 1, "wednesday": 2, "thursday": 3,
    "friday": 4, "saturday": 5, "sunday": 6,
    "montag": 0, "dienstag": 1, "mittwoch": 2, "donnerstag": 3,
    "freitag": 4, "samstag": 5, "sonnabend": 5, "sonntag": 6,
}

_REFS = {
    "present": "PRESENT_REF",
    "past": "PAST_REF",
    "future": "FUTURE_REF",
}

_LEXICON = {
    "heute": "day+0",
    "morgen": "day+1",
    "gestern": "day-1",
    "übermorgen": "day+2",
    "vorgestern": "day-2",
    "vorjahr": "year-1",
    "vorjahres": "year-1",
    "folgejahr": "year+1",
    "vormonat": "month-1",
    "folgemonat": "month+1",
    "nun": "present",
    "jetzt": "present",
    "derzeit": "present",
    "damals": "past",
    "einst": "past",
    "künftig": "future",
}

_SHIFT_RE = re.compile(r"^(day|month|year)([+-]\d+)$")
_WD_RE = re.compile(r"^(prev|next)-wd:(\w+)$")
_PREV_PHRASE_RE = re.compile(
    r"^(?:vorherig\w*|vorig\w*|letzt\w*|vergangen\w*) (\w+)$"
)
_NEXT_PHRASE_RE = re.compile(
    r"^(?:nächst\w*|naechst\w*|kommend\w*|folgend\w*) (\w+)$"
)


def parse_relative(token_class):
    """Parse a relative spec or German alias into an internal form.

    Returns ``("shift", unit, n)``, ``("wd", direction, weekday)``, or
    ``("ref", value)``; raises ValueError on anything else.
    """
    text = " ".join(token_class.split()).casefold()
    text = _LEXICON.get(text, text)
    if text in _REFS:
        return ("ref", _REFS[text])
    m = _SHIFT_RE.match(text)
    if m:
        return ("shift", m.group(1), int(m.group(2)))
    m = _WD_RE.match(text)
    if m:
        day = _WEEKDAYS.get(m.group(2))
        if day is None:
            raise ValueError(f"unknown weekday {m.group(2)!r}")
        return ("wd", m.group(1), day)
    m = _PREV_PHRASE_RE.match(text)
    if m:
        day = _WEEKDAYS.get(m.group(1))
        if day is not None:
            return ("wd", "prev", day)
    m = _NEXT_PHRASE_RE.match(text)
    if m:
        day = _WEEKDAYS.get(m.group(1))
        if day is not None:
            return ("wd", "next", day)
    raise ValueError(f"unknown relative token class {token_class!r}")


def resolve_relative(token_class, dct):
    """Resolve a relative token class against the document creation time.

    ``prev-wd`` means the latest such weekday strictly before ``dct``;
    ``next-wd`` the earliest strictly after.
    """
    parsed = parse_relative(token_class)
    if parsed[0] == "ref":
        return parsed[1]
    if dct is None:
        raise ValueError(f"dct required to anchor {token_class!r}")
    if parsed[0] == "shift":
        _, unit, n = parsed
        if unit == "day":
            return (dct + datetime.timedelta(days=n)).isoformat()
        if unit == "year":
            return f"{dct.year + n:04d}"
        months = dct.year * 12 + (dct.month - 1) + n
        return f"{months // 12:04d}-{months % 12 + 1:02d}"
    _, direction, target = parsed
    if direction == "prev":
        delta = (dct.weekday() - target) % 7 or 7
        return (dct - datetime.timedelta(days=delta)).isoformat()
    delta = (target - dct.weekday()) % 7 or 7
    return (dct + datetime.timedelta(days=delta)).isoformat()


def unanchored_value(token_class):
    """Placeholder value for a relative token class with no dct."""
    parsed = parse_relative(token_class)
    if parsed[0] == "ref":
        return parsed[1]
    if parsed[0] == "shift":
        return {
            "day": "UNDEF-XXXX-XX-XX",
            "month": "UNDEF-XXXX-XX",
            "year": "UNDEF-XXXX",
        }[parsed[1]]
    return "UNDEF-XXXX-XX-XX"


# --- norm templates ------------------------------------------------------

_GROUP_TOKEN_RE = re.compile(r"group\((\d+)\)")
_CALL_TOKEN_RE = re.compile(r"%([A-Za-z_][A-Za-z0-9_]*)\(")

REL_FUNCTION = "REL"


def parse_template(template):
    """Parse a norm template into a node list; raises ValueError."""
    nodes, end = _parse_nodes(template, 0, inside_call=False)
    assert end == len(template)
    return nodes


def _parse_nodes(text, i, inside_call):
    nodes = []
    lit = []

    def flush():
        if lit:
            nodes.append(("lit", "".join(lit)))
            lit.clear()

    while i < len(text):
        ch = text[i]
        if inside_call and ch == ")":
            flush()
            return nodes, i + 1
        m = _GROUP_TOKEN_RE.match(text, i)
        if m:
            flush()
            nodes.append(("group", int(m.group(1))))
            i = m.end()
            continue
        m = _CALL_TOKEN_RE.match(text, i)
        if m:
            flush()
            arg, i = _parse_nodes(text, m.end(), inside_call=True)
            nodes.append(("call", m.group(1), arg))
            continue
        if ch == "%":
            raise ValueError(
                f"stray '%' at offset {i}; norm references are written "
                "%name(...)"
            )
        lit.append(ch)
        i += 1
    if inside_call:
        raise ValueError("unterminated %name(...) call")
    flush()
    return nodes, i


def template_issues(nodes, norm_resources, group_count):
    """Static problems in a parsed template (bad refs, bad group indexes)."""
    issues = []
    for node in nodes:
        if node[0] == "group":
            if not (1 <= node[1] <= group_count):
                issues.append(
                    f"group({node[1]}) out of range; extraction has "
                    f"{group_count} group(s)"
                )
        elif node[0] == "call":
            name = node[1]
            if name != REL_FUNCTION and name not in norm_resources:
                issues.append(f"unknown norm resource %{name}")
            issues.extend(
                template_issues(node[2], norm_resources, group_count)
            )
    return issues


def evaluate_template(nodes, match, norm_resources, dct, rule_name):
    parts = []
    for node in nodes:
        if node[0] == "lit":
            parts.append(node[1])
        elif node[0] == "group":
            text = match.group(node[1])
            if text is None:
                raise NormalizationError(
                    f"rule {rule_name}: group({node[1]}) did not "
                    "participate in the match"
                )
            parts.append(text)
        else:
            name = node[1]
            arg = evaluate_template(
                node[2], match, norm_resources, dct, rule_name
            )
            if name == REL_FUNCTION:
                try:
                    if dct is None:
                        parts.append(unanchored_value(arg))
                    else:
                        parts.append(resolve_relative(arg, dct))
                except ValueError as exc:
                    raise NormalizationError(f"rule {rule_name}: {exc}")
            else:
                table = norm_resources.get(name)
                if table is None:
                    raise NormalizationError(
                        f"rule {rule_name}: unknown norm resource {name}"
                    )
                if arg not in table:
                    raise NormalizationError(
                        f"rule {rule_name}: key {arg!r} not found in norm "
                        f"resource {name}"
                    )
                parts.append(table[arg])
    return "".join(parts)


def normalize_match(compiled_rule, match, norm_resources, dct):
    """Produce ``(value, freq, quant, mod)`` for a surviving match."""
    rule = compiled_rule.rule
    value = evaluate_template(
        compiled_rule.value_template, match, norm_resources, dct, rule.name
    )
    extras = []
    for nodes in (
        compiled_rule.freq_template,
        compiled_rule.quant_template,
        compiled_rule.mod_template,
    ):
        if nodes is None:
            extras.append(None)
        else:
            extras.append(
                evaluate_template(nodes, match, norm_resources, dct, rule.name)
            )
    return (value, *extras)
