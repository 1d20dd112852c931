"""Filter ranked suggestions and write them out as a pattern resource.

The output file format is the rule engine's pattern resource: one regex
alternative per line, UTF-8, blank lines and ``//`` comments ignored by
the loader, duplicate lines rejected.  Words are escaped so each line
matches its word literally.
"""
from __future__ import annotations

import re
from pathlib import Path


def filter_suggestions(batch, min_len=4, max_keep=5000):
    """Reduce a ranked suggestion list to the curated word list.

    Drops words shorter than min_len, drops wordpiece fragments (the
    "##" prefix marks a continuation piece), deduplicates keeping the
    first occurrence, and truncates to the first max_keep survivors.
    Rank order is preserved throughout.
    """
    words = getattr(batch, "words", batch)
    kept = []
    seen = set()
    for word in words:
        if len(kept) >= max_keep:
            break
        if len(word) < min_len:
            continue
        if word.startswith("##"):
            continue
        if word in seen:
            continue
        seen.add(word)
        kept.append(word)
    return kept


def escape_alternative(word: str) -> str:
    """Escape one word into a pattern-resource line matching it literally.

    Raises ValueError for words the line-based format cannot carry:
    empty strings, words spanning line breaks, and words with leading or
    trailing whitespace (the loader strips line edges).
    """
    if not word:
        raise ValueError("cannot emit an empty word")
    if len(word.splitlines()) != 1:
        raise ValueError(f"word {word!r} contains a line break")
    if word != word.strip():
        raise ValueError(
            f"word {word!r} has leading or trailing whitespace, which "
            "the pattern loader would strip"
        )
    escaped = re.escape(word)
    # a leading "//" would read back as a comment line
    if escaped.startswith("//"):
        escaped = "\\" + escaped
    return escaped


def emit_pattern_file(words, path):
    """Write words as a pattern resource file, one alternative per line.

    The word list must be non-empty and duplicate-free; the loader
    rejects empty resources and duplicate alternatives.
    """
    words = list(words)
    if not words:
        raise ValueError("refusing to write an empty pattern resource")
    seen = set()
    lines = []
    for word in words:
        if word in seen:
            raise ValueError(f"duplicate word {word!r}")
        seen.add(word)
        lines.append(escape_alternative(word))
    path = Path(path)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
