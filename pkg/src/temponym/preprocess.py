"""Text preprocessing: whitespace normalization, sentence segmentation,
tokenization, heuristic POS tagging, and pretokenized TSV ingestion.

The pipeline for raw text is::

    normalized, offmap = normalize_whitespace(raw)
    doc = tag_pos_heuristic(segment_and_tokenize(normalized))

Matching operates on ``doc.text`` offsets, so downstream spans always refer
to the normalized text; ``offmap`` lets callers map a raw offset forward.

Segmentation is a deterministic heuristic: a sentence ends at ``.!?``
followed by a space and a capital letter or digit, except after known
abbreviations, single-letter initials, and ordinal day numbers that precede
a month name. Tokens split on whitespace and punctuation, but digit
sequences joined by ``.`` or ``:`` (clock times like ``21.30``) stay one
token, as do hyphenated words.
"""

from __future__ import annotations

import datetime
import re

from .document import Document, Token
from .errors import InputError

_TOKEN_RE = re.compile(r"\d+(?:[.:]\d+)+|[^\W_]+(?:-[^\W_]+)*|\S")

_BOUNDARY_RE = re.compile(r"[.!?](?= [A-ZÄÖÜ0-9])")

_CHUNK_BEFORE_RE = re.compile(r"[^\s]+$")

_SINGLE_INITIAL_RE = re.compile(r"^[^\W\d_]\.$")

_ORDINAL_RE = re.compile(r"^\d{1,2}\.$")

_NEXT_WORD_RE = re.compile(r" ([^\W\d_]+)")

# Common German abbreviations that end in a dot but never end a sentence.
_ABBREVIATIONS = {
    "z.b.", "u.a.", "d.h.", "u.u.", "o.ä.", "u.ä.", "s.o.", "s.u.",
    "abs.", "bzw.", "bzgl.", "ca.", "dr.", "etc.", "evtl.", "ggf.",
    "inkl.", "jh.", "jhd.", "mio.", "mrd.", "nr.", "prof.", "rd.",
    "sog.", "str.", "usw.", "vgl.", "vs.", "zzgl.",
}

_MONTH_WORDS = {
    "Januar", "Februar", "März", "April", "Mai", "Juni", "Juli",
    "August", "September", "Oktober", "November", "Dezember", "Jänner",
}

_DIGIT_TOKEN_RE = re.compile(r"\d+(?:[.:]\d+)*$")

_POS_LEXICON = {}
for _tag, _words in [
    ("ART", "der die das dem den des ein eine einem einen einer eines"),
    ("APPR", "im in am an um auf bei mit nach seit von vor zu zum zur "
             "über unter für durch gegen ab aus"),
    ("KON", "und oder aber denn sondern"),
    ("PPER", "ich du er sie es wir ihr mir dir ihm ihn uns euch man"),
    ("VAFIN", "ist war sind waren wird wurde wurden werden bin bist hat "
              "hatte haben hatten"),
    ("PTKNEG", "nicht"),
    ("ADV", "nun sehr schon noch auch nur dann dort hier heute morgen "
            "gestern übermorgen vorgestern bald oft damals stets immer"),
    ("PIAT", "jeder jeden jede jedes jedem viele vielen einige einigen "
             "mehrere mehreren etliche beide beiden kein keine"),
    ("KOUS", "dass weil wenn als wie obwohl"),
]:
    for _w in _words.split():
        _POS_LEXICON[_w] = _tag

_ADJ_SUFFIXES = ("lich", "liche", "lichen", "licher", "ig", "ige", "igen",
                 "iger", "isch", "ische", "ischen", "bar", "sam", "haft",
                 "los")


def normalize_whitespace(raw):
    """Collapse every maximal whitespace run to a single space.

    Returns ``(normalized, offset_map)`` where ``offset_map[i]`` is the
    length of the normalized form of ``raw[:i]``; the map is total over
    ``0..len(raw)``, monotone non-decreasing, and surjective onto the
    offsets of the normalized text.
    """
    out = []
    offset_map = []
    in_ws = False
    for ch in raw:
        offset_map.append(len(out))
        if ch.isspace():
            if not in_ws:
                out.append(" ")
            in_ws = True
        else:
            out.append(ch)
            in_ws = False
    offset_map.append(len(out))
    return "".join(out), offset_map


def _sentence_cuts(text):
    """Offsets just after each sentence-final punctuation mark."""
    cuts = []
    for m in _BOUNDARY_RE.finditer(text):
        i = m.start()
        if text[i] == ".":
            chunk = _CHUNK_BEFORE_RE.search(text[: i + 1]).group()
            if chunk.lower() in _ABBREVIATIONS:
                continue
            if _SINGLE_INITIAL_RE.match(chunk):
                continue
            if _ORDINAL_RE.match(chunk):
                nxt = _NEXT_WORD_RE.match(text, i + 1)
                if nxt and nxt.group(1) in _MONTH_WORDS:
                    continue
        cuts.append(i + 1)
    return cuts


def _tokenize_region(text, begin, end):
    return [
        Token(m.start(), m.end(), m.group())
        for m in _TOKEN_RE.finditer(text, begin, end)
    ]


def segment_and_tokenize(text, dct=None, source_id=""):
    """Split normalized text into sentences and tokens (POS left as UNK)."""
    cuts = _sentence_cuts(text)
    regions = []
    start = 0
    for cut in cuts:
        regions.append((start, cut))
        start = cut
    regions.append((start, len(text)))

    sentences = []
    tokens = []
    for begin, end in regions:
        region_tokens = _tokenize_region(text, begin, end)
        if not region_tokens:
            continue
        sentences.append((region_tokens[0].begin, region_tokens[-1].end))
        tokens.extend(region_tokens)
    return Document(
        text=text,
        sentences=tuple(sentences),
        tokens=tuple(tokens),
        dct=dct,
        source_id=source_id,
    )


def tokenize_single_sentence(text, dct=None, source_id=""):
    """Tokenize ``text`` as exactly one sentence (no boundary detection)."""
    tokens = _tokenize_region(text, 0, len(text))
    sentences = ((tokens[0].begin, tokens[-1].end),) if tokens else ()
    return Document(
        text=text,
        sentences=sentences,
        tokens=tuple(tokens),
        dct=dct,
        source_id=source_id,
    )


def _guess_pos(surface):
    if _DIGIT_TOKEN_RE.match(surface):
        return "CARD"
    if len(surface) == 1 and not surface.isalnum():
        if surface in ".!?;:":
            return "$."
        if surface == ",":
            return "$,"
        return "$("
    tag = _POS_LEXICON.get(surface.casefold())
    if tag is not None:
        return tag
    if surface[0].isupper():
        return "NN"
    if surface.endswith(_ADJ_SUFFIXES):
        return "ADJA"
    return "UNK"


def tag_pos_heuristic(doc):
    """Assign coarse STTS-style tags; unknown tokens get ``UNK``."""
    tokens = tuple(
        Token(t.begin, t.end, t.surface, _guess_pos(t.surface))
        for t in doc.tokens
    )
    return Document(
        text=doc.text,
        sentences=doc.sentences,
        tokens=tokens,
        dct=doc.dct,
        source_id=doc.source_id,
    )


def pipeline(raw, dct=None, source_id=""):
    """normalize -> segment -> tokenize -> POS-tag, in one call."""
    normalized, _ = normalize_whitespace(raw)
    return tag_pos_heuristic(
        segment_and_tokenize(normalized, dct=dct, source_id=source_id)
    )


def ingest_pretokenized(records, dct=None, source_id=""):
    """Build a Document from ``(surface, pos, sentence_index)`` records.

    Surfaces are joined with single spaces; sentence indexes must be
    non-decreasing but may leave gaps.
    """
    parts = []
    tokens = []
    sentences = []
    prev_index = None
    sent_first = sent_last = None
    offset = 0
    for surface, pos, sentence_index in records:
        if not surface or any(c.isspace() for c in surface):
            raise InputError(f"bad pretokenized surface {surface!r}")
        if prev_index is not None and sentence_index < prev_index:
            raise InputError(
                f"sentence index decreases: {prev_index} -> {sentence_index}"
            )
        if parts:
            offset += 1
        begin = offset
        offset += len(surface)
        parts.append(surface)
        if prev_index is not None and sentence_index != prev_index:
            sentences.append((sent_first, sent_last))
            sent_first = begin
        if sent_first is None:
            sent_first = begin
        sent_last = offset
        tokens.append(Token(begin, offset, surface, pos))
        prev_index = sentence_index
    if sent_first is not None:
        sentences.append((sent_first, sent_last))
    return Document(
        text=" ".join(parts),
        sentences=tuple(sentences),
        tokens=tuple(tokens),
        dct=dct,
        source_id=source_id,
    )


def export_pretokenized(doc):
    """Inverse of ingest_pretokenized: ``(surface, pos, sentence_index)``."""
    records = []
    for tok in doc.tokens:
        for idx, (b, e) in enumerate(doc.sentences):
            if b <= tok.begin and tok.end <= e:
                records.append((tok.surface, tok.pos, idx))
                break
    return records


def parse_dct(text, path=None, line=None):
    """Parse a ``YYYY-MM-DD`` document creation time."""
    try:
        return datetime.date.fromisoformat(text)
    except ValueError as exc:
        raise InputError(f"bad dct {text!r}: {exc}", path=path, line=line)


def read_pretokenized_tsv(content, path="<tsv>"):
    """Parse the pretokenized TSV format into a list of documents.

    One token per line as ``surface<TAB>pos<TAB>sentence_index``; a blank
    line separates documents; a ``#dct=YYYY-MM-DD`` comment sets the
    document creation time of the document it appears in. Other ``#`` lines
    are comments.
    """
    docs = []
    records = []
    dct = None

    def flush():
        nonlocal records, dct
        if records:
            docs.append(ingest_pretokenized(records, dct=dct))
        records = []
        dct = None

    for lineno, line in enumerate(content.splitlines(), start=1):
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            if line.startswith("#dct="):
                dct = parse_dct(line[len("#dct="):].strip(), path, lineno)
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise InputError(
                f"expected 3 tab-separated fields, got {len(fields)}",
                path=path, line=lineno,
            )
        surface, pos, index_text = fields
        if not surface or any(c.isspace() for c in surface):
            raise InputError(
                f"bad token surface {surface!r}", path=path, line=lineno
            )
        try:
            index = int(index_text)
        except ValueError:
            raise InputError(
                f"bad sentence index {index_text!r}", path=path, line=lineno
            )
        if index < 0:
            raise InputError(
                f"negative sentence index {index}", path=path, line=lineno
            )
        if records and index < records[-1][2]:
            raise InputError(
                f"sentence index decreases: {records[-1][2]} -> {index}",
                path=path, line=lineno,
            )
        records.append((surface, pos, index))
    flush()
    return docs


def write_pretokenized_tsv(doc):
    """Serialize one document back to the TSV format."""
    lines = []
    if doc.dct is not None:
        lines.append(f"#dct={doc.dct.isoformat()}")
    for surface, pos, idx in export_pretokenized(doc):
        lines.append(f"{surface}\t{pos}\t{idx}")
    return "\n".join(lines) + "\n"
