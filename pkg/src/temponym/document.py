"""Document model: normalized text plus sentence and token spans.

All spans are half-open ``[begin, end)`` character offsets into ``text``.
Documents are immutable so they can be shared freely across worker threads.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass, field

from .errors import InputError

_BAD_WHITESPACE_RE = re.compile(r"[^\S ]|  ")


@dataclass(frozen=True)
class Token:
    begin: int
    end: int
    surface: str
    pos: str = "UNK"


@dataclass(frozen=True)
class Document:
    text: str
    sentences: tuple[tuple[int, int], ...] = ()
    tokens: tuple[Token, ...] = ()
    dct: datetime.date | None = None
    source_id: str = ""

    def __post_init__(self):
        if _BAD_WHITESPACE_RE.search(self.text):
            raise InputError("document text is not whitespace-normalized")
        self._check_spans(self.sentences, "sentence")
        self._check_spans([(t.begin, t.end) for t in self.tokens], "token")
        for tok in self.tokens:
            if self.text[tok.begin:tok.end] != tok.surface:
                raise InputError(
                    f"token surface {tok.surface!r} disagrees with text at "
                    f"[{tok.begin},{tok.end})"
                )
            if not self._enclosing_sentence(tok):
                raise InputError(
                    f"token at [{tok.begin},{tok.end}) lies in no sentence"
                )

    def _check_spans(self, spans, kind):
        prev_end = 0
        for begin, end in spans:
            if not (0 <= begin < end <= len(self.text)):
                raise InputError(f"{kind} span [{begin},{end}) out of bounds")
            if begin < prev_end:
                raise InputError(f"{kind} spans overlap or are unsorted")
            prev_end = end

    def _enclosing_sentence(self, tok):
        return any(b <= tok.begin and tok.end <= e for b, e in self.sentences)

    def sentence_tokens(self, sentence):
        """Tokens lying inside the given (begin, end) sentence span."""
        b, e = sentence
        return [t for t in self.tokens if b <= t.begin and t.end <= e]

    def token_at(self, offset):
        """The token whose span contains ``offset``, or None."""
        for tok in self.tokens:
            if tok.begin <= offset < tok.end:
                return tok
        return None
