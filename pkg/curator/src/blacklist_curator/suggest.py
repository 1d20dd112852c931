"""Collect ranked fill-in suggestions for one masked token position.

A suggestion backend answers the question "which words fit here?" for a
sentence with a single masked token.  The fixture backend replays a
ranked list from a TSV file so everything runs offline; the transformers
backend asks a fill-mask model and is only imported when selected.
"""
from __future__ import annotations

import dataclasses
from pathlib import Path

MASK_TOKEN = "[MASK]"


class CuratorError(Exception):
    """Base class for curation failures."""


class BackendError(CuratorError):
    """A suggestion backend failed to produce a ranked list."""


class FixtureError(CuratorError):
    """A ranked-suggestion fixture file is malformed."""


@dataclasses.dataclass(frozen=True)
class SuggestionBatch:
    """Ranked suggestions for the masked position of one sentence.

    ``context`` holds the sentence with the mask token substituted in,
    ``mask_index`` the 0-based token position that was masked, and
    ``suggestions`` the (word, score) pairs in descending score order.
    """

    context: str
    mask_index: int
    suggestions: tuple

    @property
    def words(self):
        return tuple(word for word, _ in self.suggestions)


def mask_context(context: str, mask_index: int) -> str:
    """Replace the token at mask_index with the mask token.

    Tokens are whitespace separated; the index is 0-based.
    """
    tokens = context.split()
    if not tokens:
        raise CuratorError("context sentence is empty")
    if not 0 <= mask_index < len(tokens):
        raise CuratorError(
            f"mask index {mask_index} is out of range for a sentence of "
            f"{len(tokens)} tokens (indices are 0-based)"
        )
    tokens[mask_index] = MASK_TOKEN
    return " ".join(tokens)


class FixtureBackend:
    """Replays a canned ranked suggestion list, ignoring the context."""

    def __init__(self, rows):
        rows = tuple(rows)
        previous = None
        for word, score in rows:
            if previous is not None and score > previous:
                raise FixtureError(
                    f"suggestion list is not ranked: score {score} for "
                    f"{word!r} exceeds the previous score {previous}"
                )
            previous = score
        self.rows = rows

    @classmethod
    def from_tsv(cls, path):
        """Load word<TAB>score rows; blanks and // comments are skipped.

        Comments use // rather than # so that wordpiece suggestions
        (the "##" prefix) survive the trip through the file.
        """
        rows = []
        path = Path(path)
        for lineno, raw in enumerate(
            path.read_text(encoding="utf-8").splitlines(), start=1
        ):
            line = raw.strip()
            if not line or line.startswith("//"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise FixtureError(
                    f"{path.name}:{lineno}: expected 2 tab-separated "
                    f"fields, got {len(fields)}"
                )
            word, score_text = fields
            try:
                score = float(score_text)
            except ValueError:
                raise FixtureError(
                    f"{path.name}:{lineno}: bad score {score_text!r}"
                ) from None
            rows.append((word, score))
        try:
            return cls(rows)
        except FixtureError as exc:
            raise FixtureError(f"{path.name}: {exc}") from None

    def suggest(self, masked_context, k):
        return list(self.rows[:k])


class TransformersBackend:
    """Asks a Hugging Face fill-mask pipeline for ranked suggestions.

    The pipeline is built lazily on first use so that selecting the
    fixture backend never touches the model stack.
    """

    def __init__(self, model="bert-base-german-cased"):
        self.model = model
        self._pipe = None

    def _pipeline(self):
        if self._pipe is None:
            try:
                from transformers import pipeline
            except ImportError as exc:
                raise BackendError(
                    "the transformers backend needs the 'transformers' "
                    "package (pip install blacklist-curator[model])"
                ) from exc
            try:
                self._pipe = pipeline("fill-mask", model=self.model)
            except Exception as exc:
                raise BackendError(
                    f"could not load fill-mask model {self.model!r}: {exc}"
                ) from exc
        return self._pipe

    def suggest(self, masked_context, k):
        pipe = self._pipeline()
        masked = masked_context.replace(MASK_TOKEN, pipe.tokenizer.mask_token)
        try:
            results = pipe(masked, top_k=k)
        except Exception as exc:
            raise BackendError(f"fill-mask query failed: {exc}") from exc
        return [(r["token_str"], float(r["score"])) for r in results]


def harvest_suggestions(context, mask_index, k, backend) -> SuggestionBatch:
    """Mask one token and collect the backend's top-k ranked suggestions.

    Backend failures surface as BackendError and produce no partial
    output.  Asking for more suggestions than the backend knows returns
    everything it has.
    """
    if k < 1:
        raise CuratorError(f"suggestion count must be positive, got {k}")
    masked = mask_context(context, mask_index)
    try:
        ranked = backend.suggest(masked, k)
    except CuratorError:
        raise
    except Exception as exc:
        raise BackendError(f"suggestion backend failed: {exc}") from exc
    return SuggestionBatch(
        context=masked,
        mask_index=mask_index,
        suggestions=tuple((word, float(score)) for word, score in ranked),
    )
