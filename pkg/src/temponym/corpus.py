"""Loading corpora from files into preprocessed documents.

Each input file becomes one or more documents. The document id is the
file stem (``stem#k`` for multi-document pretokenized files) and the
sample label, used to group evaluation counts, is the stem before any
``#`` suffix.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .harvest import timeml_text
from .preprocess import pipeline, read_pretokenized_tsv

INPUT_FORMATS = ("plain", "pretokenized", "timeml")


@dataclass(frozen=True)
class CorpusDoc:
    sample: str
    doc_id: str
    document: object


def _read_text(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(str(exc), str(path))


def load_corpus(paths, input_format="plain", dct=None):
    """Load and preprocess documents; ``dct`` overrides any file metadata."""
    if input_format not in INPUT_FORMATS:
        raise InputError(
            f"unknown input format {input_format!r}; "
            f"expected one of {', '.join(INPUT_FORMATS)}"
        )
    docs = []
    for path in paths:
        stem = Path(path).stem
        content = _read_text(path)
        if input_format == "plain":
            document = pipeline(content, dct=dct, source_id=stem)
            docs.append(CorpusDoc(stem, stem, document))
        elif input_format == "timeml":
            text = timeml_text(content, source=str(path))
            document = pipeline(text, dct=dct, source_id=stem)
            docs.append(CorpusDoc(stem, stem, document))
        else:
            parsed = read_pretokenized_tsv(content, path=str(path))
            for k, document in enumerate(parsed):
                doc_id = stem if len(parsed) == 1 else f"{stem}#{k + 1}"
                if dct is not None:
                    document = dataclasses.replace(document, dct=dct)
                document = dataclasses.replace(document, source_id=doc_id)
                docs.append(CorpusDoc(stem, doc_id, document))
    seen = set()
    for corpus_doc in docs:
        if corpus_doc.doc_id in seen:
            raise InputError(f"duplicate document id {corpus_doc.doc_id!r}")
        seen.add(corpus_doc.doc_id)
    return docs
