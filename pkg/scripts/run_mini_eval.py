#!/usr/bin/env python3
"""Compare the base and extended packs over the bundled mini corpus.

Prints the corpus stats, the diff table, and the novel annotations the
extended pack contributes, using only the public package surface.
"""

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from temponym import load_corpus, load_rulepack, match_document
from temponym.diffeval import (
    corpus_stats,
    diff_corpus,
    diff_table,
    novel_annotations,
    stats_table,
)
from temponym.output import format_table


def main():
    inputs = sorted((REPO / "corpus" / "mini").glob("*.txt"))
    docs = load_corpus([str(p) for p in inputs])
    print(format_table(*stats_table(corpus_stats(docs))))
    print()

    base = load_rulepack(REPO / "packs" / "german-base")
    ext = load_rulepack(REPO / "packs" / "german-ext")
    run_a = {cd.doc_id: match_document(base, cd.document) for cd in docs}
    run_b = {cd.doc_id: match_document(ext, cd.document) for cd in docs}
    report = diff_corpus(run_a, run_b)
    print(format_table(*diff_table(report)))
    print()

    print("novel annotations under the extended pack:")
    for doc_id, annotations in sorted(novel_annotations(run_a, run_b).items()):
        for a in annotations:
            print(f"  {doc_id}  {a.surface!r}  {a.timex_type}  {a.value}"
                  f"  ({a.rule_name})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
