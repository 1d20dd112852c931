"""Command line front end: curate a masked-suggestion list into a file.

Exit codes: 0 success, 1 usage error, 2 anything else (bad fixture,
backend failure, unwritable output).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from blacklist_curator.suggest import (
    CuratorError,
    FixtureBackend,
    TransformersBackend,
    harvest_suggestions,
)
from blacklist_curator.wordlist import emit_pattern_file, filter_suggestions


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser():
    parser = _Parser(
        prog="curate",
        description=(
            "Collect ranked suggestions for a masked token position, "
            "filter them, and write a pattern resource file."
        ),
    )
    parser.add_argument(
        "--context", required=True, metavar="FILE",
        help="file holding the context sentence",
    )
    parser.add_argument(
        "--mask-index", required=True, type=int, metavar="N",
        help="0-based index of the token to mask",
    )
    parser.add_argument(
        "--top-k", type=int, default=30000, metavar="K",
        help="how many ranked suggestions to collect (default 30000)",
    )
    parser.add_argument(
        "--min-len", type=int, default=4, metavar="L",
        help="drop suggestions shorter than L characters (default 4)",
    )
    parser.add_argument(
        "--keep", type=int, default=5000, metavar="N",
        help="keep the first N surviving suggestions (default 5000)",
    )
    parser.add_argument(
        "--out", required=True, metavar="FILE",
        help="pattern resource file to write",
    )
    parser.add_argument(
        "--backend", choices=("fixture", "transformers"), default="fixture",
        help="suggestion source (default fixture)",
    )
    parser.add_argument(
        "--suggestions", metavar="FILE",
        help="ranked word<TAB>score list replayed by the fixture backend",
    )
    parser.add_argument(
        "--model", default="bert-base-german-cased", metavar="NAME",
        help="fill-mask model for the transformers backend",
    )
    return parser


def _make_backend(parser, args):
    if args.backend == "fixture":
        if not args.suggestions:
            parser.error("--backend fixture needs --suggestions")
        return FixtureBackend.from_tsv(args.suggestions)
    return TransformersBackend(model=args.model)


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        for flag in ("top_k", "min_len", "keep"):
            if getattr(args, flag) < 1:
                parser.error(
                    f"--{flag.replace('_', '-')} must be positive"
                )
        backend = _make_backend(parser, args)
        context = Path(args.context).read_text(encoding="utf-8").strip()
        batch = harvest_suggestions(
            context, args.mask_index, args.top_k, backend
        )
        words = filter_suggestions(
            batch, min_len=args.min_len, max_keep=args.keep
        )
        if not words:
            raise CuratorError(
                "no suggestions survived filtering; nothing to write"
            )
        emit_pattern_file(words, args.out)
        print(
            f"kept {len(words)} of {len(batch.suggestions)} suggestions, "
            f"wrote {args.out}"
        )
    except SystemExit as exc:
        return exc.code or 0
    except (CuratorError, ValueError, OSError) as exc:
        print(f"curate: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
