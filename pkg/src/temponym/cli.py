"""Command-line interface.

Subcommands: tag, diff, stats, probe, sample, label-import, validate.
Exit codes: 0 on success, 1 on usage errors, 2 on rule-pack errors,
3 on input errors. Anchoring only ever comes from --dct or from input
metadata, never from the system clock.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import INPUT_FORMATS, load_corpus
from .diffeval import (
    diff_corpus,
    diff_table,
    corpus_stats,
    inspection_tsv,
    label_table,
    label_totals,
    novel_annotations,
    parse_inspection_tsv,
    sample_for_inspection,
    stats_table,
)
from .errors import InputError, PackError, TemponymError
from .harvest import (
    DictionaryClient,
    parse_timeml,
    probe_expressions,
    render_probe_report,
    translate_expressions,
)
from .matcher import match_document
from .output import format_table, parse_records, render_inline, render_records
from .packcheck import render_manifest, validate_pack
from .preprocess import parse_dct
from .rulepack import load_rulepack

PACKS_ENV = "TEMPONYM_PACKS"


@dataclass
class RunConfig:
    pack: str = ""
    input_format: str = "plain"
    dct: object = None
    disabled: frozenset = frozenset()
    enabled: frozenset = frozenset()
    output: str = "records"
    workers: int = 1
    seed: int = 13
    sample_size: int = 25


def default_packs_root():
    override = os.environ.get(PACKS_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parents[2] / "packs"


def resolve_pack_path(name_or_path):
    """A pack argument is a directory path or a name under the packs root."""
    direct = Path(name_or_path)
    if direct.is_dir():
        return direct
    named = default_packs_root() / name_or_path
    if named.is_dir():
        return named
    raise PackError(
        f"pack {name_or_path!r} not found (not a directory, and not under "
        f"{default_packs_root()})"
    )


def load_named_pack(name_or_path):
    return load_rulepack(resolve_pack_path(name_or_path))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_dct_arg(parser, value):
    if value is None:
        return None
    try:
        return parse_dct(value)
    except InputError as exc:
        parser.error(str(exc))


def _tag_run(pack, docs, disabled, enabled, workers):
    def one(corpus_doc):
        return (
            corpus_doc.doc_id,
            match_document(
                pack, corpus_doc.document, disabled=disabled, enabled=enabled
            ),
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(one, docs))
    else:
        pairs = [one(corpus_doc) for corpus_doc in docs]
    return dict(pairs)


def _cmd_tag(parser, args):
    config = RunConfig(
        pack=args.pack,
        input_format=args.input_format,
        dct=_parse_dct_arg(parser, args.dct),
        disabled=frozenset(args.disable_rule),
        enabled=frozenset(args.enable_rule),
        output=args.output,
        workers=args.workers,
    )
    pack = load_named_pack(config.pack)
    docs = load_corpus(args.inputs, config.input_format, config.dct)
    run = _tag_run(pack, docs, config.disabled, config.enabled,
                   config.workers)
    if config.output == "records":
        text = render_records(run)
    else:
        text = "\n".join(
            render_inline(cd.doc_id, cd.document.text, run[cd.doc_id])
            for cd in docs
        )
        text += "\n" if text else ""
    _emit(text, args.out)
    return 0


def _cmd_diff(parser, args):
    from_records = args.records_a is not None or args.records_b is not None
    if from_records:
        if not (args.records_a and args.records_b) or args.pack_a or \
                args.pack_b or args.inputs:
            parser.error(
                "--records-a/--records-b replace packs and inputs"
            )
        run_a = parse_records(
            Path(args.records_a).read_text(encoding="utf-8"), args.records_a
        )
        run_b = parse_records(
            Path(args.records_b).read_text(encoding="utf-8"), args.records_b
        )
    else:
        if not (args.pack_a and args.pack_b) or not args.inputs:
            parser.error(
                "diff needs --pack-a, --pack-b, and inputs, or two "
                "--records files"
            )
        dct = _parse_dct_arg(parser, args.dct)
        docs = load_corpus(args.inputs, args.input_format, dct)
        run_a = _tag_run(load_named_pack(args.pack_a), docs, frozenset(),
                         frozenset(), args.workers)
        run_b = _tag_run(load_named_pack(args.pack_b), docs, frozenset(),
                         frozenset(), args.workers)
    report = diff_corpus(run_a, run_b)
    if args.json:
        Path(args.json).write_text(
            json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    _emit(format_table(*diff_table(report)) + "\n", args.out)
    return 0


def _cmd_stats(parser, args):
    docs = load_corpus(args.inputs, args.input_format, None)
    _emit(format_table(*stats_table(corpus_stats(docs))) + "\n", args.out)
    return 0


def _read_expressions(args):
    expressions = []
    for path in args.inputs:
        content = Path(path).read_text(encoding="utf-8")
        if args.timeml:
            expressions.extend(
                g.surface for g in parse_timeml(content, source=str(path))
            )
        else:
            expressions.extend(
                line.strip()
                for line in content.splitlines()
                if line.strip() and not line.startswith("#")
            )
    return expressions


def _cmd_probe(parser, args):
    pack = load_named_pack(args.pack)
    expressions = _read_expressions(args)
    lines = []
    if args.translate_dict:
        client = DictionaryClient.from_tsv(
            Path(args.translate_dict).read_text(encoding="utf-8"),
            args.translate_dict,
        )
        outcomes = translate_expressions(expressions, client)
        expressions = [o.target for o in outcomes]
        for o in outcomes:
            if o.error is not None:
                lines.append(f"TRANSLATE-ERROR\t{o.source}\t{o.error}")
            elif not o.translated:
                lines.append(f"UNTRANSLATED\t{o.source}")
    report = probe_expressions(
        pack, expressions, disabled=frozenset(args.disable_rule)
    )
    prefix = "\n".join(lines) + "\n" if lines else ""
    _emit(prefix + render_probe_report(report), args.out)
    return 0


def _cmd_sample(parser, args):
    pack = load_named_pack(args.pack)
    dct = _parse_dct_arg(parser, args.dct)
    docs = load_corpus(args.inputs, args.input_format, dct)
    run = _tag_run(pack, docs, frozenset(args.disable_rule), frozenset(),
                   args.workers)
    if args.novel_vs:
        base_run = _tag_run(load_named_pack(args.novel_vs), docs,
                            frozenset(), frozenset(), args.workers)
        run = novel_annotations(base_run, run)
    population = [
        (cd.sample, cd.doc_id, cd.document.text, annotation)
        for cd in docs
        for annotation in run[cd.doc_id]
    ]
    samples = sample_for_inspection(population, args.n, args.seed,
                                    window=args.window)
    _emit(inspection_tsv(samples), args.out)
    return 0


def _cmd_label_import(parser, args):
    content = Path(args.labels).read_text(encoding="utf-8")
    samples = parse_inspection_tsv(content, args.labels)
    _emit(format_table(*label_table(label_totals(samples))) + "\n", args.out)
    return 0


def _cmd_validate(parser, args):
    pack = load_named_pack(args.pack)
    manifest, issues = validate_pack(pack)
    _emit(render_manifest(manifest), args.out)
    if issues:
        for issue in issues:
            print(f"error: {issue}", file=sys.stderr)
        return 2
    return 0


def _add_common(sub, inputs=True, pack=True):
    if pack:
        sub.add_argument("--pack", required=True,
                         help="pack directory or name under the packs root")
    if inputs:
        sub.add_argument("inputs", nargs="+", metavar="INPUT",
                         help="input files")
        sub.add_argument("--input-format", choices=INPUT_FORMATS,
                         default="plain")


def build_parser():
    parser = _Parser(prog="temponym",
                     description="German temporal expression tagging")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    tag = sub.add_parser("tag", help="annotate documents")
    _add_common(tag)
    tag.add_argument("--dct", help="document creation time, YYYY-MM-DD")
    tag.add_argument("--disable-rule", action="append", default=[],
                     metavar="RULE")
    tag.add_argument("--enable-rule", action="append", default=[],
                     metavar="RULE")
    tag.add_argument("--output", choices=("records", "inline"),
                     default="records")
    tag.add_argument("--workers", type=int, default=1)
    tag.add_argument("--out", help="write output to this file")
    tag.set_defaults(func=_cmd_tag)

    diff = sub.add_parser("diff", help="compare two annotation runs")
    diff.add_argument("inputs", nargs="*", metavar="INPUT")
    diff.add_argument("--input-format", choices=INPUT_FORMATS,
                      default="plain")
    diff.add_argument("--pack-a")
    diff.add_argument("--pack-b")
    diff.add_argument("--records-a")
    diff.add_argument("--records-b")
    diff.add_argument("--dct")
    diff.add_argument("--workers", type=int, default=1)
    diff.add_argument("--json", help="also write a JSON report here")
    diff.add_argument("--out")
    diff.set_defaults(func=_cmd_diff)

    stats = sub.add_parser("stats", help="corpus size per sample")
    _add_common(stats, pack=False)
    stats.add_argument("--out")
    stats.set_defaults(func=_cmd_stats)

    probe = sub.add_parser("probe",
                           help="try expressions one sentence at a time")
    _add_common(probe)
    probe.add_argument("--timeml", action="store_true",
                       help="inputs are TimeML files; probe their TIMEX3 "
                            "surfaces")
    probe.add_argument("--translate-dict",
                       help="TSV phrase table applied before probing")
    probe.add_argument("--disable-rule", action="append", default=[],
                       metavar="RULE")
    probe.add_argument("--out")
    probe.set_defaults(func=_cmd_probe)

    sample = sub.add_parser("sample",
                            help="draw annotation contexts for inspection")
    _add_common(sample)
    sample.add_argument("--dct")
    sample.add_argument("--disable-rule", action="append", default=[],
                        metavar="RULE")
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--seed", type=int, default=13)
    sample.add_argument("--window", type=int, default=60)
    sample.add_argument("--novel-vs", metavar="PACK",
                        help="restrict to annotations absent under this pack")
    sample.add_argument("--workers", type=int, default=1)
    sample.add_argument("--out")
    sample.set_defaults(func=_cmd_sample)

    label_import = sub.add_parser("label-import",
                                  help="summarize labeled inspection rows")
    label_import.add_argument("labels", metavar="LABELS_TSV")
    label_import.add_argument("--out")
    label_import.set_defaults(func=_cmd_label_import)

    validate = sub.add_parser("validate", help="check a pack and its goldens")
    validate.add_argument("pack", metavar="PACK")
    validate.add_argument("--out")
    validate.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(parser, args)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    except PackError as exc:
        print(f"temponym: pack error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"temponym: input error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"temponym: input error: {exc}", file=sys.stderr)
        return 3
    except TemponymError as exc:
        print(f"temponym: pack error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
