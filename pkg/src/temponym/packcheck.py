"""Pack validation: structural checks, extension-class coverage, goldens.

Extension rules are named ``ext:<class>:<name>``. A pack that carries
any extension rules must populate every class: at least two rules each
for spelling, lexical, compound, and rule-ext, and at least one each for
negative and fix. Packs without extension rules skip the class checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError
from .matcher import match_document
from .preprocess import pipeline
from .rulepack import RULE_KINDS

EXT_PREFIX = "ext:"

EXT_CLASSES = ("spelling", "lexical", "compound", "rule-ext", "negative",
               "fix")

_CLASS_MINIMUM = {
    "spelling": 2,
    "lexical": 2,
    "compound": 2,
    "rule-ext": 2,
    "negative": 1,
    "fix": 1,
}


@dataclass
class PackManifest:
    name: str
    version: str
    rule_counts: dict = field(default_factory=dict)
    pattern_resources: int = 0
    norm_resources: int = 0
    ext_classes: dict = field(default_factory=dict)
    disabled_by_default: tuple = ()
    warnings: tuple = ()


def build_manifest(pack):
    rule_counts = {kind: 0 for kind in RULE_KINDS}
    ext_classes = {}
    disabled = []
    for compiled in pack.rules:
        rule = compiled.rule
        rule_counts[rule.kind] += 1
        if not rule.enabled_by_default:
            disabled.append(rule.name)
        if rule.name.startswith(EXT_PREFIX):
            parts = rule.name.split(":", 2)
            ext_class = parts[1] if len(parts) == 3 else ""
            ext_classes.setdefault(ext_class, []).append(rule.name)
    return PackManifest(
        name=pack.name,
        version=pack.version,
        rule_counts=rule_counts,
        pattern_resources=len(pack.pattern_resources),
        norm_resources=len(pack.norm_resources),
        ext_classes=ext_classes,
        disabled_by_default=tuple(disabled),
        warnings=tuple(pack.warnings),
    )


def validate_pack(pack, golden_cases=None):
    """Build the manifest and collect blocking issues (empty when sound).

    ``golden_cases`` defaults to the pack's own ``golden.tsv`` when
    present; pass an empty list to skip golden checks.
    """
    manifest = build_manifest(pack)
    issues = []

    for ext_class, names in sorted(manifest.ext_classes.items()):
        if ext_class not in EXT_CLASSES:
            for name in names:
                issues.append(
                    f"rule {name}: unknown extension class {ext_class!r}; "
                    f"expected one of {', '.join(EXT_CLASSES)}"
                )
    if manifest.ext_classes:
        for ext_class in EXT_CLASSES:
            have = len(manifest.ext_classes.get(ext_class, ()))
            need = _CLASS_MINIMUM[ext_class]
            if have >= need:
                continue
            if need == 1:
                issues.append(f"class {ext_class} unpopulated")
            else:
                issues.append(
                    f"class {ext_class} has {have} rule(s), needs at least "
                    f"{need}"
                )

    if golden_cases is None:
        golden_path = Path(pack.root) / "golden.tsv"
        if golden_path.is_file():
            golden_cases = load_golden(golden_path)
        else:
            golden_cases = []
    issues.extend(run_golden(pack, golden_cases))
    return manifest, issues


@dataclass(frozen=True)
class GoldenCase:
    text: str
    expected_type: str
    expected_value: str
    source_line: int = 0


def load_golden(path):
    """Read golden cases: ``text<TAB>type<TAB>value`` per line.

    An empty type marks a must-not-match case; an empty value accepts
    any value for the expected type.
    """
    cases = []
    content = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(content.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) != 3:
            raise InputError(
                f"expected 3 tab-separated fields, got {len(fields)}",
                str(path), lineno,
            )
        cases.append(GoldenCase(fields[0], fields[1], fields[2], lineno))
    return cases


def _describe(annotations):
    if not annotations:
        return "no matches"
    return "; ".join(
        f"{a.surface!r} -> {a.timex_type} {a.value} (rule {a.rule_name})"
        for a in annotations
    )


def run_golden(pack, cases, disabled=frozenset()):
    """Run each golden case through the pack; returns failure messages."""
    failures = []
    for case in cases:
        doc = pipeline(case.text)
        annotations = match_document(pack, doc, disabled=disabled)
        where = f"golden line {case.source_line}: {case.text!r}"
        if not case.expected_type:
            if annotations:
                failures.append(
                    f"{where}: expected no match, got {_describe(annotations)}"
                )
            continue
        hits = [a for a in annotations if a.timex_type == case.expected_type]
        if case.expected_value:
            hits = [a for a in hits if a.value == case.expected_value]
        if not hits:
            failures.append(
                f"{where}: expected {case.expected_type} "
                f"{case.expected_value or '<any>'}, got "
                f"{_describe(annotations)}"
            )
    return failures


def render_manifest(manifest):
    lines = [
        f"pack {manifest.name} version {manifest.version}",
        "rules: " + ", ".join(
            f"{kind}={count}"
            for kind, count in sorted(manifest.rule_counts.items())
        ),
        f"pattern resources: {manifest.pattern_resources}",
        f"norm resources: {manifest.norm_resources}",
    ]
    if manifest.ext_classes:
        lines.append(
            "extension classes: " + ", ".join(
                f"{c}={len(manifest.ext_classes[c])}"
                for c in sorted(manifest.ext_classes)
            )
        )
    if manifest.disabled_by_default:
        lines.append(
            "disabled by default: "
            + ", ".join(manifest.disabled_by_default)
        )
    for warning in manifest.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"
