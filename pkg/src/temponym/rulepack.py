"""Rule-pack loading: directory layout, rule-line parsing, compilation.

A pack directory looks like::

    patterns/<name>.txt   one regex alternative per line
    norms/<name>.txt      key,value lines
    rules/<kind>.rules    kind in {date,time,duration,set,negative}
    pack.meta             optional name=... version=... lines

Rule lines carry quoted attributes::

    RULENAME="x" EXTRACTION="..." NORM_VALUE="..."

plus optional POS_CONSTRAINT="g:TAG[,g:TAG]", PRIORITY="n", NORM_FREQ,
NORM_QUANT, NORM_MOD, and a bare DISABLED_BY_DEFAULT flag. ``//`` starts a
comment line in every pack file. Loading interpolates and compiles every
extraction, parses every norm template, and fails loudly on anything
dangling, duplicated, cyclic, or oversized; unused resources are reported
as warnings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import PackError
from .interpolate import (
    DEFAULT_EXPANSION_LIMIT,
    Interpolator,
    find_references,
)
from .normalize import REL_FUNCTION, parse_template, template_issues

RULE_KINDS = ("date", "time", "duration", "set", "negative")

KIND_TO_TYPE = {
    "date": "DATE",
    "time": "TIME",
    "duration": "DURATION",
    "set": "SET",
    "negative": None,
}

_ATTR_RE = re.compile(r'([A-Z_]+)="([^"]*)"|(DISABLED_BY_DEFAULT)\b')

_KNOWN_ATTRS = {
    "RULENAME", "EXTRACTION", "NORM_VALUE", "NORM_FREQ", "NORM_QUANT",
    "NORM_MOD", "POS_CONSTRAINT", "PRIORITY",
}


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str
    extraction: str
    norm_value: str | None = None
    norm_freq: str | None = None
    norm_quant: str | None = None
    norm_mod: str | None = None
    pos_constraints: tuple[tuple[int, str], ...] = ()
    priority: int = 0
    enabled_by_default: bool = True
    source_path: str = ""
    source_line: int = 0

    @property
    def timex_type(self):
        return KIND_TO_TYPE[self.kind]

    @property
    def is_negative(self):
        return self.kind == "negative"

    @property
    def unqualified_name(self):
        return self.name.rsplit(":", 1)[-1]


@dataclass
class CompiledRule:
    rule: Rule
    pattern: re.Pattern
    value_template: list | None = None
    freq_template: list | None = None
    quant_template: list | None = None
    mod_template: list | None = None

    @property
    def name(self):
        return self.rule.name


@dataclass
class RulePack:
    name: str
    version: str
    root: Path
    pattern_resources: dict[str, list[str]]
    norm_resources: dict[str, dict[str, str]]
    rules: list[CompiledRule] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def rule_names(self):
        return [c.rule.name for c in self.rules]

    def negative_rule_names(self):
        return [c.rule.name for c in self.rules if c.rule.is_negative]

    def get_rule(self, name):
        for compiled in self.rules:
            if compiled.rule.name == name:
                return compiled
        return None


def rule_is_disabled(rule, disabled):
    """A disabled entry matches the full or the unqualified rule name."""
    return rule.name in disabled or rule.unqualified_name in disabled


def parse_rule_line(line, kind, path="<rules>", lineno=0):
    """Parse one rule line into a Rule; raises PackError on any defect."""
    attrs = {}
    disabled_flag = False
    pos = 0
    while pos < len(line):
        if line[pos].isspace():
            pos += 1
            continue
        m = _ATTR_RE.match(line, pos)
        if not m:
            raise PackError(
                f"unparseable rule text at column {pos + 1}: "
                f"{line[pos:pos + 30]!r}",
                path=path, line=lineno,
            )
        if m.group(3):
            if disabled_flag:
                raise PackError(
                    "repeated DISABLED_BY_DEFAULT", path=path, line=lineno
                )
            disabled_flag = True
        else:
            key = m.group(1)
            if key not in _KNOWN_ATTRS:
                raise PackError(
                    f"unknown rule attribute {key}", path=path, line=lineno
                )
            if key in attrs:
                raise PackError(
                    f"repeated rule attribute {key}", path=path, line=lineno
                )
            attrs[key] = m.group(2)
        pos = m.end()

    for required in ("RULENAME", "EXTRACTION"):
        if not attrs.get(required):
            raise PackError(
                f"rule line is missing {required}", path=path, line=lineno
            )
    if kind == "negative":
        if attrs.get("NORM_VALUE"):
            raise PackError(
                "negative rules must not carry a NORM_VALUE",
                path=path, line=lineno,
            )
        for key in ("NORM_FREQ", "NORM_QUANT", "NORM_MOD"):
            if attrs.get(key):
                raise PackError(
                    f"negative rules must not carry {key}",
                    path=path, line=lineno,
                )
    elif not attrs.get("NORM_VALUE"):
        raise PackError(
            "positive rules need a non-empty NORM_VALUE",
            path=path, line=lineno,
        )

    constraints = []
    if attrs.get("POS_CONSTRAINT"):
        for part in attrs["POS_CONSTRAINT"].split(","):
            piece = part.strip()
            m = re.fullmatch(r"(\d+):(\S+)", piece)
            if not m:
                raise PackError(
                    f"bad POS_CONSTRAINT entry {piece!r}; expected g:TAG",
                    path=path, line=lineno,
                )
            constraints.append((int(m.group(1)), m.group(2)))

    priority = 0
    if attrs.get("PRIORITY"):
        try:
            priority = int(attrs["PRIORITY"])
        except ValueError:
            raise PackError(
                f"bad PRIORITY {attrs['PRIORITY']!r}", path=path, line=lineno
            )

    return Rule(
        name=attrs["RULENAME"],
        kind=kind,
        extraction=attrs["EXTRACTION"],
        norm_value=attrs.get("NORM_VALUE") or None,
        norm_freq=attrs.get("NORM_FREQ") or None,
        norm_quant=attrs.get("NORM_QUANT") or None,
        norm_mod=attrs.get("NORM_MOD") or None,
        pos_constraints=tuple(constraints),
        priority=priority,
        enabled_by_default=not disabled_flag,
        source_path=str(path),
        source_line=lineno,
    )


def _content_lines(path):
    """(lineno, line) pairs with blanks and // comments removed."""
    out = []
    for lineno, raw in enumerate(
        path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        out.append((lineno, line))
    return out


def _read_pattern_file(path):
    alternatives = []
    seen = {}
    for lineno, line in _content_lines(path):
        if line in seen:
            raise PackError(
                f"duplicate alternative {line!r} (first at line "
                f"{seen[line]})",
                path=str(path), line=lineno,
            )
        seen[line] = lineno
        alternatives.append(line)
    if not alternatives:
        raise PackError("pattern resource is empty", path=str(path))
    return alternatives


def _read_norm_file(path):
    table = {}
    for lineno, line in _content_lines(path):
        if "," not in line:
            raise PackError(
                "norm line needs key,value", path=str(path), line=lineno
            )
        key, value = line.split(",", 1)
        key = key.strip()
        value = value.strip()
        if not key:
            raise PackError("empty norm key", path=str(path), line=lineno)
        if key in table:
            raise PackError(
                f"duplicate norm key {key!r}", path=str(path), line=lineno
            )
        table[key] = value
    if not table:
        raise PackError("norm resource is empty", path=str(path))
    return table


def _read_meta(path):
    meta = {}
    if not path.exists():
        return meta
    for lineno, line in _content_lines(path):
        if "=" not in line:
            raise PackError(
                "pack.meta line needs key=value", path=str(path), line=lineno
            )
        key, value = line.split("=", 1)
        meta[key.strip()] = value.strip()
    return meta


def _norm_calls(nodes):
    for node in nodes:
        if node[0] == "call":
            if node[1] != REL_FUNCTION:
                yield node[1]
            yield from _norm_calls(node[2])


def load_rulepack(path, expansion_limit=DEFAULT_EXPANSION_LIMIT):
    """Load, validate, and compile a rule pack directory."""
    root = Path(path)
    if not root.is_dir():
        raise PackError(f"rule pack directory not found: {root}")

    pattern_resources = {}
    patterns_dir = root / "patterns"
    if patterns_dir.is_dir():
        for fp in sorted(patterns_dir.glob("*.txt")):
            pattern_resources[fp.stem] = _read_pattern_file(fp)

    norm_resources = {}
    norms_dir = root / "norms"
    if norms_dir.is_dir():
        for fp in sorted(norms_dir.glob("*.txt")):
            norm_resources[fp.stem] = _read_norm_file(fp)

    rules_dir = root / "rules"
    if not rules_dir.is_dir():
        raise PackError(f"pack has no rules/ directory: {root}")
    for fp in rules_dir.glob("*.rules"):
        if fp.stem not in RULE_KINDS:
            raise PackError(
                f"unknown rule kind {fp.stem!r}; expected one of "
                f"{', '.join(RULE_KINDS)}",
                path=str(fp),
            )

    raw_rules = []
    for kind in RULE_KINDS:
        fp = rules_dir / f"{kind}.rules"
        if not fp.exists():
            continue
        for lineno, line in _content_lines(fp):
            raw_rules.append(parse_rule_line(line, kind, str(fp), lineno))
    if not raw_rules:
        raise PackError(f"pack defines no rules: {root}")

    seen_full = {}
    seen_short = {}
    for rule in raw_rules:
        for registry, key in (
            (seen_full, rule.name),
            (seen_short, rule.unqualified_name),
        ):
            if key in registry:
                raise PackError(
                    f"duplicate rule name {key!r} (also defined at "
                    f"{registry[key].source_path}:{registry[key].source_line})",
                    path=rule.source_path, line=rule.source_line,
                )
            registry[key] = rule

    interp = Interpolator(pattern_resources, limit=expansion_limit)

    # Expand and sanity-check every resource up front: broken regexes and
    # capturing groups are pack bugs even in resources no rule uses yet.
    for name in pattern_resources:
        fragment = interp.expand_resource(name)
        try:
            compiled = re.compile(fragment)
        except re.error as exc:
            raise PackError(f"pattern resource %{name} does not compile: {exc}")
        if compiled.groups:
            raise PackError(
                f"pattern resource %{name} contains capturing groups; "
                "use (?:...) instead"
            )

    compiled_rules = []
    for rule in raw_rules:
        where = {"path": rule.source_path, "line": rule.source_line}
        try:
            expanded = interp.interpolate(rule.extraction)
        except PackError as exc:
            raise type(exc)(f"rule {rule.name}: {exc}", **where)
        try:
            pattern = re.compile(expanded)
        except re.error as exc:
            raise PackError(
                f"rule {rule.name}: extraction does not compile: {exc}",
                **where,
            )
        for group, _tag in rule.pos_constraints:
            if not (1 <= group <= pattern.groups):
                raise PackError(
                    f"rule {rule.name}: POS_CONSTRAINT group {group} out of "
                    f"range; extraction has {pattern.groups} group(s)",
                    **where,
                )
        templates = {}
        for attr in ("norm_value", "norm_freq", "norm_quant", "norm_mod"):
            raw = getattr(rule, attr)
            if raw is None:
                templates[attr] = None
                continue
            try:
                nodes = parse_template(raw)
            except ValueError as exc:
                raise PackError(
                    f"rule {rule.name}: bad {attr.upper()} template: {exc}",
                    **where,
                )
            issues = template_issues(nodes, norm_resources, pattern.groups)
            if issues:
                raise PackError(
                    f"rule {rule.name}: {'; '.join(issues)}", **where
                )
            templates[attr] = nodes
        compiled_rules.append(
            CompiledRule(
                rule=rule,
                pattern=pattern,
                value_template=templates["norm_value"],
                freq_template=templates["norm_freq"],
                quant_template=templates["norm_quant"],
                mod_template=templates["norm_mod"],
            )
        )

    warnings = []
    used_patterns = set()
    stack = []
    for rule in raw_rules:
        stack.extend(find_references(rule.extraction))
    while stack:
        name = stack.pop()
        if name in used_patterns or name not in pattern_resources:
            continue
        used_patterns.add(name)
        for alt in pattern_resources[name]:
            stack.extend(find_references(alt))
    for name in sorted(pattern_resources):
        if name not in used_patterns:
            warnings.append(f"pattern resource %{name} is never referenced")

    used_norms = set()
    for compiled in compiled_rules:
        for nodes in (
            compiled.value_template,
            compiled.freq_template,
            compiled.quant_template,
            compiled.mod_template,
        ):
            if nodes is not None:
                used_norms.update(_norm_calls(nodes))
    for name in sorted(norm_resources):
        if name not in used_norms:
            warnings.append(f"norm resource {name} is never referenced")

    meta = _read_meta(root / "pack.meta")
    return RulePack(
        name=meta.get("name", root.name),
        version=meta.get("version", "0"),
        root=root,
        pattern_resources=pattern_resources,
        norm_resources=norm_resources,
        rules=compiled_rules,
        warnings=warnings,
    )
