"""Pattern-resource interpolation.

Extraction templates reference pattern resources as ``%name``. Each
reference expands to a non-capturing alternation ``(?:a|b|...)`` of the
resource's alternatives, ordered longest-first (ties lexicographic) so the
regex engine prefers longer matches. Alternatives may themselves contain
``%other`` references; expansion runs to a fixpoint and must be acyclic.
"""

from __future__ import annotations

import re

from .errors import (
    DanglingReferenceError,
    PackError,
    ResourceCycleError,
    ResourceLimitError,
)

_REF_RE = re.compile(r"%([A-Za-z_][A-Za-z0-9_]*)")

DEFAULT_EXPANSION_LIMIT = 1 << 20  # 1 MiB of expanded pattern text


def find_references(template):
    """Names of the pattern resources referenced by a template."""
    return [m.group(1) for m in _REF_RE.finditer(template)]


def _check_no_toplevel_bar(alternative, resource_name):
    # A bare | would leak into the surrounding alternation and change its
    # meaning; authors must put such variants on separate lines.
    depth = 0
    i = 0
    while i < len(alternative):
        ch = alternative[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|" and depth <= 0:
            raise PackError(
                f"resource {resource_name}: alternative {alternative!r} "
                "contains a top-level '|'; split it into separate lines"
            )
        i += 1


class Interpolator:
    """Expands templates against a fixed set of pattern resources."""

    def __init__(self, resources, limit=DEFAULT_EXPANSION_LIMIT):
        self.resources = resources
        self.limit = limit
        self._cache = {}
        self._active = []

    def expand_resource(self, name):
        if name in self._cache:
            return self._cache[name]
        if name in self._active:
            chain = " -> ".join(self._active + [name])
            raise ResourceCycleError(f"pattern resources form a cycle: {chain}")
        if name not in self.resources:
            raise DanglingReferenceError(f"unknown pattern resource %{name}")
        self._active.append(name)
        try:
            expanded = [self.interpolate(alt) for alt in self.resources[name]]
        finally:
            self._active.pop()
        for alt in expanded:
            _check_no_toplevel_bar(alt, name)
        expanded.sort(key=lambda s: (-len(s), s))
        fragment = "(?:" + "|".join(expanded) + ")"
        self._check_limit(fragment, f"resource %{name}")
        self._cache[name] = fragment
        return fragment

    def interpolate(self, template):
        result = _REF_RE.sub(
            lambda m: self.expand_resource(m.group(1)), template
        )
        self._check_limit(result, "pattern")
        return result

    def _check_limit(self, text, what):
        size = len(text.encode("utf-8"))
        if size > self.limit:
            raise ResourceLimitError(
                f"{what} expands to {size} bytes, over the limit of "
                f"{self.limit}; split the resource list into smaller "
                "resources and reference only what each rule needs"
            )


def interpolate(template, resources, limit=DEFAULT_EXPANSION_LIMIT):
    """One-shot expansion of ``template`` against ``resources``."""
    return Interpolator(resources, limit=limit).interpolate(template)
