"""TIMEX3-style annotation records."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NormalizationError
from .normalize import is_valid_value

TIMEX_TYPES = ("DATE", "TIME", "DURATION", "SET")


@dataclass(frozen=True)
class Timex3Annotation:
    """One recognized temporal expression, spans in normalized-text offsets."""

    begin: int
    end: int
    surface: str
    timex_type: str
    value: str
    freq: str | None = None
    quant: str | None = None
    mod: str | None = None
    rule_name: str = ""

    def __post_init__(self):
        if not (0 <= self.begin < self.end):
            raise NormalizationError(
                f"rule {self.rule_name}: empty or negative span "
                f"[{self.begin},{self.end})"
            )
        if self.timex_type not in TIMEX_TYPES:
            raise NormalizationError(
                f"rule {self.rule_name}: bad timex type {self.timex_type!r}"
            )
        if not is_valid_value(self.value):
            raise NormalizationError(
                f"rule {self.rule_name}: value {self.value!r} violates the "
                "value grammar"
            )
        if self.timex_type == "SET" and not (self.value or self.freq):
            raise NormalizationError(
                f"rule {self.rule_name}: SET needs a value or a freq"
            )

    @property
    def span(self):
        return (self.begin, self.end)

    def to_record(self, doc=""):
        """Plain-dict form used by the standoff record stream."""
        return {
            "doc": doc,
            "begin": self.begin,
            "end": self.end,
            "surface": self.surface,
            "type": self.timex_type,
            "value": self.value,
            "freq": self.freq,
            "quant": self.quant,
            "mod": self.mod,
            "rule_name": self.rule_name,
        }

    @classmethod
    def from_record(cls, record):
        return cls(
            begin=record["begin"],
            end=record["end"],
            surface=record["surface"],
            timex_type=record["type"],
            value=record["value"],
            freq=record.get("freq"),
            quant=record.get("quant"),
            mod=record.get("mod"),
            rule_name=record.get("rule_name", ""),
        )
