import pathlib

import pytest
from hypothesis import settings

from temponym import load_rulepack

settings.register_profile("ci", derandomize=True, max_examples=60)
settings.load_profile("ci")

REPO = pathlib.Path(__file__).resolve().parents[1]
PACKS = REPO / "packs"
MINI = REPO / "corpus" / "mini"
DATA = pathlib.Path(__file__).resolve().parent / "data"

MINI_PATHS = [MINI / "chronik.txt", MINI / "amtsblatt.txt",
              MINI / "naturbuch.txt"]


@pytest.fixture(scope="session")
def base_pack():
    return load_rulepack(PACKS / "german-base")


@pytest.fixture(scope="session")
def ext_pack():
    return load_rulepack(PACKS / "german-ext")


@pytest.fixture
def pack_builder(tmp_path):
    """Write a throwaway pack directory and load it.

    patterns and norms map resource names to line lists; rules maps the
    rule-file stem to a list of raw rule lines.
    """

    def build(patterns=None, norms=None, rules=None, meta=None, load=True,
              **load_kwargs):
        root = tmp_path / "pack"
        for sub in ("patterns", "norms", "rules"):
            (root / sub).mkdir(parents=True, exist_ok=True)
        for name, alts in (patterns or {}).items():
            (root / "patterns" / f"{name}.txt").write_text(
                "\n".join(alts) + "\n", encoding="utf-8"
            )
        for name, pairs in (norms or {}).items():
            (root / "norms" / f"{name}.txt").write_text(
                "\n".join(f"{k},{v}" for k, v in pairs) + "\n",
                encoding="utf-8",
            )
        for stem, rule_lines in (rules or {}).items():
            (root / "rules" / f"{stem}.rules").write_text(
                "\n".join(rule_lines) + "\n", encoding="utf-8"
            )
        if meta:
            (root / "pack.meta").write_text(meta, encoding="utf-8")
        if not load:
            return root
        return load_rulepack(root, **load_kwargs)

    return build
