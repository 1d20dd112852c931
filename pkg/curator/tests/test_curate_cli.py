import subprocess
import sys

import pytest

from blacklist_curator.cli import main

RANKED = "Maier\t0.9\n##er\t0.6\nbei\t0.4\nSchmidt\t0.2\n"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "context.txt").write_text(
        "Der Assistent Sommer kam .\n", encoding="utf-8"
    )
    (tmp_path / "ranked.tsv").write_text(RANKED, encoding="utf-8")
    return tmp_path


def _curate_args(workdir, *extra):
    return [
        "--context", str(workdir / "context.txt"),
        "--mask-index", "1",
        "--suggestions", str(workdir / "ranked.tsv"),
        "--out", str(workdir / "reNames.txt"),
        *extra,
    ]


def test_curate_writes_filtered_pattern_file(capsys, workdir):
    code, out, err = _run(capsys, *_curate_args(workdir))
    assert code == 0
    assert err == ""
    assert "kept 2 of 4 suggestions" in out
    content = (workdir / "reNames.txt").read_text(encoding="utf-8")
    assert content == "Maier\nSchmidt\n"


def test_curate_honours_keep_and_min_len(capsys, workdir):
    code, _, _ = _run(
        capsys, *_curate_args(workdir, "--keep", "1", "--min-len", "3")
    )
    assert code == 0
    content = (workdir / "reNames.txt").read_text(encoding="utf-8")
    assert content == "Maier\n"


def test_missing_required_flag_is_a_usage_error(capsys, workdir):
    code, _, err = _run(capsys, "--context", str(workdir / "context.txt"))
    assert code == 1
    assert "error:" in err


def test_unknown_flag_is_a_usage_error(capsys, workdir):
    code, _, _ = _run(capsys, *_curate_args(workdir, "--frobnicate"))
    assert code == 1


def test_fixture_backend_requires_a_suggestion_file(capsys, workdir):
    args = _curate_args(workdir)
    del args[args.index("--suggestions"):args.index("--suggestions") + 2]
    code, _, err = _run(capsys, *args)
    assert code == 1
    assert "--suggestions" in err


def test_nonpositive_keep_is_a_usage_error(capsys, workdir):
    code, _, err = _run(capsys, *_curate_args(workdir, "--keep", "0"))
    assert code == 1
    assert "--keep" in err


def test_missing_suggestion_file_fails_cleanly(capsys, workdir):
    (workdir / "ranked.tsv").unlink()
    code, _, err = _run(capsys, *_curate_args(workdir))
    assert code == 2
    assert err.startswith("curate: ")


def test_malformed_fixture_fails_cleanly(capsys, workdir):
    (workdir / "ranked.tsv").write_text("Maier\thoch\n", encoding="utf-8")
    code, _, err = _run(capsys, *_curate_args(workdir))
    assert code == 2
    assert "'hoch'" in err


def test_out_of_range_mask_index_fails_cleanly(capsys, workdir):
    code, _, err = _run(
        capsys, *_curate_args(workdir)[:3] + ["99"]
        + _curate_args(workdir)[4:]
    )
    assert code == 2
    assert "out of range" in err


def test_nothing_surviving_reports_and_fails(capsys, workdir):
    (workdir / "ranked.tsv").write_text("bei\t0.4\n##er\t0.2\n",
                                        encoding="utf-8")
    code, _, err = _run(capsys, *_curate_args(workdir))
    assert code == 2
    assert "nothing to write" in err
    assert not (workdir / "reNames.txt").exists()


def test_unwritable_out_path_fails_cleanly(capsys, workdir):
    code, _, err = _run(
        capsys,
        *_curate_args(workdir)[:-1],
        str(workdir / "missing" / "reNames.txt"),
    )
    assert code == 2
    assert err.startswith("curate: ")


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "blacklist_curator.cli", "--help"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert "--mask-index" in result.stdout
