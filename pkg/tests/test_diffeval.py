import pytest
from hypothesis import given, strategies as st

from temponym.diffeval import (
    DiffCounts,
    classify_pair,
    count_rows,
    diff_corpus,
    inspection_tsv,
    label_totals,
    novel_annotations,
    parse_inspection_tsv,
    sample_for_inspection,
)
from temponym.errors import InputError
from temponym.timex import Timex3Annotation


def _counts(a_spans, b_spans):
    rows = classify_pair(a_spans, b_spans)
    return count_rows(rows, len(a_spans), len(b_spans))


def _check_identities(c):
    assert c.total_a == (c.unchanged + c.missing + c.extended + c.reduced
                         + c.shifted)
    assert c.total_b == (c.unchanged + c.novel + c.extended + c.reduced
                         + c.shifted)


def _ann(begin, end, doc_text="x"):
    return Timex3Annotation(begin, end, doc_text[begin:end] or "x",
                            "DATE", "XXXX", rule_name="date_x")


def test_identical_spans_are_unchanged():
    rows = classify_pair([(2, 5)], [(2, 5)])
    assert rows == [("unchanged", (2, 5), (2, 5))]


def test_strict_containment_is_extended():
    assert classify_pair([(2, 5)], [(2, 7)])[0][0] == "extended"
    assert classify_pair([(2, 5)], [(0, 5)])[0][0] == "extended"
    assert classify_pair([(2, 5)], [(0, 7)])[0][0] == "extended"


def test_strict_containment_is_reduced():
    assert classify_pair([(2, 7)], [(2, 5)])[0][0] == "reduced"
    assert classify_pair([(0, 7)], [(2, 5)])[0][0] == "reduced"


def test_partial_overlap_is_shifted():
    assert classify_pair([(0, 4)], [(2, 6)])[0][0] == "shifted"


def test_unpaired_spans_are_missing_and_novel():
    rows = classify_pair([(0, 2)], [(5, 7)])
    assert ("missing", (0, 2), None) in rows
    assert ("novel", None, (5, 7)) in rows


def test_pairing_is_one_to_one():
    counts = _counts([(0, 10)], [(0, 3), (4, 10)])
    assert counts.reduced == 1
    assert counts.novel == 1
    assert counts.missing == 0
    _check_identities(counts)


def test_pairing_does_not_depend_on_side_order():
    # A span covering two opposite-side spans can only pair with one of
    # them; the same one must win no matter which side is called A.
    a = [(0, 4), (5, 8)]
    b = [(2, 9)]
    forward = _counts(a, b)
    backward = _counts(b, a)
    assert forward.shifted == backward.shifted == 1
    assert forward.missing == backward.novel == 1
    assert forward.novel == backward.missing == 0
    _check_identities(forward)
    _check_identities(backward)


def test_overlap_within_one_side_rejected():
    with pytest.raises(InputError) as exc:
        classify_pair([(0, 4), (2, 6)], [])
    assert "side A" in str(exc.value)
    with pytest.raises(InputError) as exc:
        classify_pair([], [(0, 4), (3, 6)])
    assert "side B" in str(exc.value)


def test_rows_are_ordered_by_position():
    rows = classify_pair([(10, 12), (0, 2)], [(0, 2), (20, 22)])
    positions = [min(s for s in row[1:] if s is not None) for row in rows]
    assert positions == sorted(positions)


def _all_span_sets(limit):
    spans = [(b, e) for b in range(limit) for e in range(b + 1, limit + 1)]
    sets = [[]]
    sets.extend([s] for s in spans)
    for first in spans:
        for second in spans:
            if first[1] <= second[0]:
                sets.append([first, second])
    return sets


def test_every_small_case_satisfies_the_count_identities():
    sets = _all_span_sets(4)
    for a in sets:
        for b in sets:
            forward = _counts(a, b)
            backward = _counts(b, a)
            _check_identities(forward)
            assert forward.unchanged == backward.unchanged
            assert forward.shifted == backward.shifted
            assert forward.extended == backward.reduced
            assert forward.missing == backward.novel
            assert forward.novel == backward.missing
            assert forward.total_a == backward.total_b


@st.composite
def span_sets(draw):
    pieces = draw(st.lists(
        st.tuples(st.integers(0, 3), st.integers(1, 5)), max_size=6
    ))
    spans = []
    pos = 0
    for gap, length in pieces:
        begin = pos + gap
        spans.append((begin, begin + length))
        pos = begin + length
    return spans


@given(a=span_sets(), b=span_sets())
def test_random_spans_satisfy_the_count_identities(a, b):
    forward = _counts(a, b)
    backward = _counts(b, a)
    _check_identities(forward)
    assert forward.unchanged == backward.unchanged
    assert forward.shifted == backward.shifted
    assert forward.extended == backward.reduced
    assert forward.missing == backward.novel
    assert forward.novel == backward.missing


@given(a=span_sets())
def test_diff_against_self_is_all_unchanged(a):
    counts = _counts(a, a)
    assert counts.unchanged == len(a)
    assert counts.total_a == counts.total_b == len(a)
    assert (counts.novel == counts.missing == counts.extended
            == counts.reduced == counts.shifted == 0)


def test_counts_add_fieldwise():
    left = DiffCounts(total_a=1, unchanged=1)
    right = DiffCounts(total_a=2, total_b=3, novel=3)
    merged = left + right
    assert merged.total_a == 3
    assert merged.total_b == 3
    assert merged.unchanged == 1
    assert merged.novel == 3


def test_diff_corpus_aggregates_per_sample():
    run_a = {
        "s1#d1": [_ann(0, 4)],
        "s1#d2": [_ann(0, 4)],
        "s2#d1": [],
    }
    run_b = {
        "s1#d1": [_ann(0, 4)],
        "s1#d2": [_ann(6, 9)],
        "s2#d1": [_ann(1, 3)],
    }
    report = diff_corpus(run_a, run_b)
    assert set(report.per_sample) == {"s1", "s2"}
    s1 = report.per_sample["s1"]
    assert s1.unchanged == 1 and s1.missing == 1 and s1.novel == 1
    assert report.per_sample["s2"].novel == 1
    total = report.total
    assert total.total_a == 2 and total.total_b == 3
    payload = report.as_dict()
    assert payload["total"] == total.as_dict()
    assert set(payload["per_doc"]) == set(run_a)


def test_diff_corpus_requires_matching_documents():
    with pytest.raises(InputError) as exc:
        diff_corpus({"s#a": []}, {"s#b": []})
    message = str(exc.value)
    assert "only in A: s#a" in message
    assert "only in B: s#b" in message


def test_novel_annotation_extraction():
    base = {"s#d": [_ann(0, 4)]}
    ext = {"s#d": [_ann(0, 4), _ann(10, 14)]}
    novel = novel_annotations(base, ext)
    assert [a.span for a in novel["s#d"]] == [(10, 14)]


def _population():
    text = "Im Winter 2013 war es kalt und im Sommer 2014 sehr warm."
    population = []
    for doc in ("s1#d1", "s1#d2", "s2#d1"):
        for begin, end in ((3, 14), (34, 45)):
            annotation = Timex3Annotation(
                begin, end, text[begin:end], "DATE", "2013",
                rule_name="date_x",
            )
            population.append((doc.split("#")[0], doc, text, annotation))
    return text, population


def test_sampling_is_reproducible():
    _, population = _population()
    first = sample_for_inspection(population, 4, seed=13)
    second = sample_for_inspection(population, 4, seed=13)
    assert first == second
    assert len(first) == 4
    keys = [(s.doc, s.begin, s.end) for s in first]
    assert keys == sorted(keys)


def test_sampling_rejects_oversized_requests():
    _, population = _population()
    with pytest.raises(InputError):
        sample_for_inspection(population, len(population) + 1, seed=13)


def test_sampling_window_clips_context():
    text, population = _population()
    picked = sample_for_inspection(population, 6, seed=1, window=5)
    for snippet in picked:
        assert snippet.surface == text[snippet.begin:snippet.end]
        assert snippet.left == text[max(0, snippet.begin - 5):snippet.begin]
        assert snippet.right == text[snippet.end:snippet.end + 5]
        assert snippet.label == ""


def test_inspection_tsv_round_trip():
    _, population = _population()
    picked = sample_for_inspection(population, 4, seed=13)
    parsed = parse_inspection_tsv(inspection_tsv(picked))
    assert parsed == picked


def test_labels_parse_case_insensitively():
    _, population = _population()
    picked = sample_for_inspection(population, 2, seed=13)
    content = inspection_tsv(picked)
    lines = content.splitlines()
    lines[1] += "TRUE"
    lines[2] += "false"
    parsed = parse_inspection_tsv("\n".join(lines) + "\n")
    assert [s.label for s in parsed] == ["true", "false"]
    combined = {"true": 0, "false": 0, "unlabeled": 0}
    for counts in label_totals(parsed).values():
        for key, value in counts.items():
            combined[key] += value
    assert combined == {"true": 1, "false": 1, "unlabeled": 0}


def test_bad_label_rejected():
    _, population = _population()
    content = inspection_tsv(sample_for_inspection(population, 1, seed=13))
    lines = content.splitlines()
    lines[1] += "maybe"
    with pytest.raises(InputError) as exc:
        parse_inspection_tsv("\n".join(lines) + "\n", path="labels.tsv")
    assert "labels.tsv:2" in str(exc.value)


def test_missing_header_rejected():
    with pytest.raises(InputError):
        parse_inspection_tsv("not\ta\theader\n")


def test_non_integer_span_rejected():
    _, population = _population()
    content = inspection_tsv(sample_for_inspection(population, 1, seed=13))
    lines = content.splitlines()
    fields = lines[1].split("\t")
    fields[2] = "three"
    lines[1] = "\t".join(fields)
    with pytest.raises(InputError):
        parse_inspection_tsv("\n".join(lines) + "\n")
