import datetime
import re

import pytest
from hypothesis import given, strategies as st

from temponym.errors import NormalizationError
from temponym.normalize import (
    evaluate_template,
    is_valid_value,
    parse_relative,
    parse_template,
    resolve_relative,
    template_issues,
    unanchored_value,
)

GOOD_VALUES = [
    "2016",
    "2016-08",
    "2016-08-22",
    "2016-08-22T09:30",
    "2016-Q3",
    "2016-QX",
    "2016-SP",
    "2016-SU",
    "2016-FA",
    "2016-WI",
    "XXXX",
    "XXXX-WI",
    "XXXX-XX",
    "XXXX-XX-XX",
    "XXXX-XX-XXTXX:XX",
    "P1D",
    "P10Y",
    "P3W",
    "PXY",
    "PXXM",
    "PT2H",
    "PT30M",
    "PTXH",
    "PRESENT_REF",
    "PAST_REF",
    "FUTURE_REF",
    "UNDEF-2016-08-22",
    "UNDEF-XXXX",
    "UNDEF-XXXX-XX-XX",
]

BAD_VALUES = [
    "",
    "16",
    "2016-8",
    "2016-08-2",
    "2016-08-22T9:30",
    "2016-Q5",
    "2016-SP-01",
    "P1.5Y",
    "P1H",
    "PT1D",
    "P-1D",
    "PD",
    "UNDEF",
    "UNDEF-",
    "present_ref",
    "Sommer",
    "2016-08-22 09:30",
]


@pytest.mark.parametrize("value", GOOD_VALUES)
def test_value_grammar_accepts(value):
    assert is_valid_value(value)


@pytest.mark.parametrize("value", BAD_VALUES)
def test_value_grammar_rejects(value):
    assert not is_valid_value(value)


# dct below is a Saturday; the shift cases were worked out by hand on a
# printed calendar and frozen here.
DCT = datetime.date(2013, 12, 7)

RESOLVED = [
    ("day+0", "2013-12-07"),
    ("day+1", "2013-12-08"),
    ("day-1", "2013-12-06"),
    ("day+2", "2013-12-09"),
    ("day-2", "2013-12-05"),
    ("day+31", "2014-01-07"),
    ("year-1", "2012"),
    ("year+1", "2014"),
    ("month+1", "2014-01"),
    ("month-1", "2013-11"),
    ("month-11", "2013-01"),
    ("month-12", "2012-12"),
    ("prev-wd:saturday", "2013-11-30"),
    ("next-wd:saturday", "2013-12-14"),
    ("prev-wd:friday", "2013-12-06"),
    ("next-wd:sunday", "2013-12-08"),
    ("prev-wd:sonntag", "2013-12-01"),
    ("next-wd:montag", "2013-12-09"),
    ("heute", "2013-12-07"),
    ("morgen", "2013-12-08"),
    ("gestern", "2013-12-06"),
    ("übermorgen", "2013-12-09"),
    ("vorgestern", "2013-12-05"),
    ("Vorjahr", "2012"),
    ("Folgejahr", "2014"),
    ("vorheriger Freitag", "2013-12-06"),
    ("kommenden Montag", "2013-12-09"),
    ("nun", "PRESENT_REF"),
    ("damals", "PAST_REF"),
    ("künftig", "FUTURE_REF"),
]


@pytest.mark.parametrize("spec,expected", RESOLVED)
def test_resolve_relative_frozen_cases(spec, expected):
    assert resolve_relative(spec, DCT) == expected


def test_resolve_across_leap_day():
    assert resolve_relative("day-1", datetime.date(2016, 3, 1)) == "2016-02-29"
    assert resolve_relative("day-1", datetime.date(2015, 3, 1)) == "2015-02-28"
    assert resolve_relative("day+1", datetime.date(2016, 2, 28)) == "2016-02-29"


def test_month_shift_needs_no_day_clamping():
    assert resolve_relative("month+1", datetime.date(2016, 1, 31)) == "2016-02"


def test_weekday_resolution_is_strict():
    # Same weekday as dct means a full week away, never dct itself.
    monday = datetime.date(2013, 12, 2)
    assert resolve_relative("prev-wd:monday", monday) == "2013-11-25"
    assert resolve_relative("next-wd:monday", monday) == "2013-12-09"


def test_refs_resolve_without_dct():
    assert resolve_relative("nun", None) == "PRESENT_REF"
    assert resolve_relative("present", None) == "PRESENT_REF"


def test_shift_without_dct_raises():
    with pytest.raises(ValueError):
        resolve_relative("day+1", None)


@pytest.mark.parametrize("bad", [
    "fortnight+1", "day+", "prev-wd:caturday", "letzten Sommer", "", "later",
])
def test_unknown_specs_raise(bad):
    with pytest.raises(ValueError):
        parse_relative(bad)


def test_unanchored_placeholders():
    assert unanchored_value("day+1") == "UNDEF-XXXX-XX-XX"
    assert unanchored_value("heute") == "UNDEF-XXXX-XX-XX"
    assert unanchored_value("prev-wd:friday") == "UNDEF-XXXX-XX-XX"
    assert unanchored_value("month-1") == "UNDEF-XXXX-XX"
    assert unanchored_value("Vorjahr") == "UNDEF-XXXX"
    assert unanchored_value("nun") == "PRESENT_REF"


@given(
    year=st.integers(min_value=1901, max_value=2199),
    month=st.integers(min_value=1, max_value=12),
)
def test_twelve_months_equal_one_year(year, month):
    dct = datetime.date(year, month, 15)
    assert resolve_relative("month+12", dct) == f"{year + 1:04d}-{month:02d}"
    assert resolve_relative("month-12", dct) == f"{year - 1:04d}-{month:02d}"


@given(
    ordinal=st.integers(
        min_value=datetime.date(1950, 1, 1).toordinal(),
        max_value=datetime.date(2150, 1, 1).toordinal(),
    ),
    n=st.integers(min_value=-400, max_value=400),
)
def test_month_shift_round_trips(ordinal, n):
    dct = datetime.date.fromordinal(ordinal)
    year, month = map(int, resolve_relative(f"month{n:+d}", dct).split("-"))
    back = resolve_relative(f"month{-n:+d}", datetime.date(year, month, 1))
    assert back == f"{dct.year:04d}-{dct.month:02d}"


@given(
    ordinal=st.integers(
        min_value=datetime.date(1950, 1, 1).toordinal(),
        max_value=datetime.date(2150, 1, 1).toordinal(),
    ),
    target=st.sampled_from(sorted(
        ["monday", "tuesday", "wednesday", "thursday", "friday",
         "saturday", "sunday"]
    )),
)
def test_weekday_resolution_lands_on_target(ordinal, target):
    names = ["monday", "tuesday", "wednesday", "thursday", "friday",
             "saturday", "sunday"]
    dct = datetime.date.fromordinal(ordinal)
    before = datetime.date.fromisoformat(
        resolve_relative(f"prev-wd:{target}", dct)
    )
    after = datetime.date.fromisoformat(
        resolve_relative(f"next-wd:{target}", dct)
    )
    assert names[before.weekday()] == target
    assert names[after.weekday()] == target
    assert 1 <= (dct - before).days <= 7
    assert 1 <= (after - dct).days <= 7


def test_template_parses_literals_groups_and_calls():
    nodes = parse_template("XXXX-%normSeasons(group(1))")
    assert nodes == [
        ("lit", "XXXX-"),
        ("call", "normSeasons", [("group", 1)]),
    ]


def test_template_parses_nested_calls():
    nodes = parse_template("%outer(%inner(group(2))x)")
    assert nodes == [
        ("call", "outer", [
            ("call", "inner", [("group", 2)]),
            ("lit", "x"),
        ]),
    ]


def test_template_stray_percent_rejected():
    with pytest.raises(ValueError):
        parse_template("100% sure")


def test_template_unterminated_call_rejected():
    with pytest.raises(ValueError):
        parse_template("%normSeasons(group(1)")


def test_template_issue_reporting():
    nodes = parse_template("%normMissing(group(3))")
    issues = template_issues(nodes, {"normSeasons": {}}, 1)
    assert any("normMissing" in issue for issue in issues)
    assert any("group(3)" in issue for issue in issues)
    assert template_issues(parse_template("%REL(heute)"), {}, 0) == []


def _eval(template, pattern, text, resources=None, dct=None):
    match = re.match(pattern, text)
    assert match
    return evaluate_template(
        parse_template(template), match, resources or {}, dct, "r"
    )


def test_evaluate_table_lookup():
    value = _eval("XXXX-%normSeasons(group(1))", r"(Winter)", "Winter",
                  {"normSeasons": {"Winter": "WI"}})
    assert value == "XXXX-WI"


def test_evaluate_missing_key_raises():
    with pytest.raises(NormalizationError) as exc:
        _eval("%normSeasons(group(1))", r"(Herbst)", "Herbst",
              {"normSeasons": {"Winter": "WI"}})
    assert "Herbst" in str(exc.value)


def test_evaluate_unmatched_group_raises():
    with pytest.raises(NormalizationError):
        _eval("group(1)", r"(?:(a)|b)", "b")


def test_evaluate_rel_with_dct():
    assert _eval("%REL(day+1)", r"x", "x", dct=DCT) == "2013-12-08"


def test_evaluate_rel_without_dct_uses_placeholder():
    assert _eval("%REL(day+1)", r"x", "x") == "UNDEF-XXXX-XX-XX"
    assert _eval("%REL(nun)", r"x", "x") == "PRESENT_REF"


def test_evaluate_rel_through_lookup():
    value = _eval("%REL(%normDayRel(group(1)))", r"(heute)", "heute",
                  {"normDayRel": {"heute": "day+0"}}, dct=DCT)
    assert value == "2013-12-07"


def test_evaluate_rel_bad_spec_raises():
    with pytest.raises(NormalizationError):
        _eval("%REL(group(1))", r"(blah)", "blah", dct=DCT)
