import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecumulants import io
from freecumulants.cumulants import cumulants_from_moments, moments_from_cumulants
from freecumulants.free import RDiagonalSpec
from freecumulants.verify import random_moments
from freecumulants.words import CumulantTable, MomentFunctional, parse_word

SAMPLE = {
    "order": 2,
    "alphabet": ["a"],
    "moments": [{"word": "a", "value": "1/2"}, {"word": "a a*", "value": "3"}],
    "default": "0",
}


def test_load_with_default():
    t = io.table_from_dict(SAMPLE)
    assert isinstance(t, MomentFunctional)
    assert t[parse_word("a")] == io.to_rational("1/2")
    assert t[parse_word("a* a")] == 0


def test_dump_is_canonical_and_stable(tmp_path):
    t = io.table_from_dict(SAMPLE)
    text = io.dumps_table(t)
    d = json.loads(text)
    assert [e["word"] for e in d["moments"]] == ["a", "a*", "a a", "a a*", "a* a", "a* a*"]
    assert "default" not in d
    path = tmp_path / "m.json"
    io.write_table(t, path)
    assert path.read_text() == text
    assert io.dumps_table(io.read_table(path)) == text


def test_cumulant_kind_round_trip():
    phi = io.table_from_dict(SAMPLE)
    k = cumulants_from_moments(phi)
    text = io.dumps_table(k)
    back = io.loads_table(text)
    assert isinstance(back, CumulantTable)
    assert io.dumps_table(back) == text
    assert io.dumps_table(moments_from_cumulants(back)) == io.dumps_table(phi)


def test_star_false_is_recorded():
    t = MomentFunctional(1, ["a", "b"], star=False, default=0)
    d = io.table_to_dict(t)
    assert d["star"] is False
    assert io.table_from_dict(d).star is False


@pytest.mark.parametrize(
    "bad",
    [
        [],
        {"order": 1, "alphabet": ["a"]},
        {"order": 1, "alphabet": ["a"], "moments": [], "cumulants": []},
        {"alphabet": ["a"], "moments": []},
        {"order": "1", "alphabet": ["a"], "moments": []},
        {"order": 1, "alphabet": "a", "moments": []},
        {"order": 1, "alphabet": ["a"], "moments": 3},
        {"order": 1, "alphabet": ["a"], "moments": [{"word": "a"}], "default": "0"},
        {"order": 1, "alphabet": ["a"], "moments": [{"word": "b", "value": "1"}], "default": "0"},
        {"order": 1, "alphabet": ["a"], "moments": [{"word": "a", "value": "0.5"}], "default": "0"},
        {"order": 1, "alphabet": ["a"], "moments": [{"word": "a", "value": "1"}]},
        {"order": 1, "alphabet": ["a"], "moments": [{"word": "a a", "value": "1"}], "default": "0"},
        {"order": 1, "alphabet": ["a"], "star": "no", "moments": [], "default": "0"},
        {
            "order": 1,
            "alphabet": ["a"],
            "moments": [{"word": "a", "value": "1"}, {"word": "a", "value": "2"}],
            "default": "0",
        },
    ],
)
def test_malformed_tables(bad):
    with pytest.raises(io.FormatError):
        io.table_from_dict(bad)


def test_invalid_json():
    with pytest.raises(io.FormatError):
        io.loads_table("{not json")


def test_spec_round_trip(tmp_path):
    spec = RDiagonalSpec(4, ["1", "-1/3"], ["2", "0"])
    path = tmp_path / "s.json"
    io.write_spec(spec, path)
    text = path.read_text()
    assert io.read_spec(path) == spec
    io.write_spec(io.read_spec(path), path)
    assert path.read_text() == text


@pytest.mark.parametrize(
    "bad",
    [
        {"order": 4, "alpha": ["1"]},
        {"order": 4, "alpha": ["1"], "beta": ["1", "0"]},
        {"order": 2, "alpha": ["x"], "beta": ["1"]},
    ],
)
def test_malformed_specs(bad):
    with pytest.raises(io.FormatError):
        io.spec_from_dict(bad)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.booleans())
def test_random_table_text_round_trip(seed, order, star):
    phi = random_moments(random.Random(seed), ["a", "b"], order, star=star)
    text = io.dumps_table(phi)
    assert io.dumps_table(io.loads_table(text)) == text
