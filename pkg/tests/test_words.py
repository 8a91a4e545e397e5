import pytest
from hypothesis import given
from hypothesis import strategies as st

from gbs_sep.errors import ParseError
from gbs_sep.words import GroupWord

syllables = st.lists(st.tuples(st.sampled_from(["t", "a", "g.x", "t.e1"]), st.integers(-4, 4)), max_size=10)


def test_parse_and_format():
    w = GroupWord.parse("t a^2 t^-1")
    assert w.syllables == (("t", 1), ("a", 2), ("t", -1))
    assert str(w) == "t a^2 t^-1"
    assert GroupWord.parse("t*a*a") == GroupWord.parse("t a^2")
    assert GroupWord.parse("  ") == GroupWord()
    assert GroupWord.parse("g.x^+3 t.e1") .syllables == (("g.x", 3), ("t.e1", 1))


def test_free_reduction():
    assert GroupWord.parse("a a^-1 t") == GroupWord.parse("t")
    assert GroupWord.parse("t a a^-1 t^-1") == GroupWord()
    assert len(GroupWord([("a", 0)])) == 0


@pytest.mark.parametrize("bad", ["a^", "a^x", "^2", "a^2^3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        GroupWord.parse(bad)


def test_unknown_generator():
    with pytest.raises(ParseError):
        GroupWord.parse("t b", ("t", "a"))


@given(syllables)
def test_roundtrip_and_inverse(syl):
    w = GroupWord(syl)
    assert GroupWord.parse(str(w)) == w
    assert w + w.inverse() == GroupWord()
    assert w.inverse().inverse() == w
