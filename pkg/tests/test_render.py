import pytest

from dyckmaps import NotBilateralError, parse_word, render_ascii


def test_render_single_peak():
    assert render_ascii(parse_word("UD")) == "/\\\n--"


def test_render_two_level_hill():
    assert render_ascii(parse_word("UUDD")) == " /\\\n/  \\\n----"


def test_render_crossing_word():
    # one row above the axis, the axis rule, one row below
    assert render_ascii(parse_word("UDDU")) == "/\\\n----\n  \\/"


def test_render_negative_word():
    assert render_ascii(parse_word("DU")) == "--\n\\/"


def test_render_empty():
    assert render_ascii(parse_word("")) == ""


def test_render_block_height():
    w = parse_word("UUDDUDDUUD")
    block = render_ascii(w)
    rows = block.splitlines()
    glyph_rows = [r for r in rows if set(r) - {"-"}]
    assert len(glyph_rows) == w.max_height - w.min_height
    axis_rows = [r for r in rows if r and not (set(r) - {"-"})]
    assert axis_rows == ["-" * len(w)]
    # one glyph per step overall
    assert sum(r.count("/") + r.count("\\") for r in rows) == len(w)


def test_render_rejects_open_words():
    with pytest.raises(NotBilateralError):
        render_ascii(parse_word("UUD"))
