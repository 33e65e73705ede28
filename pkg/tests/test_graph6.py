import pytest
from hypothesis import given

from dimdist.graph import complete, empty, petersen
from dimdist.graph6 import (
    EmptyInput, InvalidCharacter, MalformedHeader, TrailingGarbage, TruncatedBody,
    decode, encode, read_file, write_file,
)
from strategies import graphs


@pytest.mark.parametrize("g,text", [
    (complete(1), "@"), (empty(2), "A?"), (complete(2), "A_"), (complete(4), "C~"),
    (petersen(), "IheA@GUAo"),
])
def test_known_strings(g, text):
    assert encode(g) == text
    assert decode(text) == g


def test_extended_header_roundtrip():
    g = complete(63)
    s = encode(g)
    assert s.startswith("~??~") and decode(s) == g


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert decode(encode(g)) == g


@pytest.mark.parametrize("text,err", [
    ("", EmptyInput), ("C~ x", InvalidCharacter), ("~~??????", MalformedHeader),
    ("~??~", TruncatedBody), ("~???", MalformedHeader), ("C", TruncatedBody), ("C~~", TrailingGarbage),
    ("A`", TrailingGarbage), ("~?A?" + "?" * 400, MalformedHeader),
])
def test_errors(text, err):
    with pytest.raises(err):
        decode(text)


def test_file_roundtrip_and_line_numbers(tmp_path):
    p = tmp_path / "g.g6"
    assert write_file(p, [complete(3), empty(2)]) == 2
    assert list(read_file(p)) == [complete(3), empty(2)]
    p.write_text("C~\n\nC\n")
    with pytest.raises(TruncatedBody, match=r"g\.g6:3"):
        list(read_file(p))
