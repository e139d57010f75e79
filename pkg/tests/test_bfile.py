from pathlib import Path

import pytest

from fibdir.bfile import parse_bfile, read_bfile
from fibdir.errors import ParseError

FIX = Path(__file__).parent / "fixtures"


def test_parse_skips_comments_and_blanks():
    text = "# header\n\n1 5\n  # indented comment\n2 -7\n10 123456789012345678901\n"
    assert parse_bfile(text) == [(1, 5), (2, -7), (10, 123456789012345678901)]


@pytest.mark.parametrize("text, line", [
    ("1 2\n2 3 4\n", 2),
    ("1 x\n", 1),
    ("3 1\n3 1\n", 2),
    ("1 1 # trailing\n", 1),
    ("1\n", 1),
])
def test_malformed_lines(text, line):
    with pytest.raises(ParseError) as info:
        parse_bfile(text)
    assert info.value.line == line
    assert info.value.to_dict()["line"] == line


def test_fixture_files():
    rows = read_bfile(FIX / "fibonacci_word_b.txt")
    assert rows[:5] == [(0, 0), (1, 1), (2, 0), (3, 0), (4, 1)]
    with pytest.raises(ParseError):
        read_bfile(FIX / "corrupted_b.txt")
