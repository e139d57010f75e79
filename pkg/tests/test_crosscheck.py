from pathlib import Path

import pytest

from fibdir.errors import ParseError
from fibdir.verification.crosscheck import bfile_crosscheck, parse_coding

FIX = Path(__file__).parent / "fixtures"


def test_parse_coding():
    assert parse_coding("1:0,2:1,3:2") == {1: 0, 2: 1, 3: 2}
    assert parse_coding("") is None
    with pytest.raises(ValueError):
        parse_coding("1-0")


def test_offset_is_inferred():
    rep = bfile_crosscheck(FIX / "fibonacci_word_b.txt", "f")
    entry = rep.entries[0]
    assert entry.status == "informational"
    assert entry.detail["inferred_offset"] == "1"
    assert rep.exit_code() == 0


def test_explicit_offset_pass_and_fail():
    good = bfile_crosscheck(FIX / "fibonacci_word_b.txt", "f", offset=1)
    assert good.ok and good.entries[0].detail["compared"] == "2000"
    bad = bfile_crosscheck(FIX / "fibonacci_word_b.txt", "f", offset=0)
    assert bad.exit_code() == 1
    assert bad.entries[0].detail["first_mismatches"].startswith("1 2 4")


def test_coded_fixed_point_matches_d():
    rep = bfile_crosscheck(FIX / "fixed_point_123_b.txt", "d", coding="1:0,2:1,3:2", offset=0)
    assert rep.ok


def test_limit_and_coding_errors(tmp_path):
    with pytest.raises(ValueError):
        bfile_crosscheck(FIX / "fixed_point_123_b.txt", "d", coding="1:0,2:1", offset=0)
    with pytest.raises(ValueError):
        bfile_crosscheck(FIX / "fibonacci_word_b.txt", "f", limit=10**6)
    with pytest.raises(ParseError):
        bfile_crosscheck(FIX / "corrupted_b.txt", "f")
