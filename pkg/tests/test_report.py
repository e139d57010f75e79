import csv
import io
import json

import mpmath
import pytest

from fibdir.verification.report import Report, ReportEntry, fmt_num


def sample():
    rep = Report("demo", {"n_max": 10, "tol": 1e-6})
    rep.check("a", "x = x", True, mpmath.mpf("1e-30"), 0, 1e-6)
    rep.check("b", "y = z", False, 3, 0, 0, note="off")
    rep.info("c", "probe", mpmath.mpc(1, -2))
    return rep


def test_status_and_exit_code():
    rep = sample()
    assert [e.status for e in rep.entries] == ["pass", "fail", "informational"]
    assert not rep.ok and rep.exit_code() == 1
    assert rep.get("b").detail == {"note": "off"}
    with pytest.raises(KeyError):
        rep.get("zzz")


def test_json_schema_and_string_numbers():
    doc = json.loads(sample().to_json())
    assert doc["schema_version"] == 1
    assert doc["summary"] == {"pass": 1, "fail": 1, "informational": 1}
    for e in doc["entries"]:
        assert all(isinstance(e[k], str) for k in ("measured", "expected", "tolerance", "runtime"))
    assert doc["params"]["tol"] == "1e-06"


def test_json_without_runtime_is_stable():
    a, b = sample().to_json(include_runtime=False), sample().to_json(include_runtime=False)
    assert a == b and "runtime" not in a


def test_csv_rows():
    rows = list(csv.reader(io.StringIO(sample().to_csv())))
    assert rows[0][:4] == ["suite", "check_id", "paper_anchor", "status"]
    assert len(rows) == 4


def test_text_summary_line():
    assert sample().to_text().splitlines()[-1].strip() == "1 pass, 1 fail, 1 informational"


def test_bad_status():
    with pytest.raises(ValueError):
        ReportEntry("x", "y", "maybe")


def test_fmt_num():
    assert fmt_num(None) == ""
    assert fmt_num(True) == "true"
    assert fmt_num(12) == "12"
    assert fmt_num(0.1) == "0.1"
    assert fmt_num(mpmath.mpc(1, -2), 5) == "1.0-2.0i"
