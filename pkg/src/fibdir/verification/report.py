"""Check reports and their JSON / CSV / text renderings."""

from __future__ import annotations

import csv
import io
import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import mpmath

__all__ = ["ReportEntry", "Report", "fmt_num", "STATUSES", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "informational")


def fmt_num(v, digits: int = 20) -> str:
    """Decimal string for ints, floats, mpf/mpc and GoldenNum-like values."""
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    if isinstance(v, complex):
        v = mpmath.mpc(v)
    if isinstance(v, mpmath.mpc):
        if v.imag == 0:
            return mpmath.nstr(v.real, digits)
        return f"{mpmath.nstr(v.real, digits)}{'+' if v.imag >= 0 else '-'}{mpmath.nstr(abs(v.imag), digits)}i"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(mpmath.mpf(v), digits)
    return str(v)


@dataclass
class ReportEntry:
    check_id: str
    paper_anchor: str
    status: str
    measured: str = ""
    expected: str = ""
    tolerance: str = ""
    runtime: float = 0.0
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        self.measured = fmt_num(self.measured)
        self.expected = fmt_num(self.expected)
        self.tolerance = fmt_num(self.tolerance, 6)

    @property
    def failed(self) -> bool:
        return self.status == "fail"


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    entries: list[ReportEntry] = field(default_factory=list)

    def add(self, entry: ReportEntry) -> ReportEntry:
        self.entries.append(entry)
        return entry

    def check(self, check_id: str, anchor: str, ok: bool, measured="", expected="",
              tolerance="", runtime: float = 0.0, **detail) -> ReportEntry:
        status = "pass" if ok else "fail"
        return self.add(ReportEntry(check_id, anchor, status, measured, expected, tolerance,
                                    runtime, {k: fmt_num(v) for k, v in detail.items()}))

    def info(self, check_id: str, anchor: str, measured="", expected="", runtime: float = 0.0,
             **detail) -> ReportEntry:
        return self.add(ReportEntry(check_id, anchor, "informational", measured, expected, "",
                                    runtime, {k: fmt_num(v) for k, v in detail.items()}))

    @contextmanager
    def timed(self):
        """Yields a one-element list that receives the elapsed seconds."""
        box = [0.0]
        t0 = time.perf_counter()
        try:
            yield box
        finally:
            box[0] = time.perf_counter() - t0

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)

    @property
    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if e.failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def get(self, check_id: str) -> ReportEntry:
        for e in self.entries:
            if e.check_id == check_id:
                return e
        raise KeyError(check_id)

    # -- rendering -------------------------------------------------------------
    def to_dict(self, include_runtime: bool = True) -> dict:
        entries = []
        for e in self.entries:
            d = asdict(e)
            if include_runtime:
                d["runtime"] = f"{e.runtime:.3f}"
            else:
                d.pop("runtime")
            entries.append(d)
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "params": {k: fmt_num(v) for k, v in self.params.items()},
            "entries": entries,
            "summary": {
                "pass": sum(e.status == "pass" for e in self.entries),
                "fail": sum(e.status == "fail" for e in self.entries),
                "informational": sum(e.status == "informational" for e in self.entries),
            },
        }

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check_id", "paper_anchor", "status", "measured", "expected",
                    "tolerance", "runtime"])
        for e in self.entries:
            w.writerow([self.suite, e.check_id, e.paper_anchor, e.status, e.measured,
                        e.expected, e.tolerance, f"{e.runtime:.3f}"])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        width = max((len(e.check_id) for e in self.entries), default=8)
        for e in self.entries:
            line = f"  [{e.status.upper():>4}] {e.check_id:<{width}}  measured={e.measured}"
            if e.expected:
                line += f"  expected={e.expected}"
            if e.tolerance:
                line += f"  tol={e.tolerance}"
            lines.append(line)
        s = self.to_dict(include_runtime=False)["summary"]
        lines.append(f"  {s['pass']} pass, {s['fail']} fail, {s['informational']} informational")
        return "\n".join(lines)
