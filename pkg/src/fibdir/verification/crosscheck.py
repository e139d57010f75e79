"""Compare generated sequences against published b-file data."""

from __future__ import annotations

import time

from ..bfile import read_bfile
from ..sequences import SeqId, code_term
from ..table import sequence_table
from .report import Report

__all__ = ["bfile_crosscheck", "parse_coding", "generated_terms"]

OFFSET_SEARCH = range(-3, 4)


def parse_coding(text: str | None) -> dict[int, int] | None:
    """``"1:0,2:1,3:2"`` -> ``{1: 0, 2: 1, 3: 2}``; None/empty means identity."""
    if not text:
        return None
    out = {}
    for item in text.split(","):
        k, _, v = item.partition(":")
        if not _:
            raise ValueError(f"bad coding item {item!r}, expected 'from:to'")
        out[int(k)] = int(v)
    return out


def generated_terms(seq: SeqId | str, n_max: int) -> list[int]:
    """Terms 1..n_max of a sequence, index 0 padded with None."""
    seq = SeqId(seq)
    tab = sequence_table(max(n_max, 1))
    return [None] + [code_term(seq, int(tab.d[n]), int(tab.tz[n])) for n in range(1, n_max + 1)]


def _compare(rows, ours, offset):
    mism = []
    compared = 0
    for n, v in rows:
        k = n + offset
        if k < 1 or k >= len(ours):
            continue
        compared += 1
        if ours[k] != v:
            mism.append(n)
    return compared, mism


def bfile_crosscheck(path, seq, coding=None, limit: int | None = None,
                     offset: int | None = None) -> Report:
    """Check a b-file prefix against our sequence.

    File values pass through ``coding`` first.  File index ``n`` is compared
    with our term ``n + offset``; without an explicit offset, every offset in
    -3..3 is tried and the result is informational.
    """
    seq = SeqId(seq)
    if isinstance(coding, str):
        coding = parse_coding(coding)
    t0 = time.perf_counter()
    rows = read_bfile(path)
    if limit is not None:
        if limit > len(rows):
            raise ValueError(f"limit {limit} exceeds the {len(rows)} entries in the file")
        rows = rows[:limit]
    if coding:
        unknown = {v for _, v in rows if v not in coding}
        if unknown:
            raise ValueError(f"coding does not cover file values {sorted(unknown)}")
        rows = [(n, coding[v]) for n, v in rows]
    top = max((n for n, _ in rows), default=0) + max(OFFSET_SEARCH) + 1
    ours = generated_terms(seq, max(top, 1))
    rep = Report("crosscheck", {"file": str(path), "seq": seq.value, "entries": len(rows),
                                "coding": "" if not coding else ",".join(f"{k}:{v}" for k, v in sorted(coding.items())),
                                "offset": "auto" if offset is None else offset})
    anchor = f"{seq.value}(n) against published terms"
    if offset is not None:
        compared, mism = _compare(rows, ours, offset)
        rep.check(f"bfile_{seq.value}", anchor, compared > 0 and not mism, len(mism), 0, 0,
                  time.perf_counter() - t0, compared=compared, offset=offset,
                  first_mismatches=" ".join(map(str, mism[:10])))
        return rep
    results = {off: _compare(rows, ours, off) for off in OFFSET_SEARCH}
    agreeing = [off for off, (c, m) in results.items() if c > 0 and not m]
    best = min(results, key=lambda off: (len(results[off][1]), abs(off)))
    compared, mism = results[best]
    rep.info(f"bfile_{seq.value}", anchor, len(mism), 0, time.perf_counter() - t0,
             inferred_offset=best if not mism else "none",
             agreeing_offsets=" ".join(map(str, agreeing)), compared=compared,
             first_mismatches=" ".join(map(str, mism[:10])))
    return rep
