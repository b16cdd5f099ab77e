"""Line-oriented cache files for per-prime scan results.

Format (UTF-8 text, one record per line):

    #trinodisc-cache v1 <kind>          header; kind is "roots" or "cp"
    <p>\t<count>\t<r1>;<r2>;...         roots record
    <p>\t<modulus>\t<a1>;<a2>;...       cp record (residue field may be empty)
    #end <record-count>                 written only when finalized

A file without the #end line is a valid partial cache and can be resumed;
a finalized file must be sorted by p with a matching record count.
"""

from __future__ import annotations

import os
from typing import Iterable, TextIO

from .density import CpSet
from .errors import CacheCorrupt

_HEADER_PREFIX = "#trinodisc-cache v1"


def _parse_residues(field: str) -> tuple[int, ...]:
    if not field:
        return ()
    return tuple(int(v) for v in field.split(";"))


def read_cache(path: str, kind: str) -> tuple[dict[int, tuple[int, ...]], bool]:
    """Load a cache file; returns ({p: residues}, finalized).

    Structural problems raise CacheCorrupt.  For kind="roots" the count
    field must match; for kind="cp" the modulus must equal p*(p-1).
    """
    records: dict[int, tuple[int, ...]] = {}
    finalized = False
    expected_header = f"{_HEADER_PREFIX} {kind}"
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if header != expected_header:
            raise CacheCorrupt(f"{path}: bad header {header!r}")
        last_p = 0
        ordered = True
        for line_no, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if line.startswith("#end"):
                parts = line.split()
                if len(parts) != 2 or not parts[1].isdigit():
                    raise CacheCorrupt(f"{path}:{line_no}: malformed #end line")
                if int(parts[1]) != len(records):
                    raise CacheCorrupt(
                        f"{path}: #end count {parts[1]} != {len(records)} records"
                    )
                finalized = True
                continue
            if finalized:
                raise CacheCorrupt(f"{path}:{line_no}: data after #end")
            fields = line.split("\t")
            if len(fields) != 3:
                raise CacheCorrupt(f"{path}:{line_no}: expected 3 fields")
            try:
                p = int(fields[0])
                meta = int(fields[1])
                residues = _parse_residues(fields[2])
            except ValueError as exc:
                raise CacheCorrupt(f"{path}:{line_no}: {exc}") from None
            if kind == "roots" and meta != len(residues):
                raise CacheCorrupt(f"{path}:{line_no}: count != #roots")
            if kind == "cp" and meta != p * (p - 1):
                raise CacheCorrupt(f"{path}:{line_no}: modulus != p*(p-1)")
            if p in records:
                raise CacheCorrupt(f"{path}:{line_no}: duplicate prime {p}")
            if p < last_p:
                ordered = False  # only fatal in a finalized file
            last_p = max(last_p, p)
            records[p] = residues
        if finalized and not ordered:
            raise CacheCorrupt(f"{path}: finalized cache is not sorted by p")
    return records, finalized


def format_record(kind: str, p: int, residues: Iterable[int]) -> str:
    residues = tuple(residues)
    meta = len(residues) if kind == "roots" else p * (p - 1)
    return f"{p}\t{meta}\t{';'.join(str(r) for r in residues)}\n"


def write_header(fh: TextIO, kind: str) -> None:
    fh.write(f"{_HEADER_PREFIX} {kind}\n")


def write_finalized(path: str, kind: str,
                    records: dict[int, tuple[int, ...]]) -> None:
    """Rewrite the whole cache sorted by p with the #end trailer."""
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        write_header(fh, kind)
        for p in sorted(records):
            fh.write(format_record(kind, p, records[p]))
        fh.write(f"#end {len(records)}\n")
    os.replace(tmp, path)


def load_cp_cache(path: str) -> dict[int, CpSet]:
    records, _ = read_cache(path, "cp")
    return {
        p: CpSet(p=p, modulus=p * (p - 1), residues=res)
        for p, res in records.items()
    }


def load_roots_cache(path: str) -> dict[int, tuple[int, ...]]:
    records, _ = read_cache(path, "roots")
    return records
