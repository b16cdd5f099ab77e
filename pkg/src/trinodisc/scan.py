"""Parallel prime-range scan with resumable caches.

One coordinator process shards contiguous blocks of primes across worker
processes; results come back in block order and a single writer appends
them, so an interrupted scan leaves both caches at a record boundary.
Finalized caches are rewritten sorted by p, making output bytes
independent of the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cache as cachefile
from .density import build_cp
from .errors import InvalidArgument
from .fproots import fp_roots
from .modarith import MAX_PRIME
from .primes import primes_list

BLOCK_SIZE = 4096

_BlockResult = list[tuple[int, tuple[int, ...], tuple[int, ...] | None]]


@dataclass(frozen=True)
class ScanSummary:
    min_p: int
    max_p: int
    prime_count: int
    computed: int
    resumed: int
    nonempty_cp: int
    wall_time: float


def _scan_block(args: tuple[list[int], str, bool]) -> _BlockResult:
    block, method, with_cp = args
    out: _BlockResult = []
    for p in block:
        roots = tuple(fp_roots(p, method=method))
        cp = tuple(build_cp(p).residues) if with_cp else None
        out.append((p, roots, cp))
    return out


def scan(min_p: int, max_p: int, workers: int = 1,
         roots_path: str | None = None, cp_path: str | None = None,
         resume: bool = False, method: str = "sieve",
         log=None) -> ScanSummary:
    """Compute roots and exceptional sets for every prime in [min_p, max_p).

    Existing primes are skipped when resume is set.  cp_path may be None
    for a roots-only scan.  Returns a summary; caches on disk are left
    finalized (sorted, with an #end trailer).
    """
    if not 3 <= min_p < max_p <= MAX_PRIME:
        raise InvalidArgument(f"need 3 <= min_p < max_p <= 2**31, got [{min_p}, {max_p})")
    if workers < 1:
        raise InvalidArgument("workers must be >= 1")
    if roots_path is None:
        raise InvalidArgument("roots_path is required")

    start = time.time()
    primes = primes_list(max(3, min_p), max_p)

    roots_records: dict[int, tuple[int, ...]] = {}
    cp_records: dict[int, tuple[int, ...]] = {}
    if resume:
        try:
            roots_records, _ = cachefile.read_cache(roots_path, "roots")
        except FileNotFoundError:
            pass
        if cp_path is not None:
            try:
                cp_records, _ = cachefile.read_cache(cp_path, "cp")
            except FileNotFoundError:
                pass

    if cp_path is not None:
        done = set(roots_records) & set(cp_records)
    else:
        done = set(roots_records)
    todo = [p for p in primes if p not in done]
    resumed = len(primes) - len(todo)

    block_size = min(BLOCK_SIZE, max(64, len(todo) // max(1, 4 * workers) + 1))
    blocks = [todo[i : i + block_size] for i in range(0, len(todo), block_size)]
    tasks = [(b, method, cp_path is not None) for b in blocks]

    roots_fh = open(roots_path, "w", encoding="utf-8")
    cachefile.write_header(roots_fh, "roots")
    for p in sorted(roots_records):
        roots_fh.write(cachefile.format_record("roots", p, roots_records[p]))
    cp_fh = None
    if cp_path is not None:
        cp_fh = open(cp_path, "w", encoding="utf-8")
        cachefile.write_header(cp_fh, "cp")
        for p in sorted(cp_records):
            cp_fh.write(cachefile.format_record("cp", p, cp_records[p]))

    def _absorb(result: _BlockResult) -> None:
        for p, roots, cp in result:
            roots_records[p] = roots
            roots_fh.write(cachefile.format_record("roots", p, roots))
            if cp_fh is not None and cp is not None:
                cp_records[p] = cp
                cp_fh.write(cachefile.format_record("cp", p, cp))
        roots_fh.flush()
        if cp_fh is not None:
            cp_fh.flush()

    try:
        if workers == 1 or len(tasks) <= 1:
            for i, task in enumerate(tasks):
                _absorb(_scan_block(task))
                if log:
                    log(f"block {i + 1}/{len(tasks)} done")
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for i, result in enumerate(pool.map(_scan_block, tasks)):
                    _absorb(result)
                    if log:
                        log(f"block {i + 1}/{len(tasks)} done")
    finally:
        roots_fh.close()
        if cp_fh is not None:
            cp_fh.close()

    cachefile.write_finalized(roots_path, "roots", roots_records)
    if cp_path is not None:
        cachefile.write_finalized(cp_path, "cp", cp_records)

    return ScanSummary(
        min_p=min_p,
        max_p=max_p,
        prime_count=len(primes),
        computed=len(todo),
        resumed=resumed,
        nonempty_cp=sum(1 for r in cp_records.values() if r),
        wall_time=time.time() - start,
    )
