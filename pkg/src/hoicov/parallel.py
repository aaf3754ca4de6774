"""HOI_THREADS-capped ordered map used by per-frequency sweeps."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "HOI_THREADS"


def thread_budget() -> int:
    """Worker cap from HOI_THREADS; 0 or unset means auto (cpu count)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    n = int(raw) if raw else 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def ordered_map(fn, items) -> list:
    """Apply fn to items, preserving order; results are scheduling-independent."""
    items = list(items)
    workers = min(thread_budget(), len(items)) if items else 0
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
