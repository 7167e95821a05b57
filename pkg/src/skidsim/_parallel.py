import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "SKIDSIM_THREADS"


def thread_count():
    """Worker count from ``SKIDSIM_THREADS`` (unset or 0 means one per CPU)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    n = int(raw) if raw else 0
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def ordered_map(fn, items):
    """``list(map(fn, items))``, possibly threaded; result order follows input."""
    items = list(items)
    n = min(thread_count(), len(items))
    if n <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
