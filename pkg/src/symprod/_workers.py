import os
from concurrent.futures import ThreadPoolExecutor

from .errors import SymprodError


def worker_count() -> int:
    """Worker cap from ``SYMPROD_THREADS`` (unset or 0 means one per CPU)."""
    raw = os.environ.get("SYMPROD_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError as exc:
        raise SymprodError(f"SYMPROD_THREADS must be an integer, got {raw!r}") from exc
    if n < 0:
        raise SymprodError("SYMPROD_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def ordered_map(fn, items):
    """``list(map(fn, items))``, possibly on a thread pool; order is preserved."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
