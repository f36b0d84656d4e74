import time
from typing import Optional


class Timer():
    """
    Period check used to rate-limit progress logging.

    A periodic timer restarts each time `is_elapsed` reports True, so a
    polling loop logs at most once per period.
    """
    def __init__(self, name: str, timer_period_seconds: float, auto_start: bool = False,
                 is_periodic: bool = False):
        self.name = name
        self.timer_period_seconds = timer_period_seconds
        self.is_periodic = is_periodic
        self._started: Optional[float] = time.monotonic() if auto_start else None

    def start_timer(self) -> None:
        self._started = time.monotonic()

    def get_elapsed(self) -> float:
        if self._started is None:
            raise RuntimeError(f"{self.name} timer checked but not started")
        return time.monotonic() - self._started

    def is_elapsed(self) -> bool:
        if self.get_elapsed() <= self.timer_period_seconds:
            return False
        if self.is_periodic:
            self.start_timer()
        return True


class Stopwatch():
    """Wall-clock milliseconds around a block: ``with Stopwatch() as sw: ...``."""
    def __init__(self):
        self.start: Optional[float] = None
        self.elapsed_ms: Optional[float] = None

    def __enter__(self) -> "Stopwatch":
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed_ms = (time.perf_counter() - self.start) * 1000.0
