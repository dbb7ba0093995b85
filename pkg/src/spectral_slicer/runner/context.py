"""SolveContext - holds counters and timers for one eigensolve."""

from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Iterator

from spectral_slicer.core.sparse import MatvecCounter

PHASES = ("preproc", "mv", "orth", "check", "recover")


class SolveContext:
    """Execution scope of a single solve: matvec counters per phase and wall-clock timers."""

    def __init__(self):
        self.bounds_counter = MatvecCounter()
        self.lanczos_counter = MatvecCounter()
        self.recovery_counter = MatvecCounter()
        self.times: dict[str, float] = dict.fromkeys(PHASES, 0.0)
        self._started = time.perf_counter()

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        """Accumulate the wall time of the enclosed block under `name`."""
        if name not in self.times:
            raise KeyError(f"unknown solve phase '{name}'")
        start = time.perf_counter()
        try:
            yield
        finally:
            self.times[name] += time.perf_counter() - start

    def elapsed(self) -> float:
        return time.perf_counter() - self._started
