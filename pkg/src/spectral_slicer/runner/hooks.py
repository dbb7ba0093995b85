"""Lifecycle hooks and event emitter for solves and bench sweeps."""

from __future__ import annotations

import logging
from typing import Callable

logger = logging.getLogger(__name__)

EVENTS = ("after_expand", "after_check", "after_solve", "before_row", "after_row")


class SolveHooks:
    """Simple event system for solve lifecycle hooks."""

    def __init__(self):
        self._hooks: dict[str, list[Callable]] = {event: [] for event in EVENTS}

    def on(self, event: str, callback: Callable) -> None:
        """Register a callback for an event."""
        if event not in self._hooks:
            raise ValueError(f"unknown hook event '{event}', expected one of {EVENTS}")
        self._hooks[event].append(callback)

    def emit(self, event: str, *args, **kwargs) -> None:
        """Trigger all callbacks for an event."""
        for callback in self._hooks.get(event, []):
            try:
                callback(*args, **kwargs)
            except Exception:
                # a failing observer never aborts the solve
                logger.exception("Hook %r for %s failed", callback, event)
