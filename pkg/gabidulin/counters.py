"""
Operation counters for complexity measurements.

Field arithmetic reports to whichever ``OpCounter`` is active in the current
context. Each decoder phase (and each sweep worker thread) activates its own
counter, so tallies never interleave.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, asdict
from typing import Dict, Iterator, Optional


@dataclass
class OpCounter:
    """Tallies of counted operations."""

    multiplications: int = 0
    field_divisions: int = 0
    symbolic_divisions: int = 0

    def merge(self, other: "OpCounter") -> "OpCounter":
        """Add another counter's tallies into this one and return self."""
        self.multiplications += other.multiplications
        self.field_divisions += other.field_divisions
        self.symbolic_divisions += other.symbolic_divisions
        return self

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


_active: contextvars.ContextVar[Optional[OpCounter]] = contextvars.ContextVar(
    "gabidulin_active_counter", default=None
)


@contextmanager
def counting(counter: OpCounter) -> Iterator[OpCounter]:
    """Route all counted operations in this context to ``counter``."""
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def tally_mul(count: int = 1) -> None:
    counter = _active.get()
    if counter is not None:
        counter.multiplications += count


def tally_field_div(count: int = 1) -> None:
    counter = _active.get()
    if counter is not None:
        counter.field_divisions += count


def tally_symbolic_div() -> None:
    counter = _active.get()
    if counter is not None:
        counter.symbolic_divisions += 1
