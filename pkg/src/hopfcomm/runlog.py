"""Process-wide event log for the seeded modular subroutines.

The character-table lift and the commutative-splitting routine pick primes
and retry on bad ones; they record each attempt here so a CLI run report
can include the prime/retry history.  Events are plain dicts and the log
is drained (read and cleared) by the consumer.
"""

from __future__ import annotations

_events: list[dict] = []


def record(stage: str, **fields) -> None:
    event = {"stage": stage}
    event.update(fields)
    _events.append(event)


def drain() -> list[dict]:
    out = list(_events)
    _events.clear()
    return out
