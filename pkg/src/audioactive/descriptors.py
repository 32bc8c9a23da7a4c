"""Digit-tally describing sequences.

Two small iterations that describe a string by digit counts rather than by
runs.  A :class:`CountDescriptor` lists "count, digit" pairs for the digits
present ("two 1s, one 2, ..."), sorted by digit; a :class:`FrequencyVector`
lists the count of every digit from 0 up to the largest index tracked,
keeping zero placeholders.  Both kinds of sequence are eventually periodic;
counts are rendered in base 10, and multi-digit counts contribute each of
their decimal digits to the next tally.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import DigitString


def _digit_tally(text: str) -> Counter:
    tally = Counter()
    for ch in text:
        if not ch.isdigit():
            raise ValueError(f"non-digit character {ch!r}")
        tally[int(ch)] += 1
    return tally


@dataclass(frozen=True)
class CountDescriptor:
    """Sorted (count, digit) pairs, one per distinct digit present."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = -1
        for count, digit in self.pairs:
            if count < 1:
                raise ValueError(f"count {count} must be positive")
            if not 0 <= digit <= 9:
                raise ValueError(f"digit {digit} out of range")
            if digit <= last:
                raise ValueError("digits must be strictly increasing")
            last = digit

    @classmethod
    def describe(cls, text: str | DigitString) -> "CountDescriptor":
        tally = _digit_tally(str(text))
        return cls(tuple((tally[d], d) for d in sorted(tally)))

    def render(self) -> str:
        return "".join(f"{count}{digit}" for count, digit in self.pairs)

    def __str__(self) -> str:
        return self.render()


def counting_step(d: CountDescriptor) -> CountDescriptor:
    """Describe the digits of the rendered descriptor, giving the next one."""
    return CountDescriptor.describe(d.render())


def counting_sequence(d: CountDescriptor, n: int) -> list[CountDescriptor]:
    """The first ``n`` counting steps from ``d`` (n+1 entries, ``d`` first)."""
    out = [d]
    for _ in range(n):
        out.append(counting_step(out[-1]))
    return out


@dataclass(frozen=True)
class FrequencyVector:
    """counts[d] = occurrences of digit d; zero placeholders are kept."""

    counts: tuple[int, ...]

    def __post_init__(self):
        for c in self.counts:
            if c < 0:
                raise ValueError(f"count {c} must be non-negative")

    @classmethod
    def describe(cls, text: str | DigitString, size: int | None = None) -> "FrequencyVector":
        tally = _digit_tally(str(text))
        width = max(size or 0, max(tally) + 1 if tally else 0)
        return cls(tuple(tally.get(d, 0) for d in range(width)))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)


def selfdesc_step(v: FrequencyVector) -> FrequencyVector:
    """Tally the decimal digits appearing in the entries of ``v``.

    The index range never shrinks: the result is at least as long as ``v``,
    growing only if some entry contains a digit beyond the current range.
    """
    tally = Counter()
    for entry in v.counts:
        for ch in str(entry):
            tally[int(ch)] += 1
    width = max(len(v.counts), max(tally) + 1 if tally else 0)
    return FrequencyVector(tuple(tally.get(d, 0) for d in range(width)))


def selfdesc_sequence(v: FrequencyVector, n: int) -> list[FrequencyVector]:
    """The first ``n`` self-description steps from ``v`` (n+1 entries)."""
    out = [v]
    for _ in range(n):
        out.append(selfdesc_step(out[-1]))
    return out
