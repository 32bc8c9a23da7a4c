"""Digit strings and the run-length describing step.

The describing step reads a string of digits run by run: a maximal run of
``n`` copies of digit ``d`` is replaced by the base-``b`` numeral of ``n``
(most significant digit first, no leading zeros) followed by ``d``.  Token
mode keeps counts as atomic symbols instead of spelling them out in a base,
so a run of ten 5s becomes the two tokens ``10, 5``.

Digit mode is restricted to bases 2..10 so that the canonical text form is
one ASCII character per digit; larger alphabets are only supported through
:class:`TokenString`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class AudioactiveError(Exception):
    """Base class for errors raised by this package."""


class InvalidDigitError(AudioactiveError, ValueError):
    """A digit is outside the allowed alphabet for its base."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class SplitDomainError(AudioactiveError, ValueError):
    """Full splitting was requested outside its proven domain."""


class SearchBudgetError(AudioactiveError, RuntimeError):
    """An exhaustive search would exceed the configured budget."""


class LengthBudgetError(AudioactiveError, RuntimeError):
    """An iterated string outgrew the configured memory budget."""


class ConvergenceError(AudioactiveError, RuntimeError):
    """An iterative computation failed to converge within its budget."""


_DIGIT_CHARS = "0123456789"
_MAX_RUN = 2**63 - 1
_ALLOWED = {b: frozenset(_DIGIT_CHARS[:b]) for b in range(2, 11)}


def _check_base(base: int) -> None:
    if not 2 <= base <= 10:
        raise ValueError(f"digit mode supports bases 2..10, got {base}; use token mode instead")


@dataclass(frozen=True)
class DigitString:
    """Finite string over the digit alphabet {0, ..., base-1}.

    The canonical serialization is ``text`` itself: one character per digit,
    no separators.  ``parse(render(s)) == s`` for every valid string.
    """

    text: str
    base: int = 3

    def __post_init__(self):
        _check_base(self.base)
        bad = set(self.text) - _ALLOWED[self.base]
        if bad:
            pos = next(i for i, ch in enumerate(self.text) if ch in bad)
            raise InvalidDigitError(
                f"digit {self.text[pos]!r} at position {pos} is not valid in base {self.base}",
                position=pos,
            )

    @classmethod
    def parse(cls, text: str, base: int = 3) -> "DigitString":
        return cls(text, base)

    @classmethod
    def from_digits(cls, digits: Iterable[int], base: int = 3) -> "DigitString":
        return cls("".join(_DIGIT_CHARS[d] for d in digits), base)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(int(ch) for ch in self.text)

    def render(self) -> str:
        return self.text

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[int]:
        return (int(ch) for ch in self.text)


@dataclass(frozen=True)
class Run:
    """A maximal block of one repeated digit."""

    digit: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("run length must be positive")


@dataclass(frozen=True)
class TokenString:
    """Sequence of atomic count/value tokens (the unbounded-alphabet mode)."""

    tokens: tuple[int, ...]

    def __post_init__(self):
        for t in self.tokens:
            if t < 0:
                raise ValueError(f"negative token {t}")

    @classmethod
    def parse(cls, text: str) -> "TokenString":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(part) for part in text.split(",")))

    def render(self) -> str:
        return ",".join(str(t) for t in self.tokens)

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.tokens)


# ---------------------------------------------------------------------------
# Runs and numerals
# ---------------------------------------------------------------------------

def _iter_runs(seq: Sequence) -> Iterator[tuple[int, int]]:
    """Yield (start, end) index pairs of the maximal runs of ``seq``."""
    i, n = 0, len(seq)
    while i < n:
        j = i + 1
        while j < n and seq[j] == seq[i]:
            j += 1
        yield i, j
        i = j


def runs(s: DigitString) -> list[Run]:
    """Run decomposition of ``s``; concatenating the runs reproduces it."""
    return [Run(int(s.text[i]), j - i) for i, j in _iter_runs(s.text)]


def max_run_length(s: DigitString) -> int:
    """Length of the longest run, 0 for the empty string."""
    return max((j - i for i, j in _iter_runs(s.text)), default=0)


_NUMERAL_CACHE: dict[int, dict[int, str]] = {b: {} for b in range(2, 11)}


def _numeral(n: int, base: int) -> str:
    """Base-``base`` numeral of ``n >= 1``, most significant digit first."""
    cache = _NUMERAL_CACHE[base]
    got = cache.get(n)
    if got is not None:
        return got
    if not 1 <= n <= _MAX_RUN:
        raise ValueError(f"run length {n} out of supported range")
    digs = []
    m = n
    while m:
        digs.append(_DIGIT_CHARS[m % base])
        m //= base
    text = "".join(reversed(digs))
    if n <= 4096:
        cache[n] = text
    return text


# ---------------------------------------------------------------------------
# The describing step
# ---------------------------------------------------------------------------

_ARRAY_THRESHOLD = 4096
_ZERO = ord("0")


def _step_text(text: str, base: int) -> str:
    if len(text) >= _ARRAY_THRESHOLD:
        return _array_to_text(_array_step(_text_to_array(text), base))
    cache = _NUMERAL_CACHE[base]
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        j = i + 1
        while j < n and text[j] == ch:
            j += 1
        rl = j - i
        out.append(cache.get(rl) or _numeral(rl, base))
        out.append(ch)
        i = j
    return "".join(out)


def lookandsay_step(s: DigitString, base: int | None = None) -> DigitString:
    """One describing step of ``s`` in digit mode.

    ``base`` overrides ``s.base``; every digit of ``s`` must be valid in the
    effective base or :class:`InvalidDigitError` is raised, naming the first
    offending position.  The empty string maps to itself.
    """
    b = s.base if base is None else base
    _check_base(b)
    if b < s.base:
        bad = set(s.text) - _ALLOWED[b]
        if bad:
            pos = next(i for i, ch in enumerate(s.text) if ch in bad)
            raise InvalidDigitError(
                f"digit {s.text[pos]!r} at position {pos} is not valid in base {b}",
                position=pos,
            )
    return DigitString(_step_text(s.text, b), b)


def step_of_runs(run_list: Iterable[tuple[int, int] | Run], base: int = 3) -> DigitString:
    """Describing step applied to a run-length encoded string.

    Accepts (digit, length) pairs so that inputs with very long runs never
    have to be materialized; the result is small (a run of 10**6 ones emits
    a dozen digits).  Adjacent pairs may share a digit; lengths must fit in
    a signed 64-bit integer.
    """
    _check_base(base)
    merged: list[tuple[int, int]] = []
    for item in run_list:
        d, n = (item.digit, item.length) if isinstance(item, Run) else item
        if not 0 <= d < base:
            raise InvalidDigitError(f"digit {d} is not valid in base {base}")
        if not 1 <= n <= _MAX_RUN:
            raise ValueError(f"run length {n} out of supported range")
        if merged and merged[-1][0] == d:
            merged[-1] = (d, merged[-1][1] + n)
        else:
            merged.append((d, n))
    out = []
    for d, n in merged:
        out.append(_numeral(n, base))
        out.append(_DIGIT_CHARS[d])
    return DigitString("".join(out), base)


def token_step(t: TokenString) -> TokenString:
    """One describing step in token mode: each run (v, n) emits tokens n, v."""
    out = []
    for i, j in _iter_runs(t.tokens):
        out.append(j - i)
        out.append(t.tokens[i])
    return TokenString(tuple(out))


def iterate(s: DigitString, n: int, base: int | None = None) -> list[DigitString]:
    """The first ``n`` iterates of ``s`` including ``s`` itself (n+1 entries)."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    out = [s if base is None or base == s.base else DigitString(s.text, base)]
    for _ in range(n):
        out.append(lookandsay_step(out[-1]))
    return out


def iterate_tokens(t: TokenString, n: int) -> list[TokenString]:
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    out = [t]
    for _ in range(n):
        out.append(token_step(out[-1]))
    return out


# ---------------------------------------------------------------------------
# Base-3 run-bound predicates
# ---------------------------------------------------------------------------

def _require_base3(s: DigitString) -> None:
    if s.base != 3:
        raise ValueError(f"predicate is defined for base 3 only, got base {s.base}")


_RUN_CAPS = {"0": 1, "1": 4, "2": 3}


def is_run_bounded(s: DigitString) -> bool:
    """Base-3 run bounds: 0-runs <= 1, 1-runs <= 4, 2-runs <= 3."""
    _require_base3(s)
    t = s.text
    return all(j - i <= _RUN_CAPS[t[i]] for i, j in _iter_runs(t))


def is_ancient(s: DigitString) -> bool:
    """Run-bounded with no run of length 4 or more (so 1-runs <= 3 as well)."""
    _require_base3(s)
    t = s.text
    return all(j - i <= min(3, _RUN_CAPS[t[i]]) for i, j in _iter_runs(t))


# ---------------------------------------------------------------------------
# Fixed points
# ---------------------------------------------------------------------------

def fixed_point_search(
    base: int, max_len: int, budget: int = 10**9, primitive_only: bool = True
) -> list[DigitString]:
    """Exhaustive search for non-empty strings fixed by the step, sorted.

    Whenever two fixed strings meet at a non-merging boundary their
    concatenation is fixed as well, so the raw fixed set is closed under
    such concatenations (e.g. 1111011110 in base 3).  By default only the
    *primitive* fixed strings are returned: those not expressible as a
    concatenation of two smaller fixed strings.  Pass ``primitive_only=False``
    for the full set.

    The search space (all base**1 + ... + base**max_len strings) is covered
    by a depth-first construction over run sequences: a fixed string's output
    must equal its input, so at every prefix the emitted text and the built
    text must agree on their common length.  That prefix test prunes the
    space down to a handful of candidates while still visiting every fixed
    string, because a genuine fixed point satisfies the prefix invariant at
    each of its runs.
    """
    _check_base(base)
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    space = sum(base**k for k in range(1, max_len + 1))
    if space > budget:
        raise SearchBudgetError(
            f"search space of {space} strings exceeds budget of {budget}"
        )
    found: list[str] = []
    digit_set = _DIGIT_CHARS[:base]

    def extend(cur: str, emitted: str, last: str) -> None:
        if cur and cur == emitted:
            found.append(cur)
        room = max_len - len(cur)
        for d in digit_set:
            if d == last:
                continue
            for n in range(1, room + 1):
                nxt = cur + d * n
                em = emitted + _numeral(n, base) + d
                if len(em) > max_len:
                    break
                if len(em) <= len(nxt):
                    if not nxt.startswith(em):
                        continue
                elif not em.startswith(nxt):
                    continue
                extend(nxt, em, d)

    extend("", "", "")
    if primitive_only:
        fixed_set = set(found)
        found = [
            text
            for text in found
            if not any(
                text[:p] in fixed_set and text[p:] in fixed_set
                for p in range(1, len(text))
            )
        ]
    return [DigitString(text, base) for text in sorted(found)]


# ---------------------------------------------------------------------------
# numpy engine for long strings
# ---------------------------------------------------------------------------

def _text_to_array(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) - _ZERO


def _array_to_text(a: np.ndarray) -> str:
    return (a + _ZERO).astype(np.uint8).tobytes().decode("ascii")


def _array_runs(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Run digits and run lengths of a digit array."""
    if a.size == 0:
        return a[:0], np.zeros(0, dtype=np.int64)
    boundaries = np.flatnonzero(a[1:] != a[:-1])
    r = boundaries.size + 1
    digs = np.empty(r, dtype=a.dtype)
    digs[0] = a[0]
    digs[1:] = a[boundaries + 1]
    counts = np.empty(r, dtype=np.int64)
    if r == 1:
        counts[0] = a.size
    else:
        counts[0] = boundaries[0] + 1
        counts[1:-1] = np.diff(boundaries)
        counts[-1] = a.size - 1 - boundaries[-1]
    return digs, counts


_LUT_MAX_COUNT = 512


def _lut_step(digs: np.ndarray, counts: np.ndarray, base: int, maxc: int) -> np.ndarray:
    """Emit runs through a (digit, count) -> padded-pattern lookup table.

    Each run gathers one table row of ``width`` bytes (numeral then digit,
    left-padded with a sentinel); dropping the sentinels concatenates the
    emissions.  Only usable while counts stay small, which they do after a
    couple of steps in every base.
    """
    width = len(_numeral(maxc, base)) + 1
    table = np.full((maxc * base, width), 255, dtype=np.uint8)
    for c in range(1, maxc + 1):
        numeral = _numeral(c, base)
        pattern = [int(ch) for ch in numeral]
        start = width - len(pattern) - 1
        for d in range(base):
            row = (c - 1) * base + d
            table[row, start:-1] = pattern
            table[row, -1] = d
    wide = table[(counts - 1) * base + digs]
    return wide[wide != 255]


def _array_step(a: np.ndarray, base: int) -> np.ndarray:
    digs, counts = _array_runs(a)
    r = digs.size
    if r == 0:
        return a[:0]
    maxc = int(counts.max())
    if maxc <= _LUT_MAX_COUNT:
        return _lut_step(digs, counts, base, maxc)
    # numeral length per run: floor(log_base(count)) + 1
    numlens = np.ones(r, dtype=np.int32)
    rest = counts // base
    while rest.any():
        numlens += rest > 0
        rest //= base
    ends = np.empty(r, dtype=np.int64)  # position just past each run's emission
    np.cumsum(numlens + 1, dtype=np.int64, out=ends)
    del numlens
    out = np.empty(int(ends[-1]), dtype=a.dtype)
    out[ends - 1] = digs
    del digs
    # the least significant numeral digit always sits right before the run
    # digit; deeper digits exist only for the (few) runs with count >= base
    out[ends - 2] = (counts % base).astype(a.dtype)
    rest = counts // base
    del counts
    depth = 3
    while True:
        having = np.flatnonzero(rest)
        if having.size == 0:
            break
        out[ends[having] - depth] = (rest[having] % base).astype(a.dtype)
        rest //= base
        depth += 1
    return out


def _token_array_step(a: np.ndarray) -> np.ndarray:
    vals, counts = _array_runs(a)
    out = np.empty(2 * vals.size, dtype=np.int64)
    out[0::2] = counts
    out[1::2] = vals
    return out


DEFAULT_LENGTH_BUDGET = 10**9


def _zero_pieces(text: str) -> list[str]:
    """Cut after every 0 that precedes a non-0; exact in every base.

    The left part of such a cut keeps ending in 0 forever (the final run
    digit survives each step) and the right part never grows a leading 0
    (numerals have no leading zeros), so the two sides never interact.
    """
    pieces = []
    prev = 0
    for p in range(1, len(text)):
        if text[p - 1] == "0" and text[p] != "0":
            pieces.append(text[prev:p])
            prev = p
    pieces.append(text[prev:])
    return pieces


def _piece_lengths(text: str, base: int, iters: int, max_length: int) -> list[int]:
    """Length sequence via a multiset of zero-separated pieces.

    Bases 2 and 3 emit fresh zeros every step (run counts reach the base),
    so iterates factor into a small recurring set of pieces; each distinct
    piece is stepped and re-cut once, and only the counts grow.
    """
    pieces: dict[str, int] = {}
    for piece in _zero_pieces(text):
        pieces[piece] = pieces.get(piece, 0) + 1
    lengths = [len(text)]
    children: dict[str, list[tuple[str, int]]] = {}
    for n in range(iters):
        nxt: dict[str, int] = {}
        for piece, count in pieces.items():
            subs = children.get(piece)
            if subs is None:
                tally: dict[str, int] = {}
                for sub in _zero_pieces(_step_text(piece, base)):
                    tally[sub] = tally.get(sub, 0) + 1
                subs = list(tally.items())
                children[piece] = subs
            for sub, mult in subs:
                nxt[sub] = nxt.get(sub, 0) + mult * count
        pieces = nxt
        total = sum(len(p) * c for p, c in pieces.items())
        if total > max_length:
            raise LengthBudgetError(
                f"iterate {n + 1} has {total} digits, over the budget of {max_length}"
            )
        lengths.append(total)
    return lengths


def length_sequence(
    seed: DigitString | TokenString,
    iters: int,
    base: int | None = None,
    max_length: int = DEFAULT_LENGTH_BUDGET,
) -> list[int]:
    """Lengths of the first ``iters`` iterates (iters+1 entries, seed first).

    Bases 2 and 3 are tracked exactly through a multiset of zero-separated
    pieces (cheap at any depth); other bases and token mode walk packed
    arrays.  Raises :class:`LengthBudgetError` once an iterate passes
    ``max_length`` digits.
    """
    if iters < 0:
        raise ValueError("iteration count must be non-negative")
    if isinstance(seed, TokenString):
        arr = np.asarray(seed.tokens, dtype=np.int64)
        stepper = _token_array_step
    else:
        b = seed.base if base is None else base
        _check_base(b)
        if b < seed.base and set(seed.text) - _ALLOWED[b]:
            raise InvalidDigitError(f"seed has digits not valid in base {b}")
        if b <= 3:
            return _piece_lengths(seed.text, b, iters, max_length)
        arr = _text_to_array(seed.text)
        stepper = lambda x: _array_step(x, b)  # noqa: E731
    lengths = [int(arr.size)]
    for n in range(iters):
        arr = stepper(arr)
        if arr.size > max_length:
            raise LengthBudgetError(
                f"iterate {n + 1} has {arr.size} digits, over the budget of {max_length}"
            )
        lengths.append(int(arr.size))
    return lengths
