"""Exhaustive decay verification over the essential ancient strings.

An *essential ancient string* has at most 16 digits, no run of length 4 or
more, and at most a single 0, which may only sit in the final position.
Checking that every one of them factors into registry particles within a
bounded number of steps settles the long-term behaviour of every base-3
string, because every string eventually decays into a combination of
particles and essential ancient strings.

The check itself follows the obvious loop: factor, test whether all
segments are particles, otherwise step once and repeat.  Segments evolve
independently once split off, so decay times are memoized per irreducible
segment and a string's time is the maximum over its segments.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Iterator

from . import particles
from .core import ConvergenceError, DigitString, _step_text
from .splitting import _conservative_factor, _factor, _require_domain, _splittable

MAX_ESSENTIAL_LENGTH = 16
DEFAULT_CAP = 10

_CHUNK = 2048


# ---------------------------------------------------------------------------
# Enumeration and counting
# ---------------------------------------------------------------------------

def _essential_texts(length: int) -> Iterator[str]:
    """Essential ancient strings of exactly ``length`` digits, lexicographic.

    Built digit by digit over {1, 2} with the run cap enforced during
    construction; the final position additionally admits 0.  This visits
    f(n-1) + f(n) strings instead of filtering all 3**n.
    """
    def rec(prefix: list[str], run_digit: str, run_len: int, remaining: int) -> Iterator[str]:
        if remaining == 1:
            for d in "012":
                if d != "0" and d == run_digit and run_len >= 3:
                    continue
                yield "".join(prefix) + d
            return
        for d in "12":
            if d == run_digit and run_len >= 3:
                continue
            prefix.append(d)
            yield from rec(prefix, d, 1 if d != run_digit else run_len + 1, remaining - 1)
            prefix.pop()

    if not 1 <= length <= MAX_ESSENTIAL_LENGTH:
        raise ValueError(f"length must be 1..{MAX_ESSENTIAL_LENGTH}, got {length}")
    yield from rec([], "", 0, length)


def enumerate_essential_ancient(length: int) -> Iterator[DigitString]:
    """Stream the essential ancient strings of a given length, sorted."""
    for text in _essential_texts(length):
        yield DigitString(text, 3)


def _comb0(m: int, j: int) -> int:
    return comb(m, j) if 0 <= j <= m else 0


def f_closed(n: int) -> int:
    """Closed-form count of zero-free essential ancient strings of length n.

    Counts length-n strings over {1, 2} with all runs of length <= 3 as a
    double binomial sum over the number of runs k, subtracting (by
    inclusion-exclusion) compositions with a part of size 4 or more.
    """
    if n < 2:
        raise ValueError("closed form is defined for n >= 2")
    total = 0
    for k in range(-(-n // 4), n + 1):
        inner = 0
        for r in range(1, n // 4 + 1):
            inner += (-1) ** (r + 1) * _comb0(k, r) * _comb0(n - 3 * r - 1, k - 1)
        total += _comb0(n - 1, k - 1) - inner
    return 2 * total


def f_recursive(n: int) -> int:
    """Same count via f(n) = f(n-1) + f(n-2) + f(n-3), f(1..3) = 2, 4, 8."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    a, b, c = 2, 4, 8  # f(1), f(2), f(3)
    if n == 1:
        return a
    if n == 2:
        return b
    for _ in range(n - 3):
        a, b, c = b, c, a + b + c
    return c


# ---------------------------------------------------------------------------
# Decay times
# ---------------------------------------------------------------------------

class _CapExceeded(Exception):
    pass


_TIME_CACHE: dict[str, int] = {}
_PARTICLE_TEXTS = particles.PARTICLE_TEXTS


def _decay_time(text: str, budget: int) -> int:
    """Iterations until ``text`` is fully common; raises past ``budget``.

    Only completed (budget-independent) values enter the cache, so cached
    entries are true decay times whatever cap they were found under.
    """
    got = _TIME_CACHE.get(text)
    if got is not None:
        if got > budget:
            raise _CapExceeded(text)
        return got
    worst = 0
    for part in _factor(text):
        if part in _PARTICLE_TEXTS:
            continue
        pt = _TIME_CACHE.get(part)
        if pt is None:
            if budget <= 0:
                raise _CapExceeded(text)
            pt = 1 + _decay_time(_step_text(part, 3), budget - 1)
            _TIME_CACHE[part] = pt
        if pt > budget:
            raise _CapExceeded(text)
        if pt > worst:
            worst = pt
    _TIME_CACHE[text] = worst
    return worst


def iterations_to_common(s: DigitString, cap: int = DEFAULT_CAP) -> int | None:
    """Smallest n <= cap whose n-th iterate factors into particles, else None."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    text = _require_domain(s)
    try:
        return _decay_time(text, cap)
    except _CapExceeded:
        return None


def _chunk_times(args: tuple[list[str], int]) -> list[int | None]:
    texts, cap = args
    out: list[int | None] = []
    for text in texts:
        try:
            out.append(_decay_time(text, cap))
        except _CapExceeded:
            out.append(None)
    return out


# ---------------------------------------------------------------------------
# The verification run
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecayTable:
    """Counts of essential ancient strings by (length, decay time)."""

    cells: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    cap: int = DEFAULT_CAP

    def cell(self, length: int, iters: int) -> int:
        return self.cells[self.lengths.index(length)][iters]

    def row(self, length: int) -> tuple[int, ...]:
        return self.cells[self.lengths.index(length)]

    def row_total(self, length: int) -> int:
        return sum(self.row(length))

    @property
    def total_strings(self) -> int:
        return sum(sum(row) for row in self.cells)

    def to_csv(self) -> str:
        header = "length," + ",".join(f"iter{i}" for i in range(self.cap + 1)) + ",total"
        lines = [header]
        for length, row in zip(self.lengths, self.cells):
            lines.append(f"{length}," + ",".join(map(str, row)) + f",{sum(row)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "cap": self.cap,
            "rows": [
                {"length": length, "iterations": list(row), "total": sum(row)}
                for length, row in zip(self.lengths, self.cells)
            ],
            "total_strings": self.total_strings,
        }


@dataclass(frozen=True)
class CosmologyReport:
    table: DecayTable
    verified: bool
    max_iterations: int
    failures: tuple[str, ...]

    @property
    def total_strings(self) -> int:
        return self.table.total_strings


def verify_cosmological(
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    lengths: Iterable[int] | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> CosmologyReport:
    """Run the decay check over every essential ancient string.

    The verdict is success iff no string needs more than ``cap`` iterations;
    any counterexample is carried in ``failures`` (none is expected).  With
    ``jobs`` > 1 the strings are distributed over worker processes; counts
    are merged by summation, so the table is identical for any job count.
    """
    lens = tuple(lengths) if lengths is not None else tuple(range(1, MAX_ESSENTIAL_LENGTH + 1))
    rows: list[tuple[int, ...]] = []
    failures: list[str] = []
    max_seen = 0
    pool = multiprocessing.Pool(jobs) if jobs > 1 else None
    try:
        for length in lens:
            texts = list(_essential_texts(length))
            if pool is None:
                times = _chunk_times((texts, cap))
            else:
                chunks = [texts[i : i + _CHUNK] for i in range(0, len(texts), _CHUNK)]
                results = pool.map(_chunk_times, [(chunk, cap) for chunk in chunks])
                times = [t for chunk_times in results for t in chunk_times]
            row = [0] * (cap + 1)
            for text, t in zip(texts, times):
                if t is None:
                    failures.append(text)
                else:
                    row[t] += 1
                    if t > max_seen:
                        max_seen = t
            rows.append(tuple(row))
            if progress is not None:
                progress(length, len(texts))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    table = DecayTable(tuple(rows), lens, cap)
    return CosmologyReport(
        table=table,
        verified=not failures,
        max_iterations=max_seen,
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# k-values: long-run particle support of arbitrary seeds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KValueReport:
    """Support of the particle population in all old enough descendants."""

    seed: DigitString
    iterations: int
    counts: tuple[tuple[str, int], ...]
    limsup: frozenset[str]
    liminf: frozenset[str]
    stabilized: bool
    k: int | tuple[int, int]

    def to_json(self) -> dict:
        return {
            "seed": self.seed.text,
            "iterations_to_common": self.iterations,
            "multiset": dict(self.counts),
            "limsup": sorted(self.limsup, key=particles.REGISTRY_ORDER.index),
            "liminf": sorted(self.liminf, key=particles.REGISTRY_ORDER.index),
            "stabilized": self.stabilized,
            "k": list(self.k) if isinstance(self.k, tuple) else self.k,
        }


def _common_multiset(text: str) -> dict[str, int] | None:
    """Particle counts if ``text`` is fully common right now, else None.

    Conservative cuts first (valid anywhere), then full factorization of
    each piece that lies in the splitting domain.
    """
    symbols: list[str] = []
    for piece in _conservative_factor(text):
        if piece in _PARTICLE_TEXTS:
            symbols.append(particles.identify(piece).symbol)
            continue
        if not _splittable(piece):
            return None
        for part in _factor(piece):
            p = particles.identify(part)
            if p is None:
                return None
            symbols.append(p.symbol)
    return particles.multiset(symbols)


def k_value(
    s: DigitString,
    max_iter: int = 64,
    window: int = 32,
    warmup: int = 32,
) -> KValueReport:
    """Iterate ``s`` until fully common, then measure its long-run support.

    ``k`` is the size of the support when limsup and liminf agree over the
    observation window; otherwise both sizes are reported as a pair and
    ``stabilized`` is False.
    """
    if s.base != 3:
        raise ValueError("k-values are defined for base-3 strings")
    if not s.text:
        raise ValueError("seed must be non-empty")
    text = s.text
    ms: dict[str, int] | None = None
    iterations = 0
    for n in range(max_iter + 1):
        ms = _common_multiset(text)
        if ms is not None:
            iterations = n
            break
        text = _step_text(text, 3)
    if ms is None:
        raise ConvergenceError(
            f"{s.text!r} did not become fully common within {max_iter} iterations"
        )
    limsup, liminf = particles.limit_sets(ms, warmup, window)
    stabilized = limsup == liminf
    k: int | tuple[int, int] = len(limsup) if stabilized else (len(liminf), len(limsup))
    return KValueReport(
        seed=s,
        iterations=iterations,
        counts=tuple(sorted(ms.items(), key=lambda kv: particles.REGISTRY_ORDER.index(kv[0]))),
        limsup=limsup,
        liminf=liminf,
        stabilized=stabilized,
        k=k,
    )
