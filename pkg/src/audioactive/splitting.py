"""Splitting base-3 strings into independently evolving segments.

A cut L.R is a *split* when every future iterate of the whole equals the
concatenation of the iterates of L and R taken separately.  Splits are
characterized syntactically: a cut is valid exactly when

  1. L ends in 0 (and R starts with a non-0, which run bounds guarantee);
  2. L ends in 1, R starts with "22", and the rest of R after the "22" is
     forever-leading-2-free (an empty rest counts);
  3. L ends in 2 and R is forever-leading-2-free.

"Forever-leading-2-free" (flf) means no iterate ever begins with digit 2.
For the strings this module accepts, flf is itself syntactic: a string is
flf iff it is empty, starts with 0, or starts with 1 followed by one of
0 / 11 / a single 2 then a non-2-or-end / 222.  Note that the bare string
"1" is NOT flf: its second iterate is 21.

The characterization is proven on run-bounded strings; ``full`` mode is
therefore gated on a domain check that admits every ancient string (all
runs of length <= 3, at most one consecutive 0) plus runs of exactly four
1s immediately followed by a 0 or a 2, which is how the fixed strings
11110 and 11112 occur embedded in otherwise ancient material.  Everything
else must use ``conservative`` mode, whose only rule (cut after a 0 that
precedes a non-0) is valid for arbitrary strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import particles
from .core import DigitString, SplitDomainError

SplitMode = Literal["full", "conservative"]


@dataclass(frozen=True)
class Decomposition:
    """Irreducible segments of a string plus their registry identification."""

    segments: tuple[DigitString, ...]
    identified: tuple[particles.Particle | None, ...]

    def render(self) -> str:
        """Dotted factorization, e.g. ``10.110.2110.211``."""
        return ".".join(seg.text for seg in self.segments)

    def particle_names(self) -> str:
        """Dotted symbols with ``?`` for unidentified segments."""
        return ".".join(p.symbol if p else "?" for p in self.identified)

    @property
    def is_common(self) -> bool:
        return all(p is not None for p in self.identified)

    def multiset(self) -> dict[str, int]:
        """Particle counts; raises if any segment is unidentified."""
        if not self.is_common:
            raise ValueError("decomposition contains non-particle segments")
        return particles.multiset([p.symbol for p in self.identified])

    def to_json(self) -> dict:
        return {
            "segments": [seg.text for seg in self.segments],
            "particles": [p.symbol if p else None for p in self.identified],
            "common": self.is_common,
        }


# ---------------------------------------------------------------------------
# Text-level machinery (base 3 throughout)
# ---------------------------------------------------------------------------

def _suffix_flf(t: str, i: int = 0) -> bool:
    """Is the suffix t[i:] forever-leading-2-free?"""
    n = len(t)
    if i >= n:
        return True
    c = t[i]
    if c == "0":
        return True
    if c == "2":
        return False
    i += 1
    if i >= n:
        return False  # bare "1": 1 -> 11 -> 21 leads with 2
    c = t[i]
    if c == "0":
        return True
    if c == "1":
        return i + 1 < n and t[i + 1] == "1"
    # single 2 followed by non-2 or end, else exactly three 2s
    if i + 1 >= n or t[i + 1] != "2":
        return True
    return i + 2 < n and t[i + 2] == "2"


def _cut_positions(t: str) -> list[int]:
    """All valid split positions p (L = t[:p], R = t[p:]) of ``t``."""
    out = []
    n = len(t)
    for p in range(1, n):
        a = t[p - 1]
        if a == "0":
            if t[p] != "0":
                out.append(p)
        elif a == "1":
            if t[p] == "2" and p + 1 < n and t[p + 1] == "2" and _suffix_flf(t, p + 2):
                out.append(p)
        else:
            if _suffix_flf(t, p):
                out.append(p)
    return out


def _conservative_positions(t: str) -> list[int]:
    return [p for p in range(1, len(t)) if t[p - 1] == "0" and t[p] != "0"]


def _splittable(t: str) -> bool:
    """Domain gate for full mode: ancient, or neutrino-embedded ancient."""
    i, n = 0, len(t)
    while i < n:
        ch = t[i]
        j = i + 1
        while j < n and t[j] == ch:
            j += 1
        rl = j - i
        if ch == "0":
            if rl > 1:
                return False
        elif ch == "2":
            if rl > 3:
                return False
        else:
            # a run of four 1s is allowed only in 11110 / 11112 position
            # (followed by something; maximal runs force that to be 0 or 2)
            if rl > 4 or (rl == 4 and j >= n):
                return False
        i = j
    return True


def _factor(t: str) -> list[str]:
    """Fully factor ``t`` into irreducible segments.

    Cuts at every valid position, then re-factors each segment: a segment
    boundary can expose further cuts because flf is sensitive to the end of
    the string (e.g. 2122 cuts only as 21.22 at the top level, and 21 then
    cuts no further, but 12 appearing segment-final is flf where 122... was
    not).
    """
    if not t:
        return []
    if t in particles.PARTICLE_TEXTS:
        return [t]
    cuts = _cut_positions(t)
    if not cuts:
        return [t]
    out: list[str] = []
    prev = 0
    for p in cuts:
        out.extend(_factor(t[prev:p]))
        prev = p
    out.extend(_factor(t[prev:]))
    return out


def _conservative_factor(t: str) -> list[str]:
    if not t:
        return []
    cuts = _conservative_positions(t)
    pieces = []
    prev = 0
    for p in cuts:
        pieces.append(t[prev:p])
        prev = p
    pieces.append(t[prev:])
    return pieces


def _require_domain(s: DigitString) -> str:
    if s.base != 3:
        raise SplitDomainError(f"splitting is defined for base 3 only, got base {s.base}")
    if not _splittable(s.text):
        raise SplitDomainError(
            f"{s.text!r} is outside the proven splitting domain "
            "(needs runs <= 3, with 1111 only directly before a 0 or 2); "
            "use conservative mode"
        )
    return s.text


# ---------------------------------------------------------------------------
# Public surface
# ---------------------------------------------------------------------------

def is_flf(s: DigitString) -> bool:
    """Forever-leading-2-free test (syntactic).

    Only meaningful on strings within the splitting domain; in particular
    the characterization needs leading 1-runs of length <= 4 (a leading run
    of six 1s steps to 201..., which the pattern would miss).
    """
    if s.base != 3:
        raise SplitDomainError(f"flf is defined for base 3 only, got base {s.base}")
    return _suffix_flf(s.text)


def split_points(s: DigitString) -> list[int]:
    """Valid split positions of ``s`` (ascending), gated on the full domain."""
    return _cut_positions(_require_domain(s))


def split_points_conservative(s: DigitString) -> list[int]:
    """Positions where a 0 is followed by a non-0; valid for any string."""
    if s.base != 3:
        raise SplitDomainError(f"splitting is defined for base 3 only, got base {s.base}")
    return _conservative_positions(s.text)


def decompose(s: DigitString, mode: SplitMode = "full") -> Decomposition:
    """Factor ``s`` into irreducible segments and identify each one.

    ``full`` applies the split characterization repeatedly (and requires the
    splitting domain); ``conservative`` cuts only after 0s and accepts any
    base-3 string.
    """
    if mode == "full":
        texts = _factor(_require_domain(s))
    elif mode == "conservative":
        if s.base != 3:
            raise SplitDomainError(f"splitting is defined for base 3 only, got base {s.base}")
        texts = _conservative_factor(s.text)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    segments = tuple(DigitString(t, 3) for t in texts)
    return Decomposition(segments, tuple(particles.identify(t) for t in texts))


def is_irreducible(s: DigitString) -> bool:
    """True when ``s`` has no valid split position."""
    return not split_points(s)


def is_common(s: DigitString) -> bool:
    """True when every irreducible segment of ``s`` is a registry particle."""
    return decompose(s, "full").is_common
