"""Fermion transition matrix, growth rate, and limiting frequencies.

Fermions only produce fermions, so their population dynamics are linear:
entry (i, j) of the transition matrix counts copies of fermion i in the
decay of fermion j.  The dominant eigenvalue of that matrix is the
asymptotic length growth rate of any string that is not purely neutrinos,
and the normalized row totals of its large powers give the limiting
relative frequencies of the eight fermions.

The growth rate is both computed numerically (power iteration) and
certified symbolically: the exact characteristic polynomial must be
divisible by x^3 - x - 1, whose unique real root is the dominant
eigenvalue.  Neither route trusts the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import particles
from .core import (
    DEFAULT_LENGTH_BUDGET,
    ConvergenceError,
    DigitString,
    TokenString,
    length_sequence,
)

MATRIX_ORDER = particles.MATRIX_ORDER

# Growth-rate polynomial x^3 - x - 1, highest degree first.
GROWTH_POLYNOMIAL = (1, 0, -1, -1)


@dataclass(frozen=True)
class TransitionMatrix:
    """Nonnegative integer matrix over a fixed symbol ordering."""

    entries: tuple[tuple[int, ...], ...]
    order: tuple[str, ...] = MATRIX_ORDER

    def __post_init__(self):
        n = len(self.order)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("matrix shape does not match the symbol order")
        if any(v < 0 for row in self.entries for v in row):
            raise ValueError("entries must be non-negative")

    @property
    def size(self) -> int:
        return len(self.order)

    def entry(self, produced: str, parent: str) -> int:
        return self.entries[self.order.index(produced)][self.order.index(parent)]

    def column(self, parent: str) -> tuple[int, ...]:
        j = self.order.index(parent)
        return tuple(row[j] for row in self.entries)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.size))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=float)


_FERMION_MATRIX = (
    #  E  M  D  B  U  S  T  C
    (0, 1, 0, 0, 0, 0, 1, 0),  # E
    (1, 0, 0, 0, 0, 0, 0, 0),  # M
    (0, 0, 0, 0, 1, 0, 0, 1),  # D
    (0, 0, 0, 0, 0, 0, 1, 1),  # B
    (0, 1, 0, 0, 0, 0, 0, 0),  # U
    (0, 0, 1, 0, 0, 0, 0, 0),  # S
    (0, 0, 0, 1, 0, 0, 0, 0),  # T
    (0, 0, 0, 0, 0, 1, 0, 0),  # C
)


def fermion_matrix() -> TransitionMatrix:
    """The 8x8 fermion transition matrix (hardcoded)."""
    return TransitionMatrix(_FERMION_MATRIX)


def matrix_from_chart(rules: Sequence[particles.DecayRule] | None = None) -> TransitionMatrix:
    """Tally a transition matrix from decay rules restricted to fermions.

    Oracle for :func:`fermion_matrix`.  Rules for non-fermion parents are
    ignored; a fermion rule with a non-fermion product is a contract error.
    """
    if rules is None:
        rules = particles.decay_chart()
    n = len(MATRIX_ORDER)
    grid = [[0] * n for _ in range(n)]
    for rule in rules:
        if rule.parent.kind is not particles.ParticleClass.FERMION:
            continue
        j = MATRIX_ORDER.index(rule.parent.symbol)
        for product in rule.products:
            if product.kind is not particles.ParticleClass.FERMION:
                raise ValueError(
                    f"fermion {rule.parent.symbol} lists non-fermion product {product.symbol}"
                )
            grid[MATRIX_ORDER.index(product.symbol)][j] += 1
    return TransitionMatrix(tuple(tuple(row) for row in grid))


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------

def dominant_eigenvalue(
    m: TransitionMatrix, tol: float = 1e-12, max_iter: int = 100_000
) -> float:
    """Dominant eigenvalue by power iteration with Rayleigh-quotient stopping.

    Requires a primitive matrix (some power entrywise positive) so that a
    single dominant eigenvalue exists; stops once successive Rayleigh
    quotients differ by less than ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = m.to_array()
    v = np.ones(m.size) / np.sqrt(m.size)
    prev = float("inf")
    for _ in range(max_iter):
        w = a @ v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            raise ConvergenceError("power iteration hit the zero vector")
        lam = float(v @ w)
        v = w / norm
        if abs(lam - prev) < tol:
            return lam
        prev = lam
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def characteristic_polynomial(m: TransitionMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Exact integer coefficients of det(xI - A), highest degree first.

    Division-free (Samuelson-Berkowitz): the polynomial of each leading
    principal submatrix is obtained from the previous one by a Toeplitz
    convolution, so only integer products and sums occur.
    """
    rows = m.entries if isinstance(m, TransitionMatrix) else m
    a = [[int(v) for v in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n > 16:
        raise ValueError("supported up to size 16")
    if n == 0:
        return (1,)
    poly = [1, -a[0][0]]
    for k in range(1, n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        sub = [r[:k] for r in a[:k]]
        toeplitz = [1, -a[k][k]]
        v = col
        for _ in range(k):
            toeplitz.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(sub_row[j] * v[j] for j in range(k)) for sub_row in sub]
        new = [0] * (k + 2)
        for i, ti in enumerate(toeplitz):
            for j, pj in enumerate(poly):
                if i + j <= k + 1:
                    new[i + j] += ti * pj
        poly = new
    return tuple(poly)


def polynomial_division(
    numerator: Sequence[int], divisor: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exact polynomial long division over the integers (monic divisor).

    Coefficients are highest degree first; returns (quotient, remainder)
    with the remainder stripped of leading zeros (empty tuple for zero).
    """
    den = list(divisor)
    if not den or den[0] != 1:
        raise ValueError("divisor must be monic")
    num = list(numerator)
    quotient = []
    while len(num) >= len(den):
        factor = num[0]
        quotient.append(factor)
        for i, c in enumerate(den):
            num[i] -= factor * c
        num.pop(0)
    while num and num[0] == 0:
        num.pop(0)
    return tuple(quotient), tuple(num)


def primitivity_power(m: TransitionMatrix, bound: int = 64) -> int | None:
    """Smallest p <= bound with m**p entrywise positive, via exact powers."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = m.size
    power = [list(row) for row in m.entries]
    for p in range(1, bound + 1):
        if all(v > 0 for row in power for v in row):
            return p
        power = [
            [sum(power[i][t] * m.entries[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return None


def eigenvalues(m: TransitionMatrix) -> list[complex]:
    """All eigenvalues, as roots of the exact characteristic polynomial.

    Roots are extracted with the companion-matrix method and sorted by
    descending magnitude (ties by real part, then imaginary part).
    """
    roots = np.roots(np.asarray(characteristic_polynomial(m), dtype=float))
    return sorted(
        (complex(z) for z in roots),
        key=lambda z: (-abs(z), -z.real, z.imag),
    )


def limiting_frequencies(
    m: TransitionMatrix | None = None, power: int = 256
) -> dict[str, float]:
    """Limiting relative frequencies from row totals of a large matrix power.

    Row i of m**power is summed and divided by the total of all entries;
    powers are accumulated in floating point with per-multiplication
    renormalization, since exact entries overflow fixed-width integers long
    before convergence.
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    if m is None:
        m = fermion_matrix()
    a = m.to_array()
    acc = a.copy()
    for _ in range(power - 1):
        acc = acc @ a
        acc /= acc.sum()
    row_totals = acc.sum(axis=1)
    freqs = row_totals / row_totals.sum()
    return {sym: float(freqs[i]) for i, sym in enumerate(m.order)}


# ---------------------------------------------------------------------------
# Empirical growth
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthEstimate:
    """Observed length growth of an iterated seed."""

    seed: str
    base: int | None  # None marks token mode
    lengths: tuple[int, ...]
    ratios: tuple[float, ...]
    estimate: float

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "base": self.base,
            "iterations": len(self.lengths) - 1,
            "lengths": list(self.lengths),
            "estimate": self.estimate,
        }


def empirical_growth(
    seed: DigitString | TokenString,
    iters: int,
    base: int | None = None,
    max_length: int = DEFAULT_LENGTH_BUDGET,
) -> GrowthEstimate:
    """Iterate a seed and estimate the length growth rate.

    The estimate is the geometric mean of the final quarter of the
    consecutive length ratios, which discards the transient.  Lengths are
    computed on packed arrays; a run past ``max_length`` digits raises
    :class:`LengthBudgetError`.
    """
    if iters < 10:
        raise ValueError("need at least 10 iterations for a meaningful estimate")
    if len(seed) == 0:
        raise ValueError("seed must be non-empty")
    lengths = length_sequence(seed, iters, base=base, max_length=max_length)
    ratios = tuple(lengths[i] / lengths[i - 1] for i in range(1, len(lengths)))
    tail = max(1, iters // 4)
    estimate = (lengths[-1] / lengths[-1 - tail]) ** (1.0 / tail)
    if isinstance(seed, TokenString):
        seed_text, eff_base = seed.render(), None
    else:
        seed_text, eff_base = seed.text, base if base is not None else seed.base
    return GrowthEstimate(
        seed=seed_text,
        base=eff_base,
        lengths=tuple(lengths),
        ratios=ratios,
        estimate=float(estimate),
    )


# ---------------------------------------------------------------------------
# CSV emission
# ---------------------------------------------------------------------------

def frequencies_csv(freqs: dict[str, float]) -> str:
    lines = ["particle,frequency"]
    lines += [f"{sym},{freqs[sym]:.6f}" for sym in MATRIX_ORDER]
    return "\n".join(lines) + "\n"


def charpoly_csv(coeffs: Sequence[int]) -> str:
    degree = len(coeffs) - 1
    lines = ["coeff_degree,coeff_value"]
    lines += [f"{degree - i},{c}" for i, c in enumerate(coeffs)]
    return "\n".join(lines) + "\n"


def eigenvalues_csv(values: Sequence[complex]) -> str:
    lines = ["re,im"]
    lines += [f"{z.real:.9f},{z.imag:.9f}" for z in values]
    return "\n".join(lines) + "\n"
