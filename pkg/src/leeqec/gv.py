"""Existence bounds and information rates for Lee-weight CSS codes.

The finite bound is a counting argument: among all nested pairs
C1 < C2-dual with dim C1 = k1, dim C2 = k2, the fraction ruled out by a low
Lee weight vector is at most

    lhs = [ (p^(n-k1) - p^k2) N(p,n,d_z-1)
          + (p^(n-k2) - p^k1) N(p,n,d_x-1) ] / (p^n - 1)

with N the Lee ball size.  lhs < 1 certifies an [[n, n-k1-k2]]_p CSS code
whose undetected X / Z operators all have Lee weight >= d_x / d_z.  The
verdict is computed in exact rational arithmetic; floats only ever appear in
display strings, never in the comparison.

Since N counts the zero vector while the argument only needs nonzero ones,
the printed form mildly over-counts.  The tightened flag subtracts that one
vector from each ball; it matters only in corner cases such as d = 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fields import is_prime
from .lee import p_ary_entropy, sphere_size_dp
from .linear import (
    CssCode,
    EnumerationGuardError,
    LinearCode,
    QuantumLeeWeights,
    dual_code,
    quantum_lee_weights,
)

# witness search enumerates dual(c2) and dual(c1) in full; keep both small
WITNESS_SEARCH_GUARD = 10**6


@dataclass(frozen=True)
class GvQuery:
    """Parameters of one existence question."""

    p: int
    n: int
    k1: int
    k2: int
    d_x: int
    d_z: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"need an odd prime alphabet, got {self.p}")
        if self.n < 1:
            raise ValueError("need n >= 1")
        if self.k1 < 0 or self.k2 < 0:
            raise ValueError("need k1, k2 >= 0")
        if self.k1 + self.k2 > self.n:
            raise ValueError(
                f"k1 + k2 = {self.k1 + self.k2} exceeds n = {self.n}"
            )
        if self.d_x < 1 or self.d_z < 1:
            raise ValueError("need d_x, d_z >= 1")

    @property
    def dimension(self) -> int:
        return self.n - self.k1 - self.k2

    @property
    def code_params(self) -> str:
        return f"[[{self.n}, {self.dimension}]]_{self.p}"


def gv_lhs_parts(query: GvQuery, tightened: bool = False) -> tuple[int, int]:
    """(numerator, denominator) of the bound, unreduced, as big integers."""
    p, n = query.p, query.n
    ball_z = sphere_size_dp(p, n, query.d_z - 1).count
    ball_x = sphere_size_dp(p, n, query.d_x - 1).count
    if tightened:
        ball_z -= 1
        ball_x -= 1
    num = (p ** (n - query.k1) - p**query.k2) * ball_z
    num += (p ** (n - query.k2) - p**query.k1) * ball_x
    return num, p**n - 1


def gv_lhs(query: GvQuery, tightened: bool = False) -> Fraction:
    """The bound's left-hand side as an exact rational."""
    num, den = gv_lhs_parts(query, tightened)
    return Fraction(num, den)


@dataclass(frozen=True)
class GvVerdict:
    query: GvQuery
    lhs: Fraction
    exists: bool
    tightened: bool = False

    @property
    def code_params(self) -> str:
        return self.query.code_params


def gv_exists(query: GvQuery, tightened: bool = False) -> GvVerdict:
    """Existence verdict: exists iff lhs < 1, compared exactly."""
    lhs = gv_lhs(query, tightened)
    return GvVerdict(query=query, lhs=lhs, exists=lhs < 1, tightened=tightened)


def gv_scan(
    p: int, n: int, d_x: int, d_z: int, tightened: bool = False
) -> GvVerdict | None:
    """Best certified parameters at fixed (p, n, d_x, d_z).

    Scans k1 + k2 ascending (so the first hit has maximal dimension), breaking
    ties toward balanced then smaller k1.  None when no split is certified.
    """
    for s in range(0, n + 1):
        candidates = [
            (k1, s - k1) for k1 in range(s + 1) if k1 <= n and s - k1 <= n
        ]
        candidates.sort(key=lambda kk: (abs(kk[0] - kk[1]), kk[0]))
        for k1, k2 in candidates:
            verdict = gv_exists(GvQuery(p, n, k1, k2, d_x, d_z), tightened)
            if verdict.exists:
                return verdict
    return None


def rate_hamming(delta: float, p: int) -> float:
    """Asymptotic rate of the Hamming-metric counting bound at relative
    distance delta: 1 - h_p(delta) - delta log_p(p^2 - 1)."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime alphabet, got {p}")
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"relative distance {delta} outside [0, 1]")
    return 1.0 - p_ary_entropy(delta, p) - delta * math.log(p * p - 1, p)


def lee_excess_exponent(delta: float, p: int) -> float:
    """(2 + delta) h_p(delta / (2 + delta)): the exponential growth rate of a
    Lee ball of relative radius delta, per symbol, via the multiset bound."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime alphabet, got {p}")
    if delta < 0.0:
        raise ValueError(f"relative distance {delta} negative")
    return (2.0 + delta) * p_ary_entropy(delta / (2.0 + delta), p)


def rate_lee_asymptotic(delta: float, p: int) -> float:
    """Asymptotic certified rate in the Lee metric with both relative
    distances delta: 1 - 2 (2 + delta) h_p(delta / (2 + delta)).

    Negative values are meaningful (the bound certifies nothing there) and
    are returned unclamped.
    """
    return 1.0 - 2.0 * lee_excess_exponent(delta, p)


@dataclass(frozen=True)
class RatePoint:
    delta: float
    rate_hamming: float
    rate_lee: float


def rate_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive float grid start, start+step, ..., stop (robust to rounding)."""
    if step <= 0:
        raise ValueError("need step > 0")
    if stop < start:
        raise ValueError("need stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + i * step for i in range(count + 1)]


def rate_curve(p: int, deltas: Sequence[float]) -> list[RatePoint]:
    return [
        RatePoint(d, rate_hamming(d, p), rate_lee_asymptotic(d, p))
        for d in deltas
    ]


RATE_CSV_HEADER = "delta,rate_hamming,rate_lee"


def rate_curve_csv(points: Sequence[RatePoint]) -> str:
    """Fixed six-decimal CSV; negative rates are emitted as-is."""
    lines = [RATE_CSV_HEADER]
    for pt in points:
        lines.append(
            f"{pt.delta:.6f},{pt.rate_hamming:.6f},{pt.rate_lee:.6f}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of a random search for a code meeting a certified target."""

    query: GvQuery
    seed: int
    trials: int
    trials_used: int
    found: bool
    css: CssCode | None
    weights: QuantumLeeWeights | None


def _random_full_rank(
    rng: random.Random, p: int, rows: int, cols: int
) -> list[list[int]]:
    if rows > cols:
        raise ValueError("cannot have rank above the ambient dimension")
    while True:
        mat = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        if LinearCode(p, cols, mat).k == rows:
            return mat


def random_css_witness_search(
    query: GvQuery, trials: int, seed: int
) -> WitnessResult:
    """Sample nested pairs until one meets (d_x, d_z), checked by enumeration.

    Each trial draws a uniform (n-k2)-dimensional code, then a uniform
    k1-dimensional subcode of it; the pair is a CSS code by construction and
    its quantum Lee weights are measured exhaustively.  Same seed, same
    witness: the only randomness is the seeded generator.
    """
    if trials < 1:
        raise ValueError("need trials >= 1")
    p, n = query.p, query.n
    for k in (query.k1, query.k2):
        if p ** (n - k) > WITNESS_SEARCH_GUARD:
            raise EnumerationGuardError(
                f"witness verification would enumerate {p}^{n - k} vectors, "
                f"above the guard {WITNESS_SEARCH_GUARD}"
            )
    rng = random.Random(seed)
    for trial in range(1, trials + 1):
        outer = _random_full_rank(rng, p, n - query.k2, n)
        coeff = _random_full_rank(rng, p, query.k1, n - query.k2)
        inner = [
            [sum(c * row[j] for c, row in zip(cr, outer)) % p for j in range(n)]
            for cr in coeff
        ]
        c2_dual = LinearCode(p, n, outer)
        c1 = LinearCode(p, n, inner)
        css = CssCode(c1, dual_code(c2_dual))
        weights = quantum_lee_weights(css)
        if weights.d_x >= query.d_x and weights.d_z >= query.d_z:
            return WitnessResult(
                query=query,
                seed=seed,
                trials=trials,
                trials_used=trial,
                found=True,
                css=css,
                weights=weights,
            )
    return WitnessResult(
        query=query,
        seed=seed,
        trials=trials,
        trials_used=trials,
        found=False,
        css=None,
        weights=None,
    )
