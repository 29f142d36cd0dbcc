"""A Lee-weight-damped error channel and a seeded Monte Carlo harness.

Each qudit independently suffers an (a, b) pair of X-type / Z-type shifts
with probability proportional to alpha_c^w_L(a) * beta_c^w_L(b) (0^0 = 1, so
alpha_c = 0 silences that side entirely).  The joint table factorizes into
the two marginals by construction.

The simulator draws i.i.d. error vectors by inverse CDF, decodes each side
with a syndrome table, and counts logical failures: a side fails when the
residual (estimate minus truth) falls outside the logical-identity coset.
Everything is driven by one seeded generator, so a (seed, parameters) pair
pins down the entire run byte for byte.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fields import is_prime
from .lee import lee_weight_vector, symbol_weight_multiplicities
from .linear import CssCode, LinearCode, syndrome
from .negacyclic import LeeDecoder


@dataclass(frozen=True)
class ChannelParams:
    p: int
    alpha_c: float
    beta_c: float

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"need an odd prime alphabet, got {self.p}")
        for name, u in (("alpha_c", self.alpha_c), ("beta_c", self.beta_c)):
            if not 0.0 <= u < 1.0:
                raise ValueError(f"{name} = {u} outside [0, 1)")

    @property
    def gamma(self) -> float:
        """Joint normalizer 1 / (S(alpha_c) S(beta_c))."""
        return 1.0 / (_normalizer(self.p, self.alpha_c) * _normalizer(self.p, self.beta_c))


def _normalizer(p: int, u: float) -> float:
    # S(u) = sum over symbols of u^w_L; 0.0**0 == 1.0 covers the u = 0 edge
    return sum(m * u**w for w, m in enumerate(symbol_weight_multiplicities(p)))


def _marginal(p: int, u: float) -> tuple[float, ...]:
    s = _normalizer(p, u)
    probs = [0.0] * p
    probs[0] = 1.0 / s
    for w in range(1, (p - 1) // 2 + 1):
        probs[w] = u**w / s
        probs[p - w] = u**w / s
    return tuple(probs)


@dataclass(frozen=True)
class SymbolDistribution:
    """Per-symbol error law: the p x p joint table and its two marginals."""

    params: ChannelParams
    marginal_x: tuple[float, ...]
    marginal_z: tuple[float, ...]
    joint: tuple[tuple[float, ...], ...]


def symbol_distribution(params: ChannelParams) -> SymbolDistribution:
    mx = _marginal(params.p, params.alpha_c)
    mz = _marginal(params.p, params.beta_c)
    joint = tuple(tuple(a * b for b in mz) for a in mx)
    return SymbolDistribution(params=params, marginal_x=mx, marginal_z=mz, joint=joint)


class _CoordinateSampler:
    """Inverse-CDF sampler for one marginal."""

    __slots__ = ("cdf",)

    def __init__(self, marginal: Sequence[float]):
        cdf = []
        acc = 0.0
        for q in marginal:
            acc += q
            cdf.append(acc)
        cdf[-1] = 1.0  # absorb float rounding at the top end
        self.cdf = cdf

    def draw(self, rng: random.Random) -> int:
        return bisect_right(self.cdf, rng.random())


@dataclass(frozen=True)
class ErrorSample:
    e_x: tuple[int, ...]
    e_z: tuple[int, ...]


def sample_error(params: ChannelParams, n: int, seed: int) -> ErrorSample:
    """One i.i.d. error pair; the X vector is drawn first, then the Z vector."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    dist = symbol_distribution(params)
    sx = _CoordinateSampler(dist.marginal_x)
    sz = _CoordinateSampler(dist.marginal_z)
    e_x = tuple(sx.draw(rng) for _ in range(n))
    e_z = tuple(sz.draw(rng) for _ in range(n))
    return ErrorSample(e_x=e_x, e_z=e_z)


def tail_weight_probability(
    p: int, n: int, t: int, u: float | Fraction
) -> Fraction:
    """Exact Pr[w_L(e) > t] for an i.i.d. vector with damping parameter u.

    Computed as 1 minus the convolved head of the per-symbol weight law, in
    rational arithmetic (a float u is taken at its exact binary value).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if t < 0:
        raise ValueError("need t >= 0")
    uq = Fraction(u)
    if not 0 <= uq < 1:
        raise ValueError(f"parameter {u} outside [0, 1)")
    mult = symbol_weight_multiplicities(p)
    s = sum(m * uq**w for w, m in enumerate(mult))
    per = [Fraction(m) * uq**w / s for w, m in enumerate(mult)]
    dist = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(dist) + len(per) - 1)
        for i, a in enumerate(dist):
            for j, b in enumerate(per):
                nxt[i + j] += a * b
        dist = nxt
    head = sum(dist[: t + 1])
    return 1 - head


@dataclass(frozen=True)
class SimulationReport:
    params: ChannelParams
    n: int
    t: int
    trials: int
    seed: int
    fail_x: int
    fail_z: int
    fail_joint: int

    @property
    def rate_x(self) -> float:
        return self.fail_x / self.trials

    @property
    def rate_z(self) -> float:
        return self.fail_z / self.trials

    @property
    def rate_joint(self) -> float:
        return self.fail_joint / self.trials

    @property
    def predicted_joint(self) -> float:
        """Joint rate if the two sides failed independently."""
        return 1.0 - (1.0 - self.rate_x) * (1.0 - self.rate_z)

    def ci_halfwidth(self, rate: float) -> float:
        """95% normal-approximation binomial half-width."""
        return 1.96 * math.sqrt(rate * (1.0 - rate) / self.trials)

    @property
    def ci_x(self) -> float:
        return self.ci_halfwidth(self.rate_x)

    @property
    def ci_z(self) -> float:
        return self.ci_halfwidth(self.rate_z)

    CSV_HEADER = "alpha_c,beta_c,trials,fail_x,fail_z,fail_joint,ci_x,ci_z"

    def csv_row(self) -> str:
        return (
            f"{self.params.alpha_c:.6f},{self.params.beta_c:.6f},{self.trials},"
            f"{self.rate_x:.6f},{self.rate_z:.6f},{self.rate_joint:.6f},"
            f"{self.ci_x:.6f},{self.ci_z:.6f}"
        )

    def csv(self) -> str:
        return self.CSV_HEADER + "\n" + self.csv_row() + "\n"


def _side_fails(
    e: tuple[int, ...],
    measured_by: LinearCode,
    logical_identity: LinearCode,
    decoder: LeeDecoder,
) -> bool:
    s = syndrome(measured_by, e)
    est = decoder.decode(s)
    if est is None:
        return True  # uncorrectable within the radius counts as failure
    p = measured_by.p
    residual = [(a - b) % p for a, b in zip(est, e)]
    return not logical_identity.contains_vector(residual)


def run_monte_carlo(
    css: CssCode,
    decoder: LeeDecoder,
    params: ChannelParams,
    trials: int,
    seed: int,
) -> SimulationReport:
    """Seeded logical-failure estimate for the symmetric CSS pair.

    X errors are measured against c2 and judged modulo c1; Z errors the other
    way around.  A trial inside the decoding radius can never fail (the table
    is exhaustive); that invariant is asserted on every trial.
    """
    if trials < 1:
        raise ValueError("need trials >= 1")
    if decoder.css != css:
        raise ValueError("decoder was built for a different code")
    if params.p != css.p:
        raise ValueError(f"channel alphabet {params.p} != code alphabet {css.p}")
    dist = symbol_distribution(params)
    sx = _CoordinateSampler(dist.marginal_x)
    sz = _CoordinateSampler(dist.marginal_z)
    rng = random.Random(seed)
    n, t = css.n, decoder.t
    fail_x = fail_z = fail_joint = 0
    for _ in range(trials):
        e_x = tuple(sx.draw(rng) for _ in range(n))
        e_z = tuple(sz.draw(rng) for _ in range(n))
        fx = _side_fails(e_x, css.c2, css.c1, decoder)
        fz = _side_fails(e_z, css.c1, css.c2, decoder)
        if fx and lee_weight_vector(e_x, css.p) <= t:
            raise RuntimeError(f"X failure inside the decoding radius: {e_x}")
        if fz and lee_weight_vector(e_z, css.p) <= t:
            raise RuntimeError(f"Z failure inside the decoding radius: {e_z}")
        fail_x += fx
        fail_z += fz
        fail_joint += fx or fz
    return SimulationReport(
        params=params,
        n=n,
        t=t,
        trials=trials,
        seed=seed,
        fail_x=fail_x,
        fail_z=fail_z,
        fail_joint=fail_joint,
    )
