"""Lee weights and exact ball counting over F_p^n.

The Lee weight of a symbol x mod l is min(x, l - x): the circular distance to
zero.  Three counters for the ball {x : w_L(x) <= d} live here:

* a closed-form sum  sum_i 2^i C(n,i) C(d,i),  valid only while d < p/2
  (symbol weights are then still in bijection with +/- signed magnitudes);
* a convolution count over the per-symbol weight enumerator, valid for every
  d and saturating at p^n;
* a p-free upper bound  C(2n+d-1, d) + C(2n+d-2, d-1)  counting signed
  multisets, which dominates the true count for all d.

Counts are plain Python integers, so nothing overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .fields import is_prime

CountMethod = Literal["exact_formula", "dp_oracle", "upper_bound"]


def lee_weight(x: int, modulus: int) -> int:
    """Lee weight of a single symbol; modulus may be any integer >= 2."""
    if modulus < 2:
        raise ValueError("need modulus >= 2")
    if not 0 <= x < modulus:
        raise ValueError(f"symbol {x} outside canonical range [0, {modulus})")
    return min(x, modulus - x)


def lee_weight_vector(v: Sequence[int], modulus: int) -> int:
    """Sum of coordinate Lee weights."""
    return sum(lee_weight(x, modulus) for x in v)


def _check_counting_args(p: int, n: int, d: int) -> None:
    # counting machinery assumes the odd-prime symbol alphabet: weight 0 once,
    # each weight 1..(p-1)/2 exactly twice
    if not is_prime(p) or p == 2:
        raise ValueError(f"counting requires an odd prime alphabet, got {p}")
    if n < 1:
        raise ValueError("need length n >= 1")
    if d < 0:
        raise ValueError("need radius d >= 0")


def symbol_weight_multiplicities(p: int) -> tuple[int, ...]:
    """How many symbols of F_p have each Lee weight 0..(p-1)/2."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    return (1,) + (2,) * ((p - 1) // 2)


@lru_cache(maxsize=None)
def weight_distribution(p: int, n: int) -> tuple[int, ...]:
    """Exact count of vectors in F_p^n at each Lee weight 0..n*(p-1)/2.

    n-fold convolution of the per-symbol multiplicities; the total is p^n.
    """
    mult = symbol_weight_multiplicities(p)
    dist = [1]
    for _ in range(n):
        nxt = [0] * (len(dist) + len(mult) - 1)
        for i, a in enumerate(dist):
            if a == 0:
                continue
            for j, b in enumerate(mult):
                nxt[i + j] += a * b
        dist = nxt
    return tuple(dist)


@dataclass(frozen=True)
class LeeSphereCount:
    """A ball count |{x in F_p^n : w_L(x) <= d}| together with how it was got."""

    p: int
    n: int
    d: int
    count: int
    method: CountMethod

    def __post_init__(self) -> None:
        if not 1 <= self.count <= self.p**self.n:
            raise ValueError(
                f"count {self.count} outside [1, {self.p}^{self.n}]"
            )


def sphere_size_exact(p: int, n: int, d: int) -> LeeSphereCount:
    """Closed-form ball size, valid only for d < p/2.

    sum_{i=0}^{n} 2^i C(n,i) C(d,i): choose i nonzero coordinates, a sign for
    each, and magnitudes via a stars-and-bars bijection.  The bijection needs
    every magnitude to stay below p/2, hence the radius restriction (enforced,
    not clamped).
    """
    _check_counting_args(p, n, d)
    if 2 * d >= p:
        raise ValueError(
            f"closed form requires d < p/2 (got d={d}, p={p}); use the "
            "convolution count instead"
        )
    total = 0
    for i in range(n + 1):
        total += 2**i * math.comb(n, i) * math.comb(d, i)
    return LeeSphereCount(p, n, d, total, "exact_formula")


def sphere_size_dp(p: int, n: int, d: int) -> LeeSphereCount:
    """Ball size by prefix-summing the exact weight distribution.

    Valid for every d >= 0; for d >= n*(p-1)/2 the count saturates at p^n.
    """
    _check_counting_args(p, n, d)
    dist = weight_distribution(p, n)
    total = sum(dist[: d + 1])
    return LeeSphereCount(p, n, d, total, "dp_oracle")


def sphere_size_upper(n: int, d: int) -> int:
    """p-free upper bound C(2n+d-1, d) + C(2n+d-2, d-1) on any Lee ball.

    Counts multisets of signed unit steps; it never undercounts but can
    exceed p^n, so it is returned as a bare integer rather than a ball count.
    """
    if n < 1:
        raise ValueError("need length n >= 1")
    if d < 0:
        raise ValueError("need radius d >= 0")
    total = math.comb(2 * n + d - 1, d)
    if d >= 1:
        total += math.comb(2 * n + d - 2, d - 1)
    return total


def p_ary_entropy(y: float, base: float) -> float:
    """-y log_b y - (1-y) log_b (1-y), with the limits h(0) = h(1) = 0."""
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"entropy argument {y} outside [0, 1]")
    if base <= 1:
        raise ValueError(f"entropy base {base} must exceed 1")
    if y == 0.0 or y == 1.0:
        return 0.0
    lb = math.log(base)
    return -y * math.log(y) / lb - (1.0 - y) * math.log(1.0 - y) / lb
