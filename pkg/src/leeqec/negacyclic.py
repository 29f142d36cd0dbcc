"""Negacyclic CSS constructions with designed Lee distance, plus a decoder.

A negacyclic code of length n over F_p is an ideal of F_p[x]/(x^n + 1); it is
cut out by a monic generator g dividing x^n + 1, whose roots are odd powers
of a primitive 2n-th root of unity alpha.  Designing g to vanish on
alpha^1, alpha^3, ..., alpha^(2t-1) forces every nonzero codeword of the code
generated by g to Lee weight at least min(p, 2t+1).

The CSS pair uses C = the code generated by h (the normalized reversal of
(x^n + 1)/g) on both sides.  C sits inside its own dual exactly when g
divides h; that containment is a property of (p, n, t), so it is checked at
construction time and a failure rejects the parameters rather than producing
a broken code.  Everything downstream (generator matrices, the syndrome
table) is deterministic given (p, n, t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .fields import (
    Polynomial,
    find_primitive_2n_root,
    minimal_polynomial,
    odd_cyclotomic_cosets,
    reciprocal_polynomial,
)
from .lee import sphere_size_dp, symbol_weight_multiplicities
from .linear import (
    ENUMERATION_GUARD,
    CssCode,
    EnumerationGuardError,
    LinearCode,
    QuantumLeeWeights,
    contains,
    dual_code,
    min_lee_weight,
    quantum_lee_weights,
    syndrome,
)

# syndrome tables are dicts in memory; refuse absurd ones outright
DECODER_TABLE_GUARD = 10**6


class DegenerateCodeError(ValueError):
    """The designed roots exhaust x^n + 1, leaving the zero code."""


class ContainmentError(ValueError):
    """g does not divide h, so C is not inside its dual for these parameters."""


class DecodingRadiusError(ValueError):
    """Two correctable errors share a syndrome: the radius is not supported."""


@dataclass(frozen=True)
class NegacyclicCode:
    """Generator data for the dual-side code: <g> inside F_p[x]/(x^n + 1)."""

    p: int
    n: int
    designed_t: int
    g: Polynomial


def negacyclic_modulus(p: int, n: int) -> Polynomial:
    return Polynomial([1] + [0] * (n - 1) + [1], p)


def code_from_generator_poly(q: Polynomial, n: int) -> LinearCode:
    """Matrix view of the ideal <q>: rows are x^i q(x) for i < n - deg q.

    Valid because deg q <= n and none of those shifts wrap past x^n.
    """
    if q.is_zero or q.degree > n:
        raise ValueError(f"generator {q} incompatible with length {n}")
    if q.degree == n:
        return LinearCode(q.p, n)  # the zero code
    rows = []
    base = list(q.coeffs)
    for i in range(n - q.degree):
        rows.append([0] * i + base + [0] * (n - q.degree - 1 - i))
    return LinearCode(q.p, n, rows)


def design_generator(p: int, n: int, t: int) -> NegacyclicCode:
    """Smallest g vanishing on alpha^(2i-1) for i = 1..t.

    g is the product of the minimal polynomials of the cyclotomic cosets that
    the designed exponents land in (each coset taken once).  Requires t >= 1,
    2t - 1 < 2n, and p coprime to 2n.  If the designed roots swallow all of
    x^n + 1 the construction is degenerate and rejected.
    """
    if t < 1:
        raise ValueError("need t >= 1: the construction starts at the first odd power")
    if 2 * t - 1 >= 2 * n:
        raise ValueError(f"designed exponent 2t-1 = {2 * t - 1} must stay below 2n = {2 * n}")
    alpha = find_primitive_2n_root(p, n)  # also validates p coprime to 2n
    cosets = odd_cyclotomic_cosets(p, n)
    by_member = {j: c for c in cosets for j in c.members}
    hit = {}
    for i in range(1, t + 1):
        c = by_member[(2 * i - 1) % (2 * n)]
        hit[c.representative] = c
    g = Polynomial.one(p)
    for rep in sorted(hit):
        g = g * minimal_polynomial(hit[rep], alpha)
    if g.degree == n:
        raise DegenerateCodeError(
            f"designed roots for (p={p}, n={n}, t={t}) exhaust x^{n} + 1; "
            "the resulting code is zero"
        )
    code = NegacyclicCode(p=p, n=n, designed_t=t, g=g)
    _validate_generator(code, alpha)
    return code


def _validate_generator(code: NegacyclicCode, alpha) -> None:
    mod = negacyclic_modulus(code.p, code.n)
    if not (mod % code.g).is_zero:
        raise RuntimeError(f"generator {code.g} does not divide x^{code.n} + 1")
    field = alpha.field
    for i in range(1, code.designed_t + 1):
        if field.eval_poly(code.g, alpha ** (2 * i - 1)) != field.zero:
            raise RuntimeError(
                f"generator {code.g} misses designed root alpha^{2 * i - 1}"
            )


def derive_h(code: NegacyclicCode) -> Polynomial:
    """h = normalized reversal of (x^n + 1) / g; the generator of C."""
    mod = negacyclic_modulus(code.p, code.n)
    ghat, rem = divmod(mod, code.g)
    if not rem.is_zero:
        raise ValueError(f"{code.g} does not divide x^{code.n} + 1")
    return reciprocal_polynomial(ghat)


def check_containment(code: NegacyclicCode) -> bool:
    """Whether C = <h> sits inside C-dual = <g>, i.e. g | h.

    Decided two independent ways, polynomial division and generator-matrix
    containment; disagreement would mean a bug, not a property of the input.
    """
    h = derive_h(code)
    poly_ok = code.g.divides(h)
    matrix_ok = contains(
        code_from_generator_poly(code.g, code.n),
        code_from_generator_poly(h, code.n),
    )
    if poly_ok != matrix_ok:
        raise RuntimeError(
            f"containment checks disagree for g={code.g}, h={h}"
        )
    return poly_ok


@dataclass(frozen=True)
class ConstructionReport:
    """Everything a caller needs to cite the constructed code."""

    p: int
    n: int
    t: int
    g: Polynomial
    h: Polynomial
    deg_g: int
    dim_c: int
    logical_dimension: int
    designed_lee_distance: int
    dual_min_lee_weight: int | None  # None: enumeration skipped (too large)
    d_x: int | float | None  # math.inf: no logical qudits; None: skipped
    d_z: int | float | None

    CSV_HEADER = (
        "p,n,t,deg_g,dim_c,logical_dim,designed_lee_distance,enumerated_lee_distance"
    )

    def csv_row(self) -> str:
        enum = (
            "skipped: too large"
            if self.dual_min_lee_weight is None
            else str(self.dual_min_lee_weight)
        )
        return (
            f"{self.p},{self.n},{self.t},{self.deg_g},{self.dim_c},"
            f"{self.logical_dimension},{self.designed_lee_distance},{enum}"
        )

    def text(self) -> str:
        lines = [
            f"p: {self.p}",
            f"n: {self.n}",
            f"t: {self.t}",
            f"g: {self.g}",
            f"h: {self.h}",
            f"deg g: {self.deg_g}",
            f"dim C: {self.dim_c}",
            f"logical dimension: {self.logical_dimension}",
            f"designed Lee distance: {self.designed_lee_distance}",
        ]
        if self.dual_min_lee_weight is None:
            lines.append("enumerated Lee distance: skipped: too large")
        else:
            lines.append(f"enumerated Lee distance: {self.dual_min_lee_weight}")
        if self.d_x is None:
            lines.append("quantum Lee weights: skipped: too large")
        elif math.isinf(self.d_x):
            lines.append("quantum Lee weights: unbounded (no logical qudits)")
        else:
            lines.append(f"quantum Lee weights: d_x={self.d_x} d_z={self.d_z}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NegacyclicConstruction:
    code: NegacyclicCode
    h: Polynomial
    css: CssCode
    report: ConstructionReport


def construct_css_negacyclic(
    p: int,
    n: int,
    t: int,
    enumerate_weights: bool = True,
    guard: int = ENUMERATION_GUARD,
) -> NegacyclicConstruction:
    """Full pipeline: design g, derive h, verify containment, assemble CSS.

    The CSS pair is C1 = C2 = <h>; the stabilizer measures syndromes of C and
    errors are corrected inside <g> = C-dual.  Weight enumeration is skipped
    (reported as such) when it would exceed the guard.
    """
    code = design_generator(p, n, t)
    h = derive_h(code)
    if not check_containment(code):
        raise ContainmentError(
            f"(p={p}, n={n}, t={t}): g = {code.g} does not divide h = {h}; "
            "the designed code is not self-orthogonal"
        )
    c = code_from_generator_poly(h, n)
    dual_side = code_from_generator_poly(code.g, n)
    # <g> must be exactly the dual of <h>; anything else is a pipeline bug
    if dual_code(c) != dual_side:
        raise RuntimeError(
            f"dual of <h> differs from <g> for (p={p}, n={n}, t={t})"
        )
    css = CssCode(c, c)
    dual_min: int | None = None
    d_x: int | float | None = None
    d_z: int | float | None = None
    if enumerate_weights and dual_side.size <= guard:
        w = min_lee_weight(dual_side, guard)
        dual_min = int(w) if not math.isinf(w) else None
        qw = quantum_lee_weights(css, guard)
        d_x, d_z = qw.d_x, qw.d_z
    report = ConstructionReport(
        p=p,
        n=n,
        t=t,
        g=code.g,
        h=h,
        deg_g=code.g.degree,
        dim_c=c.k,
        logical_dimension=css.logical_dimension,
        designed_lee_distance=min(p, 2 * t + 1),
        dual_min_lee_weight=dual_min,
        d_x=d_x,
        d_z=d_z,
    )
    return NegacyclicConstruction(code=code, h=h, css=css, report=report)


def iter_lee_ball(p: int, n: int, t: int) -> Iterator[tuple[int, ...]]:
    """All vectors of F_p^n with Lee weight <= t, in a fixed generation order.

    Coordinates are filled left to right; at each one the weight budget is
    spent ascending, positive representative before negative.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if t < 0:
        raise ValueError("need t >= 0")
    half = len(symbol_weight_multiplicities(p)) - 1  # (p-1)/2
    prefix = [0] * n

    def rec(i: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(prefix)
            return
        for w in range(min(budget, half) + 1):
            symbols = (0,) if w == 0 else (w, p - w)
            for s in symbols:
                prefix[i] = s
                yield from rec(i + 1, budget - w)
        prefix[i] = 0

    yield from rec(0, t)


class LeeDecoder:
    """Bounded-distance decoder: a syndrome table over the Lee ball radius t.

    The table maps each syndrome of an error with w_L <= t to that error;
    distinctness of those syndromes is exactly the statement that the dual
    code's minimum Lee weight exceeds 2t, and any collision aborts the build.
    """

    __slots__ = ("css", "stabilizer", "t", "table")

    def __init__(
        self, css: CssCode, stabilizer: LinearCode, t: int, table: dict
    ):
        object.__setattr__(self, "css", css)
        object.__setattr__(self, "stabilizer", stabilizer)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LeeDecoder is immutable")

    def decode(self, s: Sequence[int]) -> tuple[int, ...] | None:
        """The unique weight <= t error with syndrome s, or None if there is
        none (uncorrectable within the radius)."""
        if len(s) != self.stabilizer.k:
            raise ValueError(
                f"syndrome length {len(s)} != {self.stabilizer.k}"
            )
        key = tuple(int(x) % self.css.p for x in s)
        return self.table.get(key)

    def __repr__(self) -> str:
        return (
            f"LeeDecoder(p={self.css.p}, n={self.css.n}, t={self.t}, "
            f"entries={len(self.table)})"
        )


def build_decoder(
    css: CssCode, t: int, table_guard: int = DECODER_TABLE_GUARD
) -> LeeDecoder:
    """Exhaustive syndrome table for the symmetric pair (c1 == c2).

    Both error types see the same stabilizer, so one table serves X and Z.
    """
    if css.c1 != css.c2:
        raise ValueError(
            "decoder supports the symmetric construction only (c1 == c2)"
        )
    if t < 0:
        raise ValueError("need t >= 0")
    stab = css.c1
    if css.p**stab.k > table_guard:
        raise EnumerationGuardError(
            f"{css.p}^{stab.k} possible syndromes exceed the table guard "
            f"{table_guard}"
        )
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for e in iter_lee_ball(css.p, css.n, t):
        s = syndrome(stab, e)
        other = table.get(s)
        if other is not None and other != e:
            raise DecodingRadiusError(
                f"radius {t} unsupported: errors {other} and {e} share "
                f"syndrome {s}"
            )
        table[s] = e
    # the ball was generated without repeats, so the table must be full-size
    expected = sphere_size_dp(css.p, css.n, t).count
    if len(table) != expected:
        raise RuntimeError(
            f"table has {len(table)} entries, expected {expected}"
        )
    return LeeDecoder(css=css, stabilizer=stab, t=t, table=table)
