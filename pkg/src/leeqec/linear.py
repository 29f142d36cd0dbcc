"""Linear codes over F_p, duals, CSS pairs, and exhaustive weight enumeration.

Generator matrices are canonicalized to reduced row echelon form at
construction, so two codes are equal exactly when their generator tuples are
equal.  Codeword enumeration is chunked numpy work behind a hard size guard:
asking for more than the guard is an error, never a silent truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .fields import is_prime
from .lee import lee_weight_vector

# ceiling for p^k exhaustive enumeration; above this we refuse rather than lie
ENUMERATION_GUARD = 10**7

_BLOCK = 1 << 16


class EnumerationGuardError(ValueError):
    """Raised when an exhaustive enumeration would exceed the size guard."""


def _rref(rows: Sequence[Sequence[int]], p: int, width: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    mat = [[int(x) % p for x in r] for r in rows]
    for r in mat:
        if len(r) != width:
            raise ValueError(f"row length {len(r)} != {width}")
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        sel = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [inv * x % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


class LinearCode:
    """A k-dimensional linear code in F_p^n, held as an RREF generator."""

    __slots__ = ("p", "n", "generator", "pivots")

    def __init__(self, p: int, n: int, rows: Sequence[Sequence[int]] = ()):
        if not is_prime(p):
            raise ValueError(f"alphabet size {p} is not prime")
        if n < 1:
            raise ValueError("need length n >= 1")
        reduced, pivots = _rref(rows, p, n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generator", tuple(tuple(r) for r in reduced))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LinearCode is immutable")

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        return self.p**self.k

    def contains_vector(self, v: Sequence[int]) -> bool:
        """Row-space membership by reducing v against the RREF generator."""
        if len(v) != self.n:
            raise ValueError(f"vector length {len(v)} != {self.n}")
        w = [int(x) % self.p for x in v]
        for row, col in zip(self.generator, self.pivots):
            f = w[col]
            if f:
                w = [(a - f * b) % self.p for a, b in zip(w, row)]
        return not any(w)

    def codeword(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) != self.k:
            raise ValueError(f"need {self.k} coefficients")
        out = [0] * self.n
        for c, row in zip(coeffs, self.generator):
            c %= self.p
            if c:
                out = [(a + c * b) % self.p for a, b in zip(out, row)]
        return tuple(out)

    def to_text(self) -> str:
        """Plain interchange form: 'p n k' then k generator rows."""
        lines = [f"{self.p} {self.n} {self.k}"]
        for row in self.generator:
            lines.append(" ".join(str(x) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearCode":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty code description")
        head = lines[0].split()
        if len(head) != 3:
            raise ValueError(f"header must be 'p n k', got {lines[0]!r}")
        p, n, k = (int(x) for x in head)
        if len(lines) - 1 != k:
            raise ValueError(f"expected {k} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            row = [int(x) for x in ln.split()]
            if len(row) != n:
                raise ValueError(f"row {ln!r} has length {len(row)}, expected {n}")
            if any(not 0 <= x < p for x in row):
                raise ValueError(f"entry outside [0, {p}) in row {ln!r}")
            rows.append(row)
        code = cls(p, n, rows)
        if code.k != k:
            raise ValueError(f"rows are dependent: rank {code.k} != declared {k}")
        return code

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.p == other.p
            and self.n == other.n
            and self.generator == other.generator
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.generator))

    def __repr__(self) -> str:
        return f"LinearCode(p={self.p}, n={self.n}, k={self.k})"


def dual_code(c: LinearCode) -> LinearCode:
    """The orthogonal complement under the standard inner product mod p."""
    free = [col for col in range(c.n) if col not in c.pivots]
    basis = []
    for f in free:
        v = [0] * c.n
        v[f] = 1
        for i, col in enumerate(c.pivots):
            v[col] = -c.generator[i][f] % c.p
        basis.append(v)
    return LinearCode(c.p, c.n, basis)


def contains(a: LinearCode, b: LinearCode) -> bool:
    """True when b is a subcode of a (every generator row of b lies in a)."""
    if a.p != b.p or a.n != b.n:
        raise ValueError("codes live in different ambient spaces")
    return all(a.contains_vector(row) for row in b.generator)


def syndrome(c: LinearCode, e: Sequence[int]) -> tuple[int, ...]:
    """Inner products of e with c's generator rows, one residue per row."""
    if len(e) != c.n:
        raise ValueError(f"vector length {len(e)} != {c.n}")
    return tuple(
        sum(int(x) * g for x, g in zip(e, row)) % c.p for row in c.generator
    )


def iter_codeword_blocks(
    c: LinearCode, block: int = _BLOCK
) -> Iterator[tuple[np.ndarray, int]]:
    """All p^k codewords in coefficient-counter order, as (array, start) chunks.

    Chunking keeps memory flat; the coefficient with index 0 is the zero word.
    """
    total = c.size
    if c.k == 0:
        yield np.zeros((1, c.n), dtype=np.int64), 0
        return
    gen = np.array(c.generator, dtype=np.int64)
    powers = c.p ** np.arange(c.k, dtype=np.int64)
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        coeffs = (idx[:, None] // powers) % c.p
        yield (coeffs @ gen) % c.p, start


def _lee_weights(block: np.ndarray, p: int) -> np.ndarray:
    return np.minimum(block, p - block).sum(axis=1)


def min_lee_weight(c: LinearCode, guard: int = ENUMERATION_GUARD) -> int | float:
    """Minimum Lee weight over the nonzero codewords, by full enumeration.

    The zero code has no nonzero codeword; its minimum is math.inf (an
    explicit unbounded marker, deliberately not a sentinel integer).
    """
    if c.size > guard:
        raise EnumerationGuardError(
            f"enumerating {c.p}^{c.k} codewords exceeds the guard {guard}"
        )
    if c.k == 0:
        return math.inf
    best: int | None = None
    for words, start in iter_codeword_blocks(c):
        w = _lee_weights(words, c.p)
        if start == 0:
            w[0] = np.iinfo(np.int64).max  # the all-zero codeword
        m = int(w.min())
        if best is None or m < best:
            best = m
    assert best is not None
    return best


class CssCode:
    """A CSS pair: classical codes c1, c2 with each inside the other's dual.

    X-type checks are read off c2 and Z-type checks off c1; the logical
    dimension is n - k1 - k2.
    """

    __slots__ = ("c1", "c2")

    def __init__(self, c1: LinearCode, c2: LinearCode):
        if c1.p != c2.p or c1.n != c2.n:
            raise ValueError("c1 and c2 live in different ambient spaces")
        # both directions are equivalent; checking both catches rref bugs
        if not contains(dual_code(c2), c1):
            raise ValueError("c1 is not contained in the dual of c2")
        if not contains(dual_code(c1), c2):
            raise ValueError("c2 is not contained in the dual of c1")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("CssCode is immutable")

    @property
    def p(self) -> int:
        return self.c1.p

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def logical_dimension(self) -> int:
        return self.n - self.c1.k - self.c2.k

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CssCode)
            and self.c1 == other.c1
            and self.c2 == other.c2
        )

    def __hash__(self) -> int:
        return hash((self.c1, self.c2))

    def __repr__(self) -> str:
        return (
            f"CssCode(p={self.p}, n={self.n}, k1={self.c1.k}, k2={self.c2.k})"
        )


@dataclass(frozen=True)
class QuantumLeeWeights:
    """Minimum Lee weights of undetected X and Z logical operators.

    math.inf marks an empty difference set (no logical qudits on that side).
    """

    d_x: int | float
    d_z: int | float


def _min_weight_outside(
    ambient: LinearCode, excluded: LinearCode, guard: int
) -> int | float:
    """min { w_L(v) : v in ambient, v not in excluded }, or inf if empty."""
    if ambient.size > guard:
        raise EnumerationGuardError(
            f"enumerating {ambient.p}^{ambient.k} codewords exceeds the guard {guard}"
        )
    best: int | float = math.inf
    for words, start in iter_codeword_blocks(ambient):
        w = _lee_weights(words, ambient.p)
        if start == 0:
            w[0] = np.iinfo(np.int64).max  # zero vector is always excluded
        order = np.argsort(w, kind="stable")
        for i in order:
            wt = int(w[i])
            if wt >= best:
                break
            if not excluded.contains_vector([int(x) for x in words[i]]):
                best = wt
                break
    return best


def quantum_lee_weights(
    css: CssCode, guard: int = ENUMERATION_GUARD
) -> QuantumLeeWeights:
    """Exhaustively enumerated distances: d_x over dual(c2) - c1 cosets,
    d_z over dual(c1) - c2."""
    d_x = _min_weight_outside(dual_code(css.c2), css.c1, guard)
    d_z = _min_weight_outside(dual_code(css.c1), css.c2, guard)
    return QuantumLeeWeights(d_x=d_x, d_z=d_z)
