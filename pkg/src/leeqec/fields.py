"""Exact arithmetic over prime fields, their extensions, and polynomial rings.

Everything here is immutable and every operation is a pure function, so the
objects are safe to share freely between threads.  Polynomials keep a
canonical trimmed coefficient tuple (lowest degree first), which makes
equality a plain sequence comparison.

Extension fields are built deterministically: the modulus is the smallest
monic irreducible polynomial of the requested degree under the little-endian
coefficient order, and root searches walk elements in the same order.  Two
runs on two machines therefore agree on every derived polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (moduli here are tiny)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 2, ascending."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, modulus: int) -> int:
    """Smallest e >= 1 with a^e = 1 mod modulus.  Requires gcd(a, modulus) = 1."""
    if modulus < 2:
        raise ValueError("need modulus >= 2")
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not a unit mod {modulus}")
    e = 1
    x = a
    while x != 1:
        x = x * a % modulus
        e += 1
    return e


@dataclass(frozen=True)
class FieldElement:
    """An element of the prime field F_p, stored as its canonical residue.

    Arithmetic only combines elements of the same field; mixing moduli is a
    ValueError, not a silent coercion.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        _check_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"value {self.value} outside canonical range [0, {self.modulus})"
            )

    def _match(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._match(other)
        return FieldElement((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._match(other)
        return FieldElement((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._match(other)
        return FieldElement(self.value * other.value % self.modulus, self.modulus)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.modulus, self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        # Fermat: a^(p-2) = a^-1 in F_p
        return FieldElement(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._match(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.modulus), self.modulus)

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.modulus})"


class Polynomial:
    """A polynomial over F_p with coefficients stored lowest degree first.

    The coefficient tuple is always trimmed (no trailing zeros), so the zero
    polynomial has an empty tuple and degree -1, and equality is a plain
    comparison of (p, coeffs).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[int | FieldElement], p: int):
        _check_prime(p)
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.modulus != p:
                    raise ValueError(f"coefficient mod {c.modulus} in F_{p} polynomial")
                vals.append(c.value)
            else:
                vals.append(int(c) % p)
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, p: int) -> "Polynomial":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "Polynomial":
        return cls((1,), p)

    @classmethod
    def x(cls, p: int) -> "Polynomial":
        return cls((0, 1), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Polynomial":
        return cls((c,), p)

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _match(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)], self.p
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)], self.p
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.p)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.p)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial([c * a for a in self.coeffs], self.p)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division: self = q*other + r with deg r < deg other."""
        self._match(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead_inv = pow(div[-1], p - 2, p)
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            factor = rem[i] * lead_inv % p
            if factor == 0:
                continue
            q[i - dd] = factor
            for j, b in enumerate(div):
                rem[i - dd + j] = (rem[i - dd + j] - factor * b) % p
        return Polynomial(q, p), Polynomial(rem[:dd], p)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when self divides other exactly."""
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(pow(self.coeffs[-1], self.p - 2, self.p))

    def evaluate(self, x: int) -> int:
        """Horner evaluation at x in F_p, returned as a canonical residue."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({self} mod {self.p})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    a._match(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def reciprocal_polynomial(poly: Polynomial) -> Polynomial:
    """The normalized reversal c(0)^-1 * x^deg * c(1/x).

    Requires a nonzero constant term; the result is then monic whenever the
    input is (reversal exchanges the constant and leading coefficients).
    """
    if poly.is_zero or poly.coeffs[0] == 0:
        raise ValueError(f"reciprocal undefined: constant term of {poly} is zero")
    inv = pow(poly.coeffs[0], poly.p - 2, poly.p)
    return Polynomial([c * inv for c in reversed(poly.coeffs)], poly.p)


def is_irreducible(poly: Polynomial) -> bool:
    """Trial-division irreducibility test over F_p.

    Fine at the sizes used here (the modulus degree of an extension field);
    checks every monic divisor candidate up to half the degree.
    """
    d = poly.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    p = poly.p
    for dd in range(1, d // 2 + 1):
        for idx in range(p**dd):
            cand = _poly_from_index(idx, dd, p)
            if (poly % cand).is_zero:
                return False
    return True


def _poly_from_index(idx: int, degree: int, p: int) -> Polynomial:
    # monic of the given degree; low coefficients are the base-p digits of idx
    coeffs = []
    for _ in range(degree):
        coeffs.append(idx % p)
        idx //= p
    coeffs.append(1)
    return Polynomial(coeffs, p)


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, m: int) -> Polynomial:
    """The first monic irreducible of degree m over F_p in index order.

    Index order enumerates the low-coefficient tuple little-endian, so the
    choice is a pure function of (p, m) and identical across runs.
    """
    _check_prime(p)
    if m < 1:
        raise ValueError("need degree m >= 1")
    for idx in range(p**m):
        cand = _poly_from_index(idx, m, p)
        if is_irreducible(cand):
            return cand
    raise RuntimeError(f"no irreducible of degree {m} over F_{p}")  # unreachable


class ExtElement:
    """An element of an extension field, held as its reduced residue poly."""

    __slots__ = ("field", "poly")

    def __init__(self, field: "ExtensionField", poly: Polynomial):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "poly", poly % field.modulus)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ExtElement is immutable")

    def _match(self, other: "ExtElement") -> None:
        if not isinstance(other, ExtElement):
            raise TypeError(f"cannot combine ExtElement with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("elements of different extension fields")

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._match(other)
        return ExtElement(self.field, self.poly + other.poly)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        self._match(other)
        return ExtElement(self.field, self.poly - other.poly)

    def __neg__(self) -> "ExtElement":
        return ExtElement(self.field, -self.poly)

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        self._match(other)
        return ExtElement(self.field, self.poly * other.poly)

    def __pow__(self, e: int) -> "ExtElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "ExtElement":
        if self.poly.is_zero:
            raise ZeroDivisionError("0 has no inverse")
        return self ** (self.field.order - 2)

    @property
    def index(self) -> int:
        """Position in the field's canonical element order (little-endian digits)."""
        v = 0
        for c in reversed(self.poly.coeffs):
            v = v * self.field.p + c
        return v

    @property
    def is_constant(self) -> bool:
        return self.poly.degree <= 0

    @property
    def constant_value(self) -> int:
        """The residue in F_p, for elements that lie in the base field."""
        if not self.is_constant:
            raise ValueError(f"{self.poly} is not in the base field")
        return self.poly.coefficient(0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtElement)
            and self.field == other.field
            and self.poly == other.poly
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.modulus.coeffs, self.poly.coeffs))

    def __repr__(self) -> str:
        return f"ExtElement({self.poly} in {self.field!r})"


class ExtensionField:
    """F_{p^m} realized as F_p[x] modulo a monic irreducible of degree m."""

    __slots__ = ("p", "m", "modulus", "order")

    def __init__(self, p: int, modulus: Polynomial):
        _check_prime(p)
        if modulus.p != p:
            raise ValueError("modulus polynomial over the wrong prime field")
        if not modulus.is_monic or not is_irreducible(modulus):
            raise ValueError(f"{modulus} is not monic irreducible over F_{p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", modulus.degree)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "order", p**modulus.degree)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ExtensionField is immutable")

    def element(self, coeffs: Sequence[int]) -> ExtElement:
        return ExtElement(self, Polynomial(coeffs, self.p))

    def embed(self, c: int) -> ExtElement:
        return ExtElement(self, Polynomial.constant(c, self.p))

    @property
    def zero(self) -> ExtElement:
        return ExtElement(self, Polynomial.zero(self.p))

    @property
    def one(self) -> ExtElement:
        return ExtElement(self, Polynomial.one(self.p))

    @property
    def gen(self) -> ExtElement:
        """The residue class of x."""
        return ExtElement(self, Polynomial.x(self.p))

    def from_index(self, v: int) -> ExtElement:
        """Element number v in the canonical order, 0 <= v < p^m."""
        if not 0 <= v < self.order:
            raise ValueError(f"index {v} outside [0, {self.order})")
        coeffs = []
        while v:
            coeffs.append(v % self.p)
            v //= self.p
        return self.element(coeffs)

    def iter_nonzero(self) -> Iterator[ExtElement]:
        for v in range(1, self.order):
            yield self.from_index(v)

    def eval_poly(self, poly: Polynomial, at: ExtElement) -> ExtElement:
        """Evaluate a base-field polynomial at an extension element (Horner)."""
        if poly.p != self.p:
            raise ValueError("polynomial over the wrong prime field")
        acc = self.zero
        for c in reversed(poly.coeffs):
            acc = acc * at + self.embed(c)
        return acc

    def element_order(self, a: ExtElement) -> int:
        """Multiplicative order by plain iteration; exhaustive and exact."""
        if a.field != self:
            raise ValueError("element of a different field")
        if a.poly.is_zero:
            raise ValueError("0 has no multiplicative order")
        e = 1
        x = a
        while x != self.one:
            x = x * a
            e += 1
        return e

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtensionField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"ExtensionField(p={self.p}, modulus={self.modulus})"


def build_extension(p: int, m: int) -> ExtensionField:
    """F_{p^m} with the deterministic smallest irreducible modulus."""
    return ExtensionField(p, smallest_irreducible(p, m))


def _check_coprime_2n(p: int, n: int) -> int:
    _check_prime(p)
    if n < 1:
        raise ValueError("need n >= 1")
    two_n = 2 * n
    if two_n % p == 0:
        raise ValueError(
            f"p={p} divides 2n={two_n}; no primitive 2n-th root of unity exists"
        )
    return two_n


def find_primitive_2n_root(p: int, n: int) -> ExtElement:
    """A fixed primitive 2n-th root of unity over F_p.

    Lives in F_{p^m} with m the multiplicative order of p mod 2n (the smallest
    extension containing one).  Among all elements of order exactly 2n the one
    with the smallest canonical index is returned, so the choice is
    deterministic.
    """
    two_n = _check_coprime_2n(p, n)
    m = multiplicative_order(p, two_n)
    field = build_extension(p, m)
    divisors = prime_factors(two_n)
    one = field.one
    for a in field.iter_nonzero():
        if a**two_n != one:
            continue
        if all(a ** (two_n // q) != one for q in divisors):
            return a
    raise RuntimeError(
        f"no element of order {two_n} in F_{p}^{m}"
    )  # unreachable: 2n divides p^m - 1


@dataclass(frozen=True)
class CyclotomicCoset:
    """An orbit of odd residues mod 2n under multiplication by p."""

    members: tuple[int, ...]
    representative: int

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("empty coset")
        if tuple(sorted(self.members)) != self.members:
            raise ValueError("members must be sorted")
        if self.representative != self.members[0]:
            raise ValueError("representative must be the smallest member")


def odd_cyclotomic_cosets(p: int, n: int) -> list[CyclotomicCoset]:
    """Partition of the odd residues mod 2n into multiply-by-p orbits.

    Returned sorted by representative; each representative is its orbit's
    smallest member.  Requires p coprime to 2n (so multiplication by p
    permutes the odd residues).
    """
    two_n = _check_coprime_2n(p, n)
    seen: set[int] = set()
    out = []
    for j in range(1, two_n, 2):
        if j in seen:
            continue
        members = set()
        k = j
        while k not in members:
            members.add(k)
            k = k * p % two_n
        seen |= members
        out.append(CyclotomicCoset(tuple(sorted(members)), j))
    return out


def minimal_polynomial(coset: CyclotomicCoset, alpha: ExtElement) -> Polynomial:
    """prod_{j in coset} (x - alpha^j), with coefficients in the base field.

    The product is expanded in the extension field; closure of the coset under
    multiplication by p is exactly what forces every coefficient down into
    F_p, so a non-constant coefficient is reported as an error rather than
    truncated.
    """
    field = alpha.field
    prod: list[ExtElement] = [field.one]
    for j in coset.members:
        root = alpha**j
        nxt = [field.zero] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - root * c
        prod = nxt
    coeffs = []
    for c in prod:
        if not c.is_constant:
            raise ValueError(
                f"coset {coset.members} is not closed under multiplication by "
                f"{field.p}: coefficient {c.poly} lies outside the base field"
            )
        coeffs.append(c.constant_value)
    return Polynomial(coeffs, field.p)
