"""Finite field and polynomial arithmetic tests.

The multiplication oracle below is deliberately independent of
Polynomial.__mul__ (dict-based schoolbook convolution) so that the two
implementations check each other.
"""

from __future__ import annotations

import random

import pytest

from leeqec.fields import (
    CyclotomicCoset,
    ExtensionField,
    FieldElement,
    Polynomial,
    build_extension,
    find_primitive_2n_root,
    is_irreducible,
    is_prime,
    minimal_polynomial,
    multiplicative_order,
    odd_cyclotomic_cosets,
    poly_gcd,
    prime_factors,
    reciprocal_polynomial,
    smallest_irreducible,
)


def _oracle_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    # schoolbook convolution, no shared code with Polynomial.__mul__
    acc: dict[int, int] = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            acc[i + j] = (acc.get(i + j, 0) + x * y) % p
    deg = max((k for k, v in acc.items() if v), default=-1)
    return tuple(acc.get(i, 0) for i in range(deg + 1))


def _oracle_add(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    raw = [( (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) ) % p for i in range(n)]
    while raw and raw[-1] == 0:
        raw.pop()
    return tuple(raw)


def _random_poly(rng: random.Random, p: int, max_deg: int) -> Polynomial:
    deg = rng.randrange(max_deg + 1)
    coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
    return Polynomial(tuple(coeffs), p)


def test_is_prime_small_values():
    primes = [x for x in range(2, 50) if is_prime(x)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)


def test_prime_factors():
    assert prime_factors(12) == [2, 3]
    assert prime_factors(7) == [7]
    assert prime_factors(360) == [2, 3, 5]
    with pytest.raises(ValueError):
        prime_factors(1)


def test_multiplicative_order():
    # 2 mod 5: 2,4,3,1
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(1, 5) == 1
    assert multiplicative_order(4, 5) == 2
    with pytest.raises(ValueError):
        multiplicative_order(5, 10)  # gcd != 1


def test_field_element_ops():
    a = FieldElement(2, 5)
    b = FieldElement(4, 5)
    assert (a + b).value == 1
    assert (a - b).value == 3
    assert (a * b).value == 3
    assert (-a).value == 3
    assert b.inverse().value == 4  # 4*4 = 16 = 1 mod 5
    assert (a / b).value == 3  # 2 * 4 = 8 = 3
    assert (a ** 3).value == 3


def test_field_element_validation():
    with pytest.raises(ValueError):
        FieldElement(2, 4)  # modulus not prime
    with pytest.raises(ValueError):
        FieldElement(5, 5)  # out of range
    with pytest.raises(ValueError):
        FieldElement(-1, 5)
    with pytest.raises(ValueError):
        FieldElement(2, 5) + FieldElement(2, 7)  # mixed moduli
    with pytest.raises(ZeroDivisionError):
        FieldElement(0, 5).inverse()


def test_polynomial_construction_normalizes():
    assert Polynomial((1, 2, 0, 0), 5) == Polynomial((1, 2), 5)
    assert Polynomial((), 5).degree == -1
    assert Polynomial.zero(5).is_zero
    assert Polynomial.one(5).degree == 0
    assert Polynomial.x(5).degree == 1
    # coefficients arrive as arbitrary ints and are reduced
    assert Polynomial((1, 6), 5) == Polynomial((1, 1), 5)
    assert Polynomial((-1,), 5) == Polynomial((4,), 5)


def test_polynomial_product_known_value():
    # (x^2 + 2x + 4)(x^2 + 1) over F_5; coefficient of x^2 is 4+0+1 = 0
    a = Polynomial((4, 2, 1), 5)
    b = Polynomial((1, 0, 1), 5)
    expected = Polynomial((4, 2, 0, 2, 1), 5)
    assert a * b == expected
    assert _oracle_mul(a.coeffs, b.coeffs, 5) == expected.coeffs


def test_polynomial_divmod_known_value():
    num = Polynomial((4, 2, 0, 2, 1), 5)  # x^4 + 2x^3 + 2x + 4
    den = Polynomial((4, 2, 1), 5)
    q, r = divmod(num, den)
    assert q == Polynomial((1, 0, 1), 5)
    assert r.is_zero
    assert den.divides(num)


def test_polynomial_divmod_roundtrip_random():
    for p in (5, 7):
        rng = random.Random(p * 100 + 1)
        for _ in range(1000):
            a = _random_poly(rng, p, 8)
            b = _random_poly(rng, p, 4)
            q, r = divmod(a, b)
            assert r.degree < b.degree
            back = _oracle_add(_oracle_mul(q.coeffs, b.coeffs, p), r.coeffs, p)
            assert back == a.coeffs


def test_polynomial_mul_matches_oracle_random():
    rng = random.Random(7)
    for _ in range(500):
        p = rng.choice((5, 7, 11))
        a = _random_poly(rng, p, 6)
        b = _random_poly(rng, p, 6)
        assert (a * b).coeffs == _oracle_mul(a.coeffs, b.coeffs, p)


def test_polynomial_identity_and_zero():
    rng = random.Random(3)
    for _ in range(50):
        a = _random_poly(rng, 5, 6)
        assert a * Polynomial.one(5) == a
        assert (a * Polynomial.zero(5)).is_zero
        assert (a - a).is_zero


def test_polynomial_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(Polynomial((1, 1), 5), Polynomial.zero(5))


def test_polynomial_str():
    assert str(Polynomial((4, 3, 1), 5)) == "x^2 + 3x + 4"
    assert str(Polynomial((0, 1), 5)) == "x"
    assert str(Polynomial((), 5)) == "0"
    assert str(Polynomial((2,), 5)) == "2"
    assert str(Polynomial((0, 0, 2), 5)) == "2x^2"


def test_polynomial_evaluate():
    f = Polynomial((4, 3, 1), 5)  # x^2 + 3x + 4
    assert f.evaluate(0) == 4
    assert f.evaluate(1) == 3  # 1 + 3 + 4 = 8 = 3
    assert f.evaluate(3) == 2  # 9 + 9 + 4 = 22 = 2


def test_poly_gcd():
    a = Polynomial((4, 2, 1), 5)
    b = Polynomial((1, 0, 1), 5)
    prod = a * b
    g = poly_gcd(prod, a * Polynomial((3, 1), 5))
    # gcd is monic and divisible by a's monic form
    assert g.monic() == g
    assert a.monic().divides(g)
    assert poly_gcd(a, Polynomial.zero(5)) == a.monic()


def test_reciprocal_polynomial():
    h = Polynomial((4, 3, 0, 3, 1), 5)  # x^4 + 3x^3 + 3x + 4
    rec = reciprocal_polynomial(h)
    assert rec == Polynomial((4, 2, 0, 2, 1), 5)
    # involution up to the monic-free normalization used here
    assert reciprocal_polynomial(rec) == h
    with pytest.raises(ValueError):
        reciprocal_polynomial(Polynomial((0, 1), 5))  # zero constant term
    with pytest.raises(ValueError):
        reciprocal_polynomial(Polynomial.zero(5))


def test_is_irreducible():
    assert is_irreducible(Polynomial((2, 0, 1), 5))  # x^2 + 2
    assert not is_irreducible(Polynomial((4, 0, 1), 5))  # x^2 + 4 = (x+2)(x+3)
    assert not is_irreducible(Polynomial((0, 1), 5) * Polynomial((1, 1), 5))
    # degree-1 polys are irreducible
    assert is_irreducible(Polynomial((3, 1), 5))


def test_smallest_irreducible_deterministic():
    m = smallest_irreducible(5, 2)
    assert m == Polynomial((2, 0, 1), 5)  # x^2 + 2
    assert smallest_irreducible(5, 2) == m
    assert smallest_irreducible(5, 1) == Polynomial((0, 1), 5)  # x itself
    got = smallest_irreducible(7, 3)
    assert got.degree == 3
    assert is_irreducible(got)


def test_extension_field_basic():
    field = build_extension(5, 2)
    assert field.order == 25
    three = field.embed(3)
    four = field.embed(4)
    assert (three * four).constant_value == 2
    assert field.one.is_constant
    gen = field.gen  # the class of x
    assert (gen * gen).poly == Polynomial((3,), 5)  # x^2 = -2 = 3 mod (x^2+2)


def test_extension_field_orders_divide_group_order():
    field = build_extension(5, 2)
    for elt in field.iter_nonzero():
        order = field.element_order(elt)
        assert 24 % order == 0
        assert (elt ** order).is_constant and elt ** order == field.one
    # at least one generator of the full group exists
    assert any(field.element_order(e) == 24 for e in field.iter_nonzero())


def test_extension_element_inverse():
    field = build_extension(5, 2)
    for elt in field.iter_nonzero():
        assert elt * elt.inverse() == field.one


def test_primitive_root_prime_field_case():
    alpha = find_primitive_2n_root(5, 2)
    # 2n = 4 divides 5 - 1, so the root lives in F_5 itself
    assert alpha.field.modulus.degree == 1
    assert alpha.constant_value == 2
    assert alpha.field.element_order(alpha) == 4


def test_primitive_root_extension_case():
    alpha = find_primitive_2n_root(5, 6)
    field = alpha.field
    assert field.modulus == Polynomial((2, 0, 1), 5)
    assert alpha.poly == Polynomial((1, 2), 5)  # 2x + 1, smallest index with order 12
    # order is exactly 12: alpha^12 = 1 and no proper divisor power hits 1
    assert alpha ** 12 == field.one
    for d in range(1, 12):
        if 12 % d == 0:
            assert alpha ** d != field.one
    assert (alpha ** 3).constant_value == 2


def test_primitive_root_rejects_shared_factor():
    with pytest.raises(ValueError):
        find_primitive_2n_root(3, 3)  # 3 divides 2n = 6
    with pytest.raises(ValueError):
        find_primitive_2n_root(5, 5)


def test_odd_cyclotomic_cosets_known_partition():
    cosets = odd_cyclotomic_cosets(5, 6)
    as_sets = [set(c.members) for c in cosets]
    assert as_sets == [{1, 5}, {3}, {7, 11}, {9}]
    assert [c.representative for c in cosets] == [1, 3, 7, 9]


def test_odd_cyclotomic_cosets_partition_property():
    for p, n in ((5, 2), (5, 6), (7, 3), (7, 5), (11, 6), (13, 2)):
        cosets = odd_cyclotomic_cosets(p, n)
        seen: set[int] = set()
        for coset in cosets:
            # closed under multiplication by p modulo 2n
            for member in coset.members:
                assert member % 2 == 1
                assert (member * p) % (2 * n) in coset.members
            assert not (seen & set(coset.members))
            seen |= set(coset.members)
        assert seen == set(range(1, 2 * n, 2))
        assert sum(len(c.members) for c in cosets) == n


def test_cyclotomic_coset_validation():
    with pytest.raises(ValueError):
        CyclotomicCoset(members=(5, 1), representative=1)  # unsorted
    with pytest.raises(ValueError):
        CyclotomicCoset(members=(1, 5), representative=5)  # rep must be min


def test_minimal_polynomial_known_values():
    alpha = find_primitive_2n_root(5, 6)
    cosets = odd_cyclotomic_cosets(5, 6)
    polys = [minimal_polynomial(c, alpha) for c in cosets]
    assert polys[0] == Polynomial((4, 3, 1), 5)  # x^2 + 3x + 4 for {1,5}
    assert polys[1] == Polynomial((3, 1), 5)  # x + 3 for {3} since alpha^3 = 2
    assert polys[2] == Polynomial((4, 2, 1), 5)  # x^2 + 2x + 4 for {7,11}
    assert polys[3] == Polynomial((2, 1), 5)  # x + 2 for {9}


def test_minimal_polynomials_multiply_to_modulus():
    for p, n in ((5, 2), (5, 6), (7, 3), (11, 6), (5, 11)):
        alpha = find_primitive_2n_root(p, n)
        product = Polynomial.one(p)
        for coset in odd_cyclotomic_cosets(p, n):
            m = minimal_polynomial(coset, alpha)
            assert is_irreducible(m)
            assert m.degree == len(coset.members)
            product = product * m
        expected = Polynomial((1,) + (0,) * (n - 1) + (1,), p)  # x^n + 1
        assert product == expected


def test_minimal_polynomial_rejects_non_closed_exponents():
    alpha = find_primitive_2n_root(5, 6)
    fake = CyclotomicCoset(members=(1,), representative=1)  # true coset is {1,5}
    with pytest.raises(ValueError):
        minimal_polynomial(fake, alpha)


def test_extension_from_index_roundtrip():
    field = build_extension(5, 2)
    for idx in range(25):
        assert field.from_index(idx).index == idx
