"""Negacyclic construction and bounded-distance decoder tests.

Known-good generator polynomials were derived by hand from the root
prescription (product of minimal polynomials over the cosets hit by the odd
exponents) and are frozen here; the pipeline must reproduce them exactly.
"""

from __future__ import annotations

import math

import pytest

from leeqec.fields import Polynomial
from leeqec.lee import lee_weight_vector, sphere_size_dp
from leeqec.linear import (
    CssCode,
    EnumerationGuardError,
    LinearCode,
    dual_code,
    syndrome,
)
from leeqec.negacyclic import (
    ConstructionReport,
    ContainmentError,
    DecodingRadiusError,
    DegenerateCodeError,
    NegacyclicCode,
    build_decoder,
    check_containment,
    code_from_generator_poly,
    construct_css_negacyclic,
    derive_h,
    design_generator,
    iter_lee_ball,
    negacyclic_modulus,
)


def test_negacyclic_modulus():
    assert negacyclic_modulus(5, 6) == Polynomial((1, 0, 0, 0, 0, 0, 1), 5)
    assert negacyclic_modulus(7, 1) == Polynomial((1, 1), 7)


def test_code_from_generator_poly_shifts():
    g = Polynomial((4, 3, 1), 5)  # x^2 + 3x + 4
    c = code_from_generator_poly(g, 6)
    assert c.k == 4
    for i in range(4):
        shift = [0] * i + [4, 3, 1] + [0] * (6 - 2 - 1 - i)
        assert c.contains_vector(shift)


def test_code_from_generator_poly_edges():
    mod = negacyclic_modulus(5, 4)
    assert code_from_generator_poly(mod, 4).k == 0  # deg g = n: zero code
    assert code_from_generator_poly(Polynomial.one(5), 3).k == 3
    with pytest.raises(ValueError):
        code_from_generator_poly(Polynomial.zero(5), 4)
    with pytest.raises(ValueError):
        code_from_generator_poly(Polynomial((1, 0, 0, 0, 0, 1), 5), 4)  # deg > n


def test_design_generator_known_cases():
    assert design_generator(5, 6, 1).g == Polynomial((4, 3, 1), 5)  # x^2 + 3x + 4
    assert design_generator(5, 2, 1).g == Polynomial((3, 1), 5)  # x + 3
    assert design_generator(7, 3, 1).g == Polynomial((4, 1), 7)  # x + 4
    # t = 2 at n = 6 pulls in the cosets of 1 and 3
    assert design_generator(5, 6, 2).g == Polynomial((2, 3, 1, 1), 5)


def test_design_generator_validation():
    with pytest.raises(ValueError):
        design_generator(5, 6, 0)
    with pytest.raises(ValueError):
        design_generator(5, 3, 4)  # 2t - 1 = 7 >= 2n = 6
    with pytest.raises(ValueError):
        design_generator(5, 5, 1)  # p divides 2n
    with pytest.raises(DegenerateCodeError):
        design_generator(5, 2, 2)  # designed roots exhaust x^2 + 1


def test_derive_h_known_value():
    code = design_generator(5, 6, 1)
    h = derive_h(code)
    assert h == Polynomial((4, 3, 0, 3, 1), 5)  # x^4 + 3x^3 + 3x + 4
    # h is g times x^2 + 1 for this instance
    assert h == code.g * Polynomial((1, 0, 1), 5)


def test_derive_h_degree_identity():
    for p, n, t in ((5, 6, 1), (7, 3, 1), (5, 11, 2), (13, 2, 1)):
        code = design_generator(p, n, t)
        assert derive_h(code).degree == n - code.g.degree


def test_check_containment_positive_cases():
    for p, n, t in ((5, 6, 1), (7, 3, 1), (5, 11, 2), (5, 12, 2)):
        assert check_containment(design_generator(p, n, t))


def test_check_containment_negative_case():
    # hand-built generator: product of the minimal polynomials of the cosets
    # of 1 and 7 at (p=5, n=6); divides x^6 + 1 but fails g | h
    g = Polynomial((4, 3, 1), 5) * Polynomial((4, 2, 1), 5)
    assert g == Polynomial((1, 0, 4, 0, 1), 5)
    code = NegacyclicCode(p=5, n=6, designed_t=1, g=g)
    assert not check_containment(code)


def test_construct_full_report_5_6_1():
    built = construct_css_negacyclic(5, 6, 1)
    r = built.report
    assert r.g == Polynomial((4, 3, 1), 5)
    assert r.h == Polynomial((4, 3, 0, 3, 1), 5)
    assert (r.deg_g, r.dim_c, r.logical_dimension) == (2, 2, 2)
    assert r.designed_lee_distance == 3
    assert r.dual_min_lee_weight == 3
    assert (r.d_x, r.d_z) == (3, 3)
    assert r.csv_row() == "5,6,1,2,2,2,3,3"
    assert built.css.c1 == built.css.c2
    assert built.css.c1 == code_from_generator_poly(r.h, 6)
    # the dual really is the designed code <g>
    assert dual_code(built.css.c1) == code_from_generator_poly(r.g, 6)


def test_construct_reports_frozen_instances():
    assert construct_css_negacyclic(7, 3, 1).report.csv_row() == "7,3,1,1,1,1,3,3"
    assert construct_css_negacyclic(5, 11, 2).report.csv_row() == "5,11,2,5,5,1,5,6"
    assert construct_css_negacyclic(5, 12, 2).report.csv_row() == "5,12,2,4,4,4,5,5"


def test_construct_zero_logical_dimension_marks_unbounded():
    built = construct_css_negacyclic(5, 6, 2)
    r = built.report
    assert r.logical_dimension == 0
    assert r.d_x is not None and math.isinf(r.d_x)
    assert "unbounded (no logical qudits)" in r.text()
    # g is self-reciprocal here: the code equals its own dual
    assert r.g == r.h
    assert dual_code(built.css.c1) == built.css.c1


def test_construct_skip_enumeration():
    r = construct_css_negacyclic(5, 6, 1, enumerate_weights=False).report
    assert r.dual_min_lee_weight is None
    assert r.d_x is None and r.d_z is None
    assert "enumerated Lee distance: skipped: too large" in r.text()
    assert r.csv_row().endswith("skipped: too large")


def test_construct_rejects_bad_containment():
    with pytest.raises(ContainmentError) as err:
        construct_css_negacyclic(11, 6, 1)
    msg = str(err.value)
    assert "x^2 + 5x + 1" in msg  # the designed g
    assert "does not divide" in msg


def test_construct_report_text_lines():
    text = construct_css_negacyclic(5, 6, 1).report.text()
    assert "g: x^2 + 3x + 4" in text
    assert "h: x^4 + 3x^3 + 3x + 4" in text
    assert "designed Lee distance: 3" in text
    assert "quantum Lee weights: d_x=3 d_z=3" in text
    assert ConstructionReport.CSV_HEADER.startswith("p,n,t,")


def test_construct_deterministic():
    a = construct_css_negacyclic(5, 11, 2)
    b = construct_css_negacyclic(5, 11, 2)
    assert a.code == b.code
    assert a.h == b.h
    assert a.css == b.css
    assert a.report == b.report


def test_iter_lee_ball_counts():
    for p, n, t in ((5, 6, 1), (5, 6, 2), (7, 2, 2), (5, 11, 2)):
        ball = list(iter_lee_ball(p, n, t))
        assert len(ball) == sphere_size_dp(p, n, t).count
        assert len(set(ball)) == len(ball)
        for v in ball:
            assert lee_weight_vector(v, p) <= t
    assert list(iter_lee_ball(5, 3, 0)) == [(0, 0, 0)]


def test_iter_lee_ball_order_deterministic():
    first = list(iter_lee_ball(5, 6, 1))
    assert first == list(iter_lee_ball(5, 6, 1))
    assert first[0] == (0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        list(iter_lee_ball(5, 0, 1))
    with pytest.raises(ValueError):
        list(iter_lee_ball(5, 3, -1))
    with pytest.raises(ValueError):
        list(iter_lee_ball(4, 3, 1))


def test_decoder_roundtrip_5_6_1():
    built = construct_css_negacyclic(5, 6, 1)
    dec = build_decoder(built.css, 1)
    assert len(dec.table) == 13
    for e in iter_lee_ball(5, 6, 1):
        assert dec.decode(syndrome(dec.stabilizer, e)) == e
    assert dec.decode((0, 0)) == (0, 0, 0, 0, 0, 0)


def test_decoder_roundtrip_5_11_2():
    built = construct_css_negacyclic(5, 11, 2)
    dec = build_decoder(built.css, 2)
    assert len(dec.table) == 265
    for e in iter_lee_ball(5, 11, 2):
        assert dec.decode(syndrome(dec.stabilizer, e)) == e


def test_decoder_unknown_syndrome_is_none():
    built = construct_css_negacyclic(5, 6, 1)
    dec = build_decoder(built.css, 1)
    # 25 possible syndromes, 13 in the table: find a missing one
    missing = next(
        (a, b)
        for a in range(5)
        for b in range(5)
        if (a, b) not in dec.table
    )
    assert dec.decode(missing) is None
    with pytest.raises(ValueError):
        dec.decode((0, 0, 0))  # wrong syndrome length


def test_decoder_beyond_radius_behavior():
    built = construct_css_negacyclic(5, 6, 1)
    dec = build_decoder(built.css, 1)
    e = (1, 1, 0, 0, 0, 0)  # Lee weight 2, outside the radius
    got = dec.decode(syndrome(dec.stabilizer, e))
    assert got != e
    if got is not None:
        assert lee_weight_vector(got, 5) <= 1


def test_decoder_radius_collision_rejected():
    built = construct_css_negacyclic(5, 6, 1)
    # dual minimum Lee weight is 3, so radius 2 must collide
    with pytest.raises(DecodingRadiusError) as err:
        build_decoder(built.css, 2)
    assert "share" in str(err.value)


def test_decoder_requires_symmetric_pair():
    c1 = LinearCode(5, 4, [[1, 1, 1, 1]])
    c2 = LinearCode(5, 4, [[1, 4, 0, 0]])
    with pytest.raises(ValueError):
        build_decoder(CssCode(c1, c2), 1)


def test_decoder_table_guard():
    built = construct_css_negacyclic(5, 6, 1)
    with pytest.raises(EnumerationGuardError):
        build_decoder(built.css, 1, table_guard=10)
    with pytest.raises(ValueError):
        build_decoder(built.css, -1)


def test_decoder_radius_zero():
    built = construct_css_negacyclic(5, 6, 1)
    dec = build_decoder(built.css, 0)
    assert dec.table == {(0, 0): (0, 0, 0, 0, 0, 0)}


def test_decoder_deterministic():
    built = construct_css_negacyclic(5, 6, 1)
    assert build_decoder(built.css, 1).table == build_decoder(built.css, 1).table
