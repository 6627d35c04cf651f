"""Monomials, polynomial arithmetic, staged leading data, division."""

import random

import pytest

from lexgb.field import PrimeField, RationalField
from lexgb.poly import (
    MONOMIAL_ONE,
    Monomial,
    Polynomial,
    ZeroPolynomialError,
    constant,
    content_divide,
    divides_univariate,
    lex_compare,
    parse_polynomial,
    poly_from_dict,
    x_coefficient_blocks,
)

from helpers import random_monomial, random_poly

F101 = PrimeField(101)
F7 = PrimeField(7)


def P(text, field=F101):
    return parse_polynomial(field, text)


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial(-1, 0, 0)
    with pytest.raises(ValueError):
        Monomial(0, 2, -3)
    assert Monomial(0, 0, 0) == MONOMIAL_ONE


def test_lex_order_z_dominates():
    # z outweighs any power of x and y, and y outweighs any power of x.
    assert lex_compare(Monomial(0, 0, 1), Monomial(5, 5, 0)) == 1
    assert lex_compare(Monomial(0, 1, 0), Monomial(9, 0, 0)) == 1
    assert lex_compare(Monomial(2, 1, 2), Monomial(3, 0, 2)) == 1
    assert lex_compare(Monomial(3, 0, 2), Monomial(2, 1, 2)) == -1
    assert lex_compare(Monomial(1, 2, 3), Monomial(1, 2, 3)) == 0
    assert Monomial(0, 0, 1) > Monomial(5, 5, 0)
    assert Monomial(1, 0, 0) < Monomial(2, 0, 0)


def test_lex_order_is_total_and_multiplicative():
    rng = random.Random(11)
    for _ in range(500):
        m1 = random_monomial(rng)
        m2 = random_monomial(rng)
        m3 = random_monomial(rng)
        c = lex_compare(m1, m2)
        assert c == -lex_compare(m2, m1)
        if c == 0:
            assert m1 == m2
        # multiplying by a common monomial preserves the comparison
        assert lex_compare(m1 * m3, m2 * m3) == c


def test_monomial_division_and_lcm():
    m = Monomial(2, 1, 3)
    d = Monomial(1, 0, 2)
    assert d.divides(m)
    assert m // d == Monomial(1, 1, 1)
    assert not m.divides(d)
    with pytest.raises(ValueError):
        d // m
    assert m.lcm(Monomial(0, 4, 1)) == Monomial(2, 4, 3)
    assert Monomial(2, 0, 0).is_coprime(Monomial(0, 1, 3))
    assert not Monomial(2, 1, 0).is_coprime(Monomial(0, 1, 3))


def test_canonical_form_combines_and_drops_zeros():
    p = Polynomial(F7, [(Monomial(1, 0, 0), 3), (Monomial(0, 0, 0), 0)])
    q = Polynomial(F7, [(Monomial(1, 0, 0), F7(10))])
    assert p == q
    assert Polynomial(F7, [(Monomial(2, 0, 0), 7)]).is_zero()
    duplicated = Polynomial(F7, [(Monomial(1, 0, 0), 2), (Monomial(1, 0, 0), 5)])
    assert duplicated.is_zero()
    r = P("x + 1", F7) + P("6*x + 2", F7)
    assert r == P("3", F7)
    assert not Polynomial(F7)
    assert P("x", F7)


def test_terms_sorted_descending():
    p = P("x^2*y*z^2 + y*z^2 + x^3*z^2 + y^3")
    keys = [m.lex_key() for m, _ in p.terms]
    assert keys == sorted(keys, reverse=True)
    assert p.lm() == Monomial(2, 1, 2)


def test_leading_data_simple():
    p = P("z + y^3 + x^5")
    assert p.lm() == Monomial(0, 0, 1)
    assert int(p.lc()) == 1
    assert p.lt() == P("z")


def test_zero_polynomial_has_no_leading_data():
    z = Polynomial(F101)
    for attr in ("lm", "lc", "lt", "lc_x", "lm_yz", "lc_xy", "lm_z"):
        with pytest.raises(ZeroPolynomialError):
            getattr(z, attr)()


def test_staged_leading_data_worked_example():
    p = P("x^2*y*z^2 + y*z^2 + x^3*z^2 + y^3")
    assert p.lc_x() == P("x^2 + 1")
    assert p.lm_yz() == Monomial(0, 1, 2)
    assert p.lc_xy() == P("x^2*y + y + x^3")
    assert p.lm_z() == Monomial(0, 0, 2)


def test_staged_leading_data_small_examples():
    p = P("x*z + 100*z")
    assert p.lc_x() == P("x + 100")
    assert p.lm_yz() == Monomial(0, 0, 1)
    assert p.lc_xy() == P("x + 100")
    assert p.lm_z() == Monomial(0, 0, 1)

    q = P("y^2 + 100*y")
    # no z at all: the z-stage keeps the whole polynomial
    assert q.lc_xy() == q
    assert q.lm_z() == MONOMIAL_ONE
    assert q.lc_x() == P("1")
    assert q.lm_yz() == Monomial(0, 2, 0)


def test_staged_identity_random():
    """lt(p) is recovered from either stage of the leading data."""
    rng = random.Random(23)
    for _ in range(1000):
        p = random_poly(F101, rng, nonzero=True)
        lt = p.lt()
        via_x = p.lc_x() * Polynomial(F101, [(p.lm_yz(), 1)])
        via_xy = p.lc_xy() * Polynomial(F101, [(p.lm_z(), 1)])
        assert via_x.lt() == lt
        assert via_xy.lt() == lt


def test_arithmetic_identities():
    rng = random.Random(31)
    for _ in range(300):
        p = random_poly(F7, rng)
        q = random_poly(F7, rng)
        r = random_poly(F7, rng)
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero()
        assert p * constant(F7, 1) == p


def test_power_and_monic():
    p = P("x + 1", F7)
    assert p ** 3 == P("x^3 + 3*x^2 + 3*x + 1", F7)
    assert p ** 0 == P("1", F7)
    q = P("3*x^2 + 6", F7)
    assert q.monic() == P("x^2 + 2", F7)
    assert int(q.monic().lc()) == 1


def test_evaluate_and_substitute():
    p = P("x^2*y + z + 5")
    assert int(p.evaluate((2, 3, 4))) == (4 * 3 + 4 + 5) % 101
    assert p.substitute_x(F101(2)) == P("4*y + z + 5")
    q = P("x*y^2 + y + x")
    assert q.substitute_y(F101(3)) == P("9*x + x + 3")


def test_lex_head_drop_under_specialization():
    # substituting x can only lower or kill terms, never create new monomials
    rng = random.Random(47)
    for _ in range(200):
        p = random_poly(F101, rng, nonzero=True)
        img = p.substitute_x(F101(rng.randrange(101)))
        if not img.is_zero():
            assert img.lm().lex_key() <= p.lm().lex_key()


def test_parse_round_trip():
    texts = [
        "x^2*y*z^2 + y*z^2 + x^3*z^2 + y^3",
        "x^2 + 100*x",
        "z^2 + 100*z",
        "1",
        "100",
        "x*z + 100*z",
    ]
    for t in texts:
        assert P(t).text() == t


def test_parse_variants():
    assert P("-x + 1") == P("100*x + 1")
    assert P(" x ^ 2 ") == P("x^2")
    assert P("x - x").is_zero()
    assert P("0").is_zero()
    assert Polynomial(F101).text() == "0"


def test_parse_rejects_garbage():
    for bad in ("", "x +", "w^2", "x^", "3/4*x", "x**2", "+", "2x"):
        with pytest.raises(ValueError):
            P(bad)


def test_rational_coefficients():
    Q = RationalField()
    p = parse_polynomial(Q, "x^2 + 3/4")
    assert p.evaluate((2, 0, 0)) == Q("19/4")
    d = p.to_dict()
    assert d["terms"][1]["c"] == "3/4"
    assert poly_from_dict(Q, d) == p


def test_dict_round_trip():
    p = P("x^2*y*z^2 + y^3 + 42")
    d = p.to_dict()
    assert d == {
        "terms": [
            {"c": 1, "e": [2, 1, 2]},
            {"c": 1, "e": [0, 3, 0]},
            {"c": 42, "e": [0, 0, 0]},
        ]
    }
    assert poly_from_dict(F101, d) == p
    rng = random.Random(59)
    for _ in range(200):
        q = random_poly(F101, rng)
        assert poly_from_dict(F101, q.to_dict()) == q


def test_divide_frozen_examples():
    quots, rem = P("x*y^2").divide([P("y^2 + 100*y")])
    assert quots == [P("x")]
    assert rem == P("x*y")

    quots, rem = P("x^2*y + x").divide([P("y")])
    assert quots == [P("x^2")]
    assert rem == P("x")

    # lowest index wins when several divisors match
    quots, rem = P("y^2").divide([P("y + 100"), P("y")])
    assert quots[0] == P("y + 1")
    assert quots[1].is_zero()
    assert rem == P("1")
    quots, rem = P("y^2").divide([P("y"), P("y + 100")])
    assert quots[0] == P("y")
    assert quots[1].is_zero()
    assert rem.is_zero()


def test_divide_contract_random():
    """Reconstruction, irreducible remainder, and the degree bound."""
    rng = random.Random(61)
    for _ in range(500):
        p = random_poly(F101, rng, max_deg=4, max_terms=8)
        divisors = [
            random_poly(F101, rng, max_deg=3, max_terms=4, nonzero=True)
            for _ in range(rng.randrange(1, 4))
        ]
        quots, rem = p.divide(divisors)
        total = rem
        for q, d in zip(quots, divisors):
            total = total + q * d
        assert total == p
        for m, _ in rem.terms:
            assert not any(d.lm().divides(m) for d in divisors)
        if not p.is_zero():
            bound = p.lm().lex_key()
            for q, d in zip(quots, divisors):
                if not q.is_zero():
                    assert (q.lm() * d.lm()).lex_key() <= bound


def test_divide_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        P("x").divide([Polynomial(F101)])


def test_x_coefficient_blocks():
    p = P("x^2*y*z^2 + y*z^2 + x^3*z^2 + y^3")
    blocks = x_coefficient_blocks(p)
    assert [m for m, _ in blocks] == [
        Monomial(0, 1, 2),
        Monomial(0, 0, 2),
        Monomial(0, 3, 0),
    ]
    assert blocks[0][1] == P("x^2 + 1")
    assert blocks[1][1] == P("x^3")
    assert blocks[2][1] == P("1")


def test_content_divide_exact():
    q, witness = content_divide(P("x*z + 100*z"), P("x + 100"))
    assert witness is None
    assert q == P("z")
    assert q * P("x + 100") == P("x*z + 100*z")


def test_content_divide_witness():
    q, witness = content_divide(P("y^2 + 100*y"), P("x"))
    assert q is None
    block_monomial, block_coeff = witness
    assert block_monomial == Monomial(0, 2, 0)
    assert block_coeff == P("1")


def test_content_divide_round_trip():
    rng = random.Random(67)
    for _ in range(300):
        raw = random_poly(F101, rng, max_deg=3, max_terms=3, nonzero=True)
        d = Polynomial(F101, [(Monomial(m.a, 0, 0), c) for m, c in raw.terms])
        if d.is_zero():
            continue
        p = random_poly(F101, rng, max_deg=3, max_terms=5)
        q, witness = content_divide(p * d, d)
        assert witness is None
        assert q == p or (p.is_zero() and q.is_zero())


def test_content_divide_errors():
    with pytest.raises(ZeroDivisionError):
        content_divide(P("x"), Polynomial(F101))
    with pytest.raises(ValueError):
        content_divide(P("x"), P("y"))


def test_divides_univariate():
    ok, q = divides_univariate(P("x + 100"), P("x^2 + 100*x"))
    assert ok and q == P("x")
    ok, q = divides_univariate(P("x + 1"), P("x^2 + 1"))
    assert not ok and q is None
    with pytest.raises(ValueError):
        divides_univariate(P("y"), P("x"))
    with pytest.raises(ZeroDivisionError):
        divides_univariate(Polynomial(F101), P("x"))


def test_max_degrees_and_region_predicates():
    p = P("x^2*y*z^2 + y^3")
    assert p.max_degrees() == (2, 3, 2)
    assert not p.in_kx() and not p.in_kxy()
    assert P("x^3 + 1").in_kx()
    assert P("x*y + 2").in_kxy()
    assert not P("x*y + 2").in_kx()
    assert P("5").is_constant()
    assert Polynomial(F101).is_constant()
