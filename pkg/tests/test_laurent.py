"""Tests for sparse Laurent polynomials and monomial maps."""

import random
from fractions import Fraction

import pytest

from monowit.laurent import (
    LaurentPoly,
    apply_monomial_map,
    clear_denominators,
    evaluate,
    leading_coefficient,
    minimal_monomials,
    scale_variable,
    weighted_components,
)
from monowit.orders import OrderMatrix, classify, inverse_scaled, lex_matrix, validate_matrix
from monowit.rings import FractionElem, MonoidRingElem, NotInRing, QQ
from monowit.scalars import QuadScalar, SQRT2


def P(nvars, *terms):
    return LaurentPoly({tuple(e): Fraction(c) for *e, c in [t for t in terms]}, nvars)


def test_construction_prunes_zero_terms():
    p = LaurentPoly({(1, 0): Fraction(0), (0, 1): Fraction(2)}, 2)
    assert p.terms == {(0, 1): Fraction(2)}
    assert LaurentPoly.zero(2) == LaurentPoly({}, 2)
    assert not LaurentPoly.zero(2)
    with pytest.raises(ValueError):
        LaurentPoly({(1,): Fraction(1)}, 2)


def test_arithmetic_binomial_square():
    x1 = LaurentPoly.monomial((1, 0), Fraction(1))
    x2 = LaurentPoly.monomial((0, 1), Fraction(1))
    s = x1 + x2
    sq = s * s
    assert sq.coeff((2, 0)) == 1
    assert sq.coeff((1, 1)) == 2
    assert sq.coeff((0, 2)) == 1
    assert s - s == LaurentPoly.zero(2)


def test_evaluate_is_multiplicative():
    rng = random.Random(3)
    for _ in range(30):
        terms1 = {(rng.randint(-2, 2), rng.randint(-2, 2)): Fraction(rng.randint(-3, 3))
                  for _ in range(3)}
        terms2 = {(rng.randint(-2, 2), rng.randint(-2, 2)): Fraction(rng.randint(-3, 3))
                  for _ in range(3)}
        p, q = LaurentPoly(terms1, 2), LaurentPoly(terms2, 2)
        pts = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(2)]
        assert evaluate(p, pts) * evaluate(q, pts) == evaluate(p * q, pts)
        assert evaluate(p, pts) + evaluate(q, pts) == evaluate(p + q, pts)


def test_evaluate_ring_points_and_zero():
    v = FractionElem.v_power(QQ, 1)
    unit = FractionElem(MonoidRingElem.one(QQ) + MonoidRingElem.v_power(QQ, 1))
    p = LaurentPoly({(1, -1): Fraction(2)}, 2)
    val = evaluate(p, [v, unit])
    assert val == v * unit.inverse() * 2
    with pytest.raises(NotInRing):
        evaluate(p, [unit, v])
    z = evaluate(LaurentPoly.zero(2), [v, unit])
    assert not z


def test_minimal_monomials_examples():
    m = OrderMatrix([[QuadScalar(1), SQRT2]])
    # 6 * 1 < 5 * sqrt2, so X1^6 is the unique smallest monomial
    p = LaurentPoly({(6, 0): Fraction(1), (0, 5): Fraction(-7)}, 2)
    assert minimal_monomials(p, m) == [(6, 0)]
    assert leading_coefficient(p, m) == 1
    # under plain lex, X2^5 is smaller than X1^6
    assert minimal_monomials(p, lex_matrix(2)) == [(0, 5)]
    with pytest.raises(ValueError):
        minimal_monomials(LaurentPoly.zero(2), m)


def test_minimal_monomials_tie_under_preorder():
    m = OrderMatrix([[QuadScalar(1), QuadScalar(1)]])
    p = LaurentPoly({(2, 0): Fraction(1), (1, 1): Fraction(2), (0, 3): Fraction(3)}, 2)
    assert minimal_monomials(p, m) == [(1, 1), (2, 0)]
    with pytest.raises(ValueError):
        leading_coefficient(p, m)


def test_apply_monomial_map_basic():
    L = [[0, 1], [1, -1]]
    x1 = LaurentPoly.monomial((1, 0), Fraction(1))
    x2 = LaurentPoly.monomial((0, 1), Fraction(1))
    assert apply_monomial_map(x1, L) == LaurentPoly.monomial((0, 1), Fraction(1))
    assert apply_monomial_map(x2, L) == LaurentPoly.monomial((1, -1), Fraction(1))


def test_apply_monomial_map_composition_scales_by_k():
    rng = random.Random(9)
    mats = [
        OrderMatrix([[1, 1], [1, 0]]),
        OrderMatrix([[2, 1], [1, 1]]),
        OrderMatrix([[1, 1], [1, -1]]),
    ]
    for m in mats:
        si = inverse_scaled(m)
        k, L = si.k, si.matrix
        mi = [[int(e.rat) for e in row] for row in m.rows]
        for _ in range(10):
            terms = {(rng.randint(-3, 3), rng.randint(-3, 3)): Fraction(rng.randint(-4, 4))
                     for _ in range(4)}
            p = LaurentPoly(terms, 2)
            scaled = LaurentPoly({tuple(k * x for x in e): c for e, c in p.terms.items()}, 2)
            assert apply_monomial_map(apply_monomial_map(p, L), mi) == scaled


def test_substitution_identity_with_points():
    # evaluating the mapped polynomial at a equals evaluating p at the
    # monomial images b_i = prod_j a_j^(M[j][i])
    rng = random.Random(15)
    M = [[1, 1], [1, 0]]
    for _ in range(20):
        terms = {(rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-3, 3))
                 for _ in range(3)}
        p = LaurentPoly(terms, 2)
        a = [Fraction(rng.randint(1, 4), rng.randint(1, 4)) for _ in range(2)]
        b = [a[0] ** M[0][i] * a[1] ** M[1][i] for i in range(2)]
        assert evaluate(p, b) == evaluate(apply_monomial_map(p, M), a)


def test_clear_denominators():
    p = LaurentPoly({(-2, 1): Fraction(1), (1, 0): Fraction(3)}, 2)
    q = clear_denominators(p)
    assert q == LaurentPoly({(0, 1): Fraction(1), (3, 0): Fraction(3)}, 2)
    r = LaurentPoly({(1, 2): Fraction(5)}, 2)
    assert clear_denominators(r) is r


def test_weighted_components_ordering():
    p = LaurentPoly({(2, 0): Fraction(1), (1, 1): Fraction(2), (0, 1): Fraction(3)}, 2)
    comps = weighted_components(p, [QuadScalar(1), SQRT2])
    weights = [w for w, _ in comps]
    assert weights == [SQRT2, QuadScalar(2), QuadScalar(1) + SQRT2]
    assert comps[0][1] == LaurentPoly({(0, 1): Fraction(3)}, 2)
    rebuilt = LaurentPoly.zero(2)
    for _, comp in comps:
        rebuilt = rebuilt + comp
    assert rebuilt == p


def test_scale_variable():
    v = FractionElem.v_power(QQ, 1)
    one = FractionElem.const(QQ, 1)
    p = LaurentPoly({(2, 0): one, (1, 1): one}, 2)
    q = scale_variable(p, 0, v, 1)
    assert q.coeff((2, 0)) == v
    assert q.coeff((1, 1)) == one
    with pytest.raises(NotInRing):
        scale_variable(p, 0, v, 2)


def test_leading_coefficient_invariant_under_monomial_map():
    # the matrix map sends the smallest monomial to the lex-smallest one,
    # preserving its coefficient
    rng = random.Random(21)
    candidates = [
        OrderMatrix([[1, 1], [1, 0]]),
        OrderMatrix([[2, 1], [1, 1]]),
        OrderMatrix([[1, 2], [1, 1]]),
        OrderMatrix([[3, 1], [2, 1]]),
    ]
    for _ in range(40):
        m = rng.choice(candidates)
        validate_matrix(m)
        assert classify(m).is_total_order
        mi = [[int(e.rat) for e in row] for row in m.rows]
        terms = {}
        for _ in range(rng.randint(1, 5)):
            terms[(rng.randint(0, 4), rng.randint(0, 4))] = Fraction(rng.randint(-5, 5))
        p = LaurentPoly(terms, 2)
        if not p:
            continue
        lc = leading_coefficient(p, m)
        assert lc == leading_coefficient(apply_monomial_map(p, mi), lex_matrix(2))
