import itertools
import random
from fractions import Fraction

import pytest

from monowit.orders import (
    EQUAL,
    GREATER,
    LESS,
    OrderMatrix,
    classify,
    compare_exponents,
    int_entries,
    integerize,
    inverse_scaled,
    lex_matrix,
    normalize_rows,
    refine_to_order,
    validate_matrix,
)
from monowit.scalars import SQRT2, QuadScalar


def vectors(n, bound):
    return list(itertools.product(range(bound + 1), repeat=n))


def same_preorder(m1, m2, bound=3):
    """Brute-force oracle: both matrices compare all small vectors alike."""
    vs = vectors(m1.ncols, bound)
    return all(
        compare_exponents(m1, e, f) == compare_exponents(m2, e, f)
        for e in vs for f in vs
    )


def test_validate_examples():
    assert validate_matrix(OrderMatrix([[1, 1], [0, -1]]))
    assert validate_matrix(OrderMatrix([[1, SQRT2]]))
    assert not validate_matrix(OrderMatrix([[1, 0], [2, 0]]))
    assert not validate_matrix(OrderMatrix([[-1, 1], [1, 0]]))
    assert not validate_matrix(OrderMatrix([[0, 1], [-1, 2]]))


def test_normalize_rows_example():
    m = normalize_rows(OrderMatrix([[1, 1], [0, -1]]))
    assert m == OrderMatrix([[1, 1], [1, 0]])


def test_normalize_rows_preserves_preorder():
    rng = random.Random(201)
    found = 0
    while found < 40:
        n = rng.choice([2, 3])
        rows = rng.choice([1, 2, n])
        m = OrderMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(rows)])
        if not validate_matrix(m):
            continue
        found += 1
        nm = normalize_rows(m)
        assert all(x.sign() >= 0 for row in nm.rows for x in row)
        assert same_preorder(m, nm)


def test_normalize_rejects_invalid():
    with pytest.raises(ValueError):
        normalize_rows(OrderMatrix([[1, 0], [2, 0]]))


def test_classify_examples():
    c = classify(OrderMatrix([[1, SQRT2]]))
    assert not c.is_rational and c.is_graded and c.is_total_order and c.rank == 1
    c = classify(lex_matrix(2))
    assert c.is_rational and not c.is_graded and c.is_total_order and c.rank == 2
    c = classify(OrderMatrix([[1, 1], [1, 0]]))
    assert c.is_rational and c.is_graded and c.is_total_order
    c = classify(OrderMatrix([[1, 1]]))
    assert c.is_rational and c.is_graded and not c.is_total_order and c.rank == 1
    # irrational entries can still define an order of deficient matrix rank
    c = classify(OrderMatrix([[2, QuadScalar(0, 2)]]))
    assert c.is_total_order and c.rank == 1


def test_total_order_flag_means_no_ties():
    rng = random.Random(202)
    mats = [
        OrderMatrix([[1, SQRT2]]),
        OrderMatrix([[1, 1]]),
        OrderMatrix([[1, 1], [1, 0]]),
        OrderMatrix([[1, 1], [2, 2]]),
        OrderMatrix([[1, QuadScalar(1, 1)]]),
        OrderMatrix([[2, 1]]),
    ]
    for _ in range(20):
        m = OrderMatrix([[rng.randint(1, 4), rng.randint(1, 4)]])
        mats.append(m)
    for m in mats:
        ties = any(
            compare_exponents(m, e, f) == EQUAL
            for e in vectors(2, 5) for f in vectors(2, 5) if e != f
        )
        assert classify(m).is_total_order == (not ties)


def test_compare_examples():
    m = OrderMatrix([[1, 1], [1, 0]])
    assert compare_exponents(m, (1, 2), (2, 1)) == LESS
    assert compare_exponents(m, (2, 1), (1, 2)) == GREATER
    assert compare_exponents(OrderMatrix([[1, 1]]), (2, 0), (1, 1)) == EQUAL
    assert compare_exponents(OrderMatrix([[1, SQRT2]]), (0, 1), (1, 0)) == GREATER
    with pytest.raises(ValueError):
        compare_exponents(m, (1, 2, 3), (0, 0, 0))


def test_compare_is_preorder_compatible_with_addition():
    rng = random.Random(203)
    for _ in range(60):
        n = rng.choice([2, 3])
        m = OrderMatrix([[rng.randint(0, 3) for _ in range(n)] for _ in range(2)])
        if not validate_matrix(m):
            continue
        e = tuple(rng.randint(0, 4) for _ in range(n))
        f = tuple(rng.randint(0, 4) for _ in range(n))
        g = tuple(rng.randint(0, 4) for _ in range(n))
        shifted = compare_exponents(
            m, tuple(a + c for a, c in zip(e, g)), tuple(b + c for b, c in zip(f, g)))
        assert compare_exponents(m, e, f) == shifted


def test_refine_to_order():
    m = refine_to_order(OrderMatrix([[1, 1]]))
    assert m == OrderMatrix([[1, 1], [1, 0]])
    assert classify(m).is_total_order
    # already total orders are untouched
    assert refine_to_order(lex_matrix(3)) == lex_matrix(3)
    with pytest.raises(ValueError):
        refine_to_order(OrderMatrix([[1, SQRT2]]))


def test_refine_preserves_strict_comparisons():
    rng = random.Random(204)
    for _ in range(30):
        n = rng.choice([2, 3])
        m = OrderMatrix([[rng.randint(0, 2) for _ in range(n)]])
        if not validate_matrix(m):
            continue
        r = refine_to_order(m)
        assert classify(r).is_total_order
        for e in vectors(n, 2):
            for f in vectors(n, 2):
                c = compare_exponents(m, e, f)
                if c != EQUAL:
                    assert compare_exponents(r, e, f) == c


def test_integerize():
    m = integerize(OrderMatrix([[Fraction(1, 2), Fraction(1, 2)], [1, 0]]))
    assert m == OrderMatrix([[1, 1], [1, 0]])
    m2 = OrderMatrix([[2, 4], [1, 0]])
    assert integerize(m2) == m2
    assert same_preorder(integerize(OrderMatrix([[Fraction(1, 3), 1]])),
                         OrderMatrix([[1, 3]]))
    with pytest.raises(ValueError):
        integerize(OrderMatrix([[1, SQRT2]]))


def test_inverse_scaled_examples():
    s = inverse_scaled(OrderMatrix([[1, 1], [1, 0]]))
    assert s.k == 1 and s.matrix == ((0, 1), (1, -1))
    s = inverse_scaled(OrderMatrix([[2, 1], [1, 1]]))
    assert s.k == 1 and s.matrix == ((1, -1), (-1, 2))
    s = inverse_scaled(OrderMatrix([[1, 1], [1, -1]]))
    assert s.k == 2 and s.matrix == ((1, 1), (1, -1))
    with pytest.raises(ValueError):
        inverse_scaled(OrderMatrix([[1, 1], [2, 2]]))


def test_inverse_scaled_random_property():
    rng = random.Random(205)
    done = 0
    while done < 40:
        n = rng.choice([2, 3])
        m = OrderMatrix([[rng.randint(0, 3) for _ in range(n)] for _ in range(n)])
        try:
            s = inverse_scaled(m)
        except ValueError:
            continue
        done += 1
        ent = int_entries(m)
        for i in range(n):
            for j in range(n):
                acc = sum(s.matrix[i][t] * ent[t][j] for t in range(n))
                assert acc == (s.k if i == j else 0)
        # k is minimal: k/p * M^-1 is non-integral for every prime p | k
        for p in range(2, s.k + 1):
            if s.k % p == 0 and all(x % p == 0 for row in s.matrix for x in row):
                raise AssertionError("k not minimal")
