"""Constructive dependence witnesses and their verification.

A witness is a nonzero Laurent polynomial P together with an order
matrix M such that P vanishes at the given ring elements and some
monomial that is minimal under M carries the coefficient one. Every
builder in this module returns an exactly verifiable object; nothing is
approximated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .laurent import (
    LaurentPoly,
    apply_monomial_map,
    clear_denominators,
    evaluate,
    minimal_monomials,
    one_like,
    scale_variable,
    weighted_components,
)
from .orders import (
    OrderMatrix,
    classify,
    int_entries,
    integerize,
    inverse_scaled,
    lex_matrix,
    normalize_rows,
    refine_to_order,
    validate_matrix,
)
from .rings import FractionElem, NotInRing, QuotElem, WElem, r_membership
from .scalars import QuadScalar, quad_floor_ratio, quad_sign


SWAP2 = OrderMatrix([[0, 1], [1, 0]])


class Witness:
    """A dependence witness: polynomial, order matrix and its flavor."""

    __slots__ = ("poly", "matrix", "kind", "note")

    def __init__(self, poly: LaurentPoly, matrix: OrderMatrix, note: str = ""):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "kind",
                           "order" if classify(matrix).is_total_order else "preorder")
        object.__setattr__(self, "note", note)

    def __setattr__(self, name, value):
        raise AttributeError("Witness is immutable")

    def __repr__(self):
        return f"Witness({self.poly} under {self.matrix}, {self.kind})"


def verify_witness(w: Witness, elements) -> tuple[bool, str]:
    """Exact check: P vanishes at the elements and a minimal monomial has
    coefficient one. Returns (ok, reason)."""
    if not w.poly:
        return False, "witness polynomial is zero"
    value = evaluate(w.poly, elements)
    if value:
        return False, "witness polynomial does not vanish at the elements"
    for e in minimal_monomials(w.poly, w.matrix):
        c = w.poly.terms[e]
        if c == one_like(c):
            return True, ""
    return False, "no minimal monomial has coefficient one"


def _one_of(x):
    """Multiplicative identity of the element's ring, 1 as a fallback."""
    if hasattr(x, "one"):
        return x.one()
    return Fraction(1)


def _unit_vector(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


def witness_trivial(elements, matrix: OrderMatrix) -> Witness | None:
    """Witness from a zero element (X_i) or a unit u (1 - u^-1 X_i).

    The constant monomial is minimal under every valid matrix, so the
    unit form works without looking at the matrix.
    """
    validate_matrix(matrix)
    n = len(elements)
    for i, a in enumerate(elements):
        if not a:
            poly = LaurentPoly({_unit_vector(n, i): _one_of(a)}, n)
            return Witness(poly, matrix, note=f"element {i + 1} is zero")
    for i, a in enumerate(elements):
        if hasattr(a, "is_unit") and a.is_unit():
            inv = a.inverse()
            poly = LaurentPoly({(0,) * n: one_like(inv),
                                _unit_vector(n, i): -inv}, n)
            return Witness(poly, matrix, note=f"element {i + 1} is a unit")
    return None


def _value_pair_nc(a, b, strict: bool):
    """n and c with b^n = c * a and c in the ring: n is minimal with
    n*val(b) >= val(a), or strictly above the ratio when strict is set."""
    alpha = a.valuation()
    beta = b.valuation()
    if strict:
        n = quad_floor_ratio(alpha, beta, "floor") + 1
    else:
        n = max(quad_floor_ratio(alpha, beta, "ceil"), 1)
    c = (b ** n).exact_div(a)
    return n, c


def _pair_witness(a, b, swap: bool, strict: bool) -> Witness:
    """Dependence of two nonzero nonunit elements under a 2-variable lex
    order; variables are X1 -> a, X2 -> b, swap picks the X2 > X1 order."""
    if not swap:
        n, c = _value_pair_nc(a, b, strict)
        poly = LaurentPoly({(0, n): one_like(c), (1, 0): -c}, 2)
        return Witness(poly, lex_matrix(2))
    n, c = _value_pair_nc(b, a, strict)
    poly = LaurentPoly({(n, 0): one_like(c), (0, 1): -c}, 2)
    return Witness(poly, SWAP2)


def v_pair_witness(a: FractionElem, b: FractionElem, swap: bool = False) -> Witness:
    """Lex dependence of any two elements of the valuation ring."""
    m = SWAP2 if swap else lex_matrix(2)
    t = witness_trivial([a, b], m)
    if t is not None:
        return t
    return _pair_witness(a, b, swap, strict=False)


def r_pair_witness(a: FractionElem, b: FractionElem, swap: bool = False) -> Witness:
    """Lex dependence of any two elements of R. The power is chosen
    strictly above the valuation ratio so the cofactor has positive value
    and hence zero, in particular rational, constant part."""
    for x in (a, b):
        if x and r_membership(x) is None:
            raise NotInRing("element lies outside R")
    m = SWAP2 if swap else lex_matrix(2)
    t = witness_trivial([a, b], m)
    if t is not None:
        return t
    w = _pair_witness(a, b, swap, strict=True)
    for c in w.poly.terms.values():
        assert r_membership(c) is not None
    return w


# ---------------------------------------------------------------------------
# the W construction: a single positive weight row plus the pair-value grid

def _graded_row(matrix: OrderMatrix):
    """Reduce a matrix to the single positive weight row driving the W
    construction; rational total orders are rejected."""
    validate_matrix(matrix)
    cls = classify(matrix)
    if cls.is_total_order and cls.is_rational:
        raise ValueError("rational total orders admit no such dependence in W")
    row = matrix.rows[0]
    if any(x.sign() <= 0 for x in row):
        raise ValueError("the first matrix row must be strictly positive")
    return row


def solve_eqMA(alpha: QuadScalar, beta: QuadScalar, A) -> tuple[Fraction, Fraction]:
    """A nonzero rational pair (e, f) with alpha*e + beta*f <= 0 and
    A*(e, f) >= (0, 0) lexicographically; A is an integer 2x2 matrix.

    Small integer solutions are scanned first so results stay readable;
    an exact construction guarantees totality.
    """
    (i1, i2), (j1, j2) = A
    candidates = [(e, f) for e in range(-6, 7) for f in range(-6, 7) if (e, f) != (0, 0)]
    candidates.sort(key=lambda p: (abs(p[0]) + abs(p[1]), p))
    for e, f in candidates:
        if quad_sign(alpha * e + beta * f) <= 0 and \
                (i1 * e + i2 * f, j1 * e + j2 * f) >= (0, 0):
            return Fraction(e), Fraction(f)
    if (i1, i2) == (0, 0):
        if (j1, j2) == (0, 0):
            return Fraction(-1), Fraction(0)
        e, f = j2, -j1
        if quad_sign(alpha * e + beta * f) > 0:
            e, f = -e, -f
        return Fraction(e), Fraction(f)
    s = alpha * i2 - beta * i1
    if s.sign() == 0:
        e, f = i2, -i1
        if j1 * e + j2 * f < 0:
            e, f = -e, -f
        return Fraction(e), Fraction(f)
    sgn = s.sign()
    e, f = -sgn * i2, sgn * i1
    if j1 * e + j2 * f >= 0:
        return Fraction(e), Fraction(f)
    mu = alpha * i1 + beta * i2
    if mu.sign() <= 0:
        eps = Fraction(1)
    else:
        bound = quad_floor_ratio(mu, s if sgn > 0 else -s, "ceil")
        eps = Fraction(1, bound + 1)
    return e + eps * i1, f + eps * i2


def w_pair_witness(matrix: OrderMatrix, a: WElem, b: WElem) -> Witness:
    """Dependence of any two elements of W under a positively weighted
    preorder, via the pair-value grid.

    The solved exponent pair keeps the coefficient-one monomial minimal
    (the weight inequality) and the cofactor inside W (the value
    inequality)."""
    t = witness_trivial([a, b], matrix)
    if t is not None:
        return t
    alpha, beta = _graded_row(matrix)
    A = ((a.wval[0], b.wval[0]), (a.wval[1], b.wval[1]))
    e, f = solve_eqMA(alpha, beta, A)
    scale = lcm(e.denominator, f.denominator)
    ei, fi = int(e * scale), int(f * scale)
    g = gcd(abs(ei), abs(fi))
    ei, fi = ei // g, fi // g
    c = (a ** ei) * (b ** fi)
    if not c.is_member():
        raise AssertionError("cofactor left W despite the value inequality")
    e1, e2 = max(ei, 0), max(-ei, 0)
    f1, f2 = max(fi, 0), max(-fi, 0)
    poly = LaurentPoly({(e1, f1): c.one(), (e2, f2): -c}, 2)
    return Witness(poly, matrix)


# ---------------------------------------------------------------------------
# transport along monomial maps

def transport_witness_to_lex(w: Witness) -> Witness:
    """From a witness for b_i = prod_j a_j^(M[j][i]) under an integer
    full-rank square M, the mapped polynomial is a lex witness for the
    a_j themselves: exponents map to M*e, injectively, and the minimal
    coefficient is preserved."""
    ent = int_entries(w.matrix)
    n = w.poly.nvars
    if len(ent) != n or any(len(r) != n for r in ent):
        raise ValueError("transport requires a square integer matrix")
    if classify(w.matrix).rank != n:
        raise ValueError("transport requires a full-rank matrix")
    q = apply_monomial_map(w.poly, ent)
    return Witness(clear_denominators(q), lex_matrix(n), note=w.note)


def monomial_images(elements, matrix_entries):
    """b_i = prod_j a_j^(M[j][i]) for the columns of an integer matrix."""
    n = len(matrix_entries[0])
    out = []
    for i in range(n):
        acc = None
        for j, a in enumerate(elements):
            k = matrix_entries[j][i]
            if k == 0:
                continue
            term = a ** k
            acc = term if acc is None else acc * term
        out.append(acc if acc is not None else _one_of(elements[0]))
    return out


# ---------------------------------------------------------------------------
# the quotient-field oracle and the valuative pipeline

def quot_v_lex_oracle(b_elements) -> Witness:
    """Lex dependence of elements of the quotient field of the valuation
    ring, with coefficients inside the valuation ring.

    Zero elements and elements of nonpositive value give one-term or
    unit-style witnesses; otherwise the first two values are compared.
    """
    bs = [QuotElem.from_fraction(x) if isinstance(x, FractionElem) else x
          for x in b_elements]
    n = len(bs)
    lex = lex_matrix(n)
    for i, b in enumerate(bs):
        if not b:
            return Witness(LaurentPoly({_unit_vector(n, i): _one_of(b)}, n), lex,
                           note=f"element {i + 1} is zero")
    for i, b in enumerate(bs):
        if b.valuation().sign() <= 0:
            inv = b.inverse()
            assert inv.is_localization_member()
            poly = LaurentPoly({(0,) * n: inv.one(),
                                _unit_vector(n, i): -inv}, n)
            return Witness(poly, lex, note=f"element {i + 1} has value <= 0")
    if n < 2:
        raise ValueError("a single element of positive value has no witness here")
    g1 = bs[0].valuation()
    g2 = bs[1].valuation()
    k = max(quad_floor_ratio(g1, g2, "ceil"), 1)
    c = bs[1] ** k / bs[0]
    assert c.is_localization_member()
    e_lo = tuple(k if j == 1 else 0 for j in range(n))
    poly = LaurentPoly({e_lo: c.one(), _unit_vector(n, 0): -c}, n)
    return Witness(poly, lex)


def vdim_witness(matrix: OrderMatrix, elements) -> Witness:
    """Dependence witness under a rational preorder matrix, built by
    refining to an integer total order, pulling the elements back through
    the scaled inverse map and transporting the quotient-field witness
    forward again. Coefficients land in the valuation ring."""
    validate_matrix(matrix)
    n = len(elements)
    if matrix.ncols != n:
        raise ValueError("matrix width must match the number of elements")
    for i, a in enumerate(elements):
        if not a:
            poly = LaurentPoly({_unit_vector(n, i): _one_of(a)}, n)
            return Witness(poly, matrix, note=f"element {i + 1} is zero")
    refined = integerize(refine_to_order(normalize_rows(matrix)))
    si = inverse_scaled(refined)
    quots = [QuotElem.from_fraction(a) for a in elements]
    bs = monomial_images(quots, si.matrix)
    inner = quot_v_lex_oracle(bs)
    q = clear_denominators(apply_monomial_map(inner.poly, si.matrix))
    converted = {e: c.to_fraction() if isinstance(c, QuotElem) else c
                 for e, c in q.terms.items()}
    return Witness(LaurentPoly(converted, n), matrix, note=inner.note)


# ---------------------------------------------------------------------------
# overrings of the valuation ring inside its quotient field

class OverringElement:
    """A quotient-field element with a recorded denominator: den * value
    lies in the valuation ring."""

    __slots__ = ("value", "den")

    def __init__(self, value: QuotElem, den: FractionElem):
        if not den:
            raise ZeroDivisionError("denominator must be nonzero")
        if not (QuotElem.from_fraction(den) * value).is_localization_member():
            raise NotInRing("den * value lies outside the valuation ring")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("OverringElement is immutable")

    def __repr__(self):
        return f"OverringElement({self.value}, den={self.den})"


def overring_lex_witness(matrix: OrderMatrix, elements: list[OverringElement]) -> Witness:
    """Lex dependence, with coefficients in the valuation ring, of
    quotient-field elements carrying recorded denominators.

    The first element is rescaled by a denominator power so the monomial
    images of the rescaled tuple land in the valuation ring; the witness
    for those images transports to lex, and the rescaling is undone by an
    exact variable substitution."""
    validate_matrix(matrix)
    ent = int_entries(matrix)
    n = len(elements)
    if len(ent) != n or any(len(r) != n for r in ent):
        raise ValueError("overring transport needs a square integer matrix")
    if any(x < 0 for row in ent for x in row):
        raise ValueError("overring transport needs nonnegative entries")
    if any(ent[0][i] <= 0 for i in range(n)):
        raise ValueError("overring transport needs a positive first row")
    if classify(matrix).rank != n:
        raise ValueError("overring transport needs a full-rank matrix")
    values = [e.value for e in elements]
    for i, b in enumerate(values):
        if not b:
            poly = LaurentPoly({_unit_vector(n, i): _one_of(b)}, n)
            return Witness(poly, lex_matrix(n), note=f"element {i + 1} is zero")
    den = elements[0].den
    for other in elements[1:]:
        den = den * other.den
    k = 0
    for i in range(n):
        total = sum(ent[j][i] for j in range(n))
        k = max(k, -(-total // ent[0][i]))
    dq = QuotElem.from_fraction(den)
    scaled = [dq ** k * values[0]] + list(values[1:])
    images = []
    for img in monomial_images(scaled, ent):
        if not img.is_localization_member():
            raise AssertionError("monomial image left the valuation ring")
        images.append(img.to_fraction())
    inner = vdim_witness(matrix, images)
    lexw = transport_witness_to_lex(inner)
    e_min = min(lexw.poly.terms)[0]
    descaled = scale_variable(lexw.poly, 0, den ** k, e_min)
    return Witness(descaled, lex_matrix(n), note=inner.note)


# ---------------------------------------------------------------------------
# homogenization over a local ring

def homogenize_witness(poly: LaurentPoly, elements) -> tuple[LaurentPoly, tuple]:
    """Fold a vanishing polynomial over maximal-ideal elements down to a
    homogeneous one of the minimal degree, keeping a unit coefficient.

    Higher-degree exponents split as e' + e'' with e' of minimal total
    degree, borrowing from the first variables first; the e'' part is
    evaluated and multiplied into the coefficient. The marked monomial
    keeps coefficient 1 plus maximal-ideal terms, hence stays a unit.
    """
    for i, a in enumerate(elements):
        if not a or (hasattr(a, "is_unit") and a.is_unit()):
            raise ValueError(f"element {i + 1} is not in the maximal ideal")
    if not poly.terms or any(min(e) < 0 for e in poly.terms):
        raise ValueError("homogenization needs a nonzero ordinary polynomial")
    d0 = min(sum(e) for e in poly.terms)
    t0 = None
    for e in sorted(poly.terms):
        if sum(e) == d0 and poly.terms[e] == one_like(poly.terms[e]):
            t0 = e
            break
    if t0 is None:
        raise ValueError("no minimal-degree monomial has coefficient one")
    out = {}
    for e, c in poly.terms.items():
        if sum(e) > d0:
            budget = d0
            lo = []
            for x in e:
                t = min(x, budget)
                lo.append(t)
                budget -= t
            lower = tuple(lo)
            extra = None
            for i, kk in enumerate(x - y for x, y in zip(e, lower)):
                if kk:
                    term = elements[i] ** kk
                    extra = term if extra is None else extra * term
            c = c * extra
        else:
            lower = e
        if lower in out:
            s = out[lower] + c
            if s:
                out[lower] = s
            else:
                del out[lower]
        else:
            out[lower] = c
    homog = LaurentPoly(out, poly.nvars)
    c0 = homog.coeff(t0)
    if c0 is None or not (hasattr(c0, "is_unit") and c0.is_unit()):
        raise AssertionError("marked coefficient failed to stay a unit")
    return homog, t0


# ---------------------------------------------------------------------------
# exhaustive refutation search

def _val_add(x, y):
    if isinstance(x, tuple):
        return tuple(a + b for a, b in zip(x, y))
    return x + y


def _plain_monoid_term(x) -> bool:
    """One monoid term over a trivial denominator (dens are normalized,
    so a single-term denominator is exactly 1)."""
    return (isinstance(x, FractionElem) and len(x.den.coeffs) == 1
            and len(x.num.coeffs) == 1)


def _exponents_of_degree(n: int, d: int):
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in _exponents_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    out.sort()
    return out


def independence_search(elements, matrix: OrderMatrix | None, max_degree: int, pool,
                        *, exact_degree: int | None = None,
                        require_unit: bool = False) -> LaurentPoly | None:
    """First vanishing combination over the coefficient pool, or None.

    Monomials up to max_degree (or of exactly exact_degree) are assigned
    pool coefficients depth-first, monomials in degree-then-lex order and
    the pool in its given order. A partial sum whose value is strictly
    below every value still achievable by the remaining terms can never
    cancel, so that branch is cut; the cut preserves which solution is
    found first.

    The accepted combination must have a coefficient-one monomial minimal
    over its support under the matrix or, with require_unit, some unit
    coefficient.
    """
    n = len(elements)
    if exact_degree is not None:
        exps = _exponents_of_degree(n, exact_degree)
    else:
        exps = [e for d in range(max_degree + 1) for e in _exponents_of_degree(n, d)]
    mon_values = [evaluate(LaurentPoly.monomial(e, Fraction(1), n), elements)
                  if any(e) else _one_of(elements[0]) for e in exps]
    zero = elements[0] - elements[0]
    pool = list(pool)
    nonzero_pool = [c for c in pool if c]
    pool_vals = [c.valuation() for c in nonzero_pool]
    term_min = []
    for mv in mon_values:
        base = mv.valuation()
        term_min.append(min(_val_add(base, pv) for pv in pool_vals))
    suffix_min = [None] * (len(exps) + 1)
    for t in range(len(exps) - 1, -1, -1):
        later = suffix_min[t + 1]
        suffix_min[t] = term_min[t] if later is None else min(term_min[t], later)

    # When every candidate term is a single monoid term over a trivial
    # denominator, a partial sum can only lose support exponents by later
    # terms landing on exactly the same exponent, one exponent per slot.
    # Every support exponent must then stay reachable and the support
    # cannot exceed the number of slots left. Both cuts only remove
    # branches with no vanishing completion, so the first hit is kept.
    fast = (all(_plain_monoid_term(x) for x in mon_values)
            and all(_plain_monoid_term(c) for c in nonzero_pool))
    suffix_exps = [frozenset()] * (len(exps) + 1)
    if fast:
        cur = frozenset()
        for t in range(len(exps) - 1, -1, -1):
            slot = {_val_add(mon_values[t].valuation(), pv)
                    for pv in pool_vals}
            cur = cur | slot
            suffix_exps[t] = cur

    chosen = [None] * len(exps)

    def leaf_ok():
        support = {e: c for e, c in zip(exps, chosen) if c}
        if not support:
            return False
        if require_unit:
            return any(hasattr(c, "is_unit") and c.is_unit() for c in support.values())
        cand = LaurentPoly(support, n)
        for e in minimal_monomials(cand, matrix):
            c = cand.terms[e]
            if c == one_like(c):
                return True
        return False

    def dfs(t, acc):
        if t == len(exps):
            return not acc and leaf_ok()
        for c in pool:
            nxt = acc + c * mon_values[t] if c else acc
            if nxt:
                if fast:
                    buckets = nxt.num.coeffs
                    if (len(buckets) > len(exps) - t - 1
                            or any(g not in suffix_exps[t + 1]
                                   for g in buckets)):
                        continue
                else:
                    later = suffix_min[t + 1]
                    if later is None or nxt.valuation() < later:
                        continue
            chosen[t] = c
            if dfs(t + 1, nxt):
                return True
        chosen[t] = None
        return False

    if dfs(0, zero):
        return LaurentPoly({e: c for e, c in zip(exps, chosen) if c}, n)
    return None


def phi_refutation_check(poly: LaurentPoly, elements):
    """The constant-part image of the minimal weighted component.

    Writing each element as v^(w_i) * unit_i, the lowest weight w among
    the polynomial's monomials contributes the only candidate terms for
    the v^w part of the evaluated sum; the image of that part under
    evaluation at v = 0 is returned together with w. A vanishing
    evaluation forces the image to vanish, so a nonzero image certifies a
    nonzero value of exact value w."""
    splits = [a.value_unit_split() for a in elements]
    weights = [g for g, _ in splits]
    units = [u for _, u in splits]
    w, comp = weighted_components(poly, weights)[0]
    image = None
    for e, c in comp.terms.items():
        term = c.const_coefficient()
        for u, k in zip(units, e):
            uc = u.const_coefficient()
            for _ in range(k):
                term = term * uc
        image = term if image is None else image + term
    return w, image
