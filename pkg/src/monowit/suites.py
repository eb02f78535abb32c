"""Seeded property-check suites with deterministic JSON reports.

Each suite draws its inputs from a seeded generator, runs the relevant
builders and verifiers, and records one case per check.  Reports are
plain dicts; render_report serializes them with sorted keys so equal
runs produce byte-identical text (timing excluded).
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from .laurent import (
    LaurentPoly,
    apply_monomial_map,
    evaluate,
    leading_coefficient,
)
from .orders import OrderMatrix, classify, int_entries, lex_matrix, validate_matrix
from .rings import (
    EXPONENT_POOL,
    QQ,
    QU,
    FractionElem,
    MonoidRingElem,
    QuotElem,
    random_fraction_elem,
    random_monoid_elem,
    random_r_element,
    random_w_element,
    w_divides,
    w_value,
)
from .scalars import SQRT2, QuadScalar, RatFun1
from .witness import (
    OverringElement,
    Witness,
    homogenize_witness,
    independence_search,
    monomial_images,
    overring_lex_witness,
    phi_refutation_check,
    r_pair_witness,
    transport_witness_to_lex,
    v_pair_witness,
    vdim_witness,
    verify_witness,
    w_pair_witness,
)

SUITE_NAMES = ("lPrelim", "pR", "pW", "pV", "tDim", "tVdimA", "tVdimB",
               "cAnalytic")


def _rng(name: str, seed: int) -> random.Random:
    return random.Random(f"{name}:{seed}")


def quad_json(q: QuadScalar) -> dict:
    return {"rat": str(q.rat), "irr": str(q.irr)}


def witness_json(w: Witness) -> dict:
    return {"poly": str(w.poly), "matrix": str(w.matrix), "kind": w.kind,
            "note": w.note}


def _case(inputs: dict, ok: bool, reason: str = "") -> dict:
    out = dict(inputs)
    out["verdict"] = "pass" if ok else "fail"
    if not ok:
        out["reason"] = reason or "check failed"
    return out


def _verified_case(inputs: dict, w: Witness, elements) -> dict:
    ok, reason = verify_witness(w, elements)
    inputs = dict(inputs)
    inputs["witness"] = witness_json(w)
    return _case(inputs, ok, reason)


def _nonzero(draw):
    for _ in range(100):
        x = draw()
        if x != 0:
            return x
    raise RuntimeError("generator kept producing zero")


def _random_total_order_matrix(rng: random.Random, n: int) -> OrderMatrix:
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        m = OrderMatrix(rows)
        if validate_matrix(m) and classify(m).is_total_order:
            return m


def _random_laurent_poly(rng: random.Random, n: int) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        e = tuple(rng.randint(-3, 3) for _ in range(n))
        c = _nonzero(lambda: random_fraction_elem(rng, QQ, "any"))
        terms[e] = c
    return LaurentPoly(terms, n)


def suite_lPrelim(seed: int, scale: int) -> list[dict]:
    rng = _rng("lPrelim", seed)
    cases = []
    for _ in range(scale):
        n = rng.choice([2, 3])
        m = _random_total_order_matrix(rng, n)
        p = _random_laurent_poly(rng, n)
        image = apply_monomial_map(p, int_entries(m))
        lc_direct = leading_coefficient(p, m)
        lc_image = leading_coefficient(image, lex_matrix(n))
        ok = lc_direct == lc_image
        cases.append(_case({"matrix": str(m), "poly": str(p)}, ok,
                           "leading coefficient changed under transport"))
    return cases


_R_SEARCH_ELEMENTS = "v, u*v"
_R_SEARCH_MATRIX = OrderMatrix([[1, 1]])


def _r_pool():
    v = FractionElem.v_power(QU, QuadScalar(1))
    uv = FractionElem(MonoidRingElem(QU, {QuadScalar(1): RatFun1.var()}))
    one = FractionElem.const(QU, Fraction(1))
    zero = FractionElem.const(QU, Fraction(0))
    return [zero, one, -one, v, -v, uv, -uv], [v, uv]


def suite_pR(seed: int, scale: int) -> list[dict]:
    rng = _rng("pR", seed)
    cases = []
    kinds = ["any", "unit", "maxideal"]
    for _ in range(scale):
        a = _nonzero(lambda: random_r_element(rng, rng.choice(kinds)))
        b = _nonzero(lambda: random_r_element(rng, rng.choice(kinds)))
        for swap in (False, True):
            w = r_pair_witness(a, b, swap=swap)
            cases.append(_verified_case(
                {"a": str(a), "b": str(b), "swap": swap}, w, [a, b]))
    pool, elements = _r_pool()
    found = independence_search(elements, _R_SEARCH_MATRIX, 2, pool)
    cases.append(_case(
        {"check": "no-low-degree-relation", "elements": _R_SEARCH_ELEMENTS,
         "matrix": str(_R_SEARCH_MATRIX), "max_degree": 2,
         "found": None if found is None else str(found)},
        found is None, "search found an unexpected relation"))
    cases.extend(_phi_check_cases(rng, pool, elements, min(scale, 50)))
    return cases


def _cancelling_term_pairs(pool, elements):
    """All pairs (term, term) over distinct degree <= 2 monomials whose
    values cancel exactly; each term is (exponent, coefficient, value)."""
    exps = [(i, j) for i in range(3) for j in range(3) if i + j <= 2]
    terms = []
    for e in exps:
        mv = evaluate(LaurentPoly.monomial(e, Fraction(1), 2), elements)
        for c in pool:
            if c != 0:
                terms.append((e, c, c * mv))
    pairs = []
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            if (terms[i][0] != terms[j][0]
                    and terms[i][2] + terms[j][2] == 0):
                pairs.append((terms[i], terms[j]))
    return pairs


def phi_vanishing_polys(rng, pool, elements, count: int):
    """Constructed vanishing pool-coefficient combinations: sums of one
    or two exactly cancelling term pairs with disjoint supports."""
    pairs = _cancelling_term_pairs(pool, elements)
    out = []
    for _ in range(count):
        first = rng.choice(pairs)
        terms = {first[0][0]: first[0][1], first[1][0]: first[1][1]}
        if rng.random() < 0.5:
            second = rng.choice(pairs)
            extra = {second[0][0], second[1][0]}
            if not (extra & set(terms)):
                terms[second[0][0]] = second[0][1]
                terms[second[1][0]] = second[1][1]
        out.append(LaurentPoly(terms, 2))
    return out


def _phi_check_cases(rng, pool, elements, count: int) -> list[dict]:
    """Every constructed vanishing combination must have a phi-trivial
    minimal weighted component; a unit coefficient there would make the
    phi image nonzero and the value nonzero, so no witness can vanish."""
    cases = []
    for p in phi_vanishing_polys(rng, pool, elements, count):
        value = evaluate(p, elements)
        w, image = phi_refutation_check(p, elements)
        ok = value == 0 and image == 0
        cases.append(_case({"check": "phi-refutation", "poly": str(p),
                            "weight": quad_json(w)}, ok,
                           "phi image of a vanishing combination "
                           "is nonzero"))
    return cases


_W_MATRICES = (OrderMatrix([[1, 1]]),
               OrderMatrix([[QuadScalar(1), SQRT2]]),
               OrderMatrix([[2, 1]]),
               OrderMatrix([[1, 1], [2, 2]]))


def suite_pW(seed: int, scale: int) -> list[dict]:
    rng = _rng("pW", seed)
    cases = []
    for _ in range(scale):
        a = _nonzero(lambda: random_w_element(rng, "any"))
        b = _nonzero(lambda: random_w_element(rng, "any"))
        total = w_divides(a, b) or w_divides(b, a)
        additive = w_value(a * b) == tuple(
            x + y for x, y in zip(w_value(a), w_value(b)))
        cases.append(_case({"check": "divisibility-total", "a": str(a),
                            "b": str(b)}, total,
                           "neither element divides the other"))
        cases.append(_case({"check": "value-additive", "a": str(a),
                            "b": str(b)}, additive,
                           "value not additive under product"))
    for m in _W_MATRICES:
        for _ in range(scale):
            a = _nonzero(lambda: random_w_element(rng, "any"))
            b = _nonzero(lambda: random_w_element(rng, "any"))
            w = w_pair_witness(m, a, b)
            cases.append(_verified_case(
                {"matrix": str(m), "a": str(a), "b": str(b)}, w, [a, b]))
    return cases


def _v_search_pool():
    half = FractionElem.v_power(QQ, QuadScalar(Fraction(1, 2)))
    v = FractionElem.v_power(QQ, QuadScalar(1))
    vs = FractionElem.v_power(QQ, SQRT2)
    one = FractionElem.const(QQ, Fraction(1))
    zero = FractionElem.const(QQ, Fraction(0))
    return [zero, one, -one, half, -half, v, -v, vs, -vs], [v, vs]


def suite_pV(seed: int, scale: int) -> list[dict]:
    rng = _rng("pV", seed)
    cases = []
    kinds = ["any", "unit", "maxideal"]
    for _ in range(scale):
        a = random_fraction_elem(rng, QQ, rng.choice(kinds))
        b = random_fraction_elem(rng, QQ, rng.choice(kinds))
        for swap in (False, True):
            w = v_pair_witness(a, b, swap=swap)
            cases.append(_verified_case(
                {"a": str(a), "b": str(b), "swap": swap}, w, [a, b]))
    pool, elements = _v_search_pool()
    degree = 3 if scale >= 200 else 2
    matrix = OrderMatrix([[QuadScalar(1), SQRT2]])
    found = independence_search(elements, matrix, degree, pool)
    cases.append(_case(
        {"check": "no-low-degree-relation", "elements": "v, v^(0+1 s2)",
         "matrix": str(matrix), "max_degree": degree,
         "found": None if found is None else str(found)},
        found is None, "search found an unexpected relation"))
    return cases


_TDIM_MATRIX = OrderMatrix([[1, 1], [1, 0]])


def suite_tDim(seed: int, scale: int) -> list[dict]:
    rng = _rng("tDim", seed)
    cases = []
    kinds = ["any", "unit", "maxideal"]
    for _ in range(scale):
        a = [random_fraction_elem(rng, QQ, rng.choice(kinds)),
             random_fraction_elem(rng, QQ, rng.choice(kinds))]
        images = monomial_images(a, int_entries(_TDIM_MATRIX))
        w = vdim_witness(_TDIM_MATRIX, images)
        ok1, reason1 = verify_witness(w, images)
        transported = transport_witness_to_lex(w)
        ok2, reason2 = verify_witness(transported, a)
        inputs = {"a": [str(x) for x in a], "matrix": str(_TDIM_MATRIX),
                  "witness": witness_json(w),
                  "transported": witness_json(transported)}
        cases.append(_case(inputs, ok1 and ok2, reason1 or reason2))
    return cases


_VDIM_MATRICES = (lex_matrix(2),
                  OrderMatrix([[1, 1], [1, 0]]),
                  OrderMatrix([[2, 1], [1, 1]]),
                  OrderMatrix([[1, 1]]))


def suite_tVdimA(seed: int, scale: int) -> list[dict]:
    rng = _rng("tVdimA", seed)
    cases = []
    kinds = ["any", "unit", "maxideal"]
    for m in _VDIM_MATRICES:
        for _ in range(scale):
            a = [random_fraction_elem(rng, QQ, rng.choice(kinds)),
                 random_fraction_elem(rng, QQ, rng.choice(kinds))]
            w = vdim_witness(m, a)
            cases.append(_verified_case(
                {"matrix": str(m), "a": [str(x) for x in a]}, w, a))
    return cases


def _random_overring_pair_common_den(rng):
    g = rng.choice(EXPONENT_POOL)
    den = FractionElem.v_power(QQ, g)
    out = []
    for _ in range(2):
        num = random_monoid_elem(rng, QQ, max_terms=2)
        value = QuotElem(num, MonoidRingElem.v_power(QQ, g))
        out.append(OverringElement(value, den))
    return out


def suite_tVdimB(seed: int, scale: int) -> list[dict]:
    rng = _rng("tVdimB", seed)
    cases = []
    for _ in range(scale):
        elements = _random_overring_pair_common_den(rng)
        w = overring_lex_witness(_TDIM_MATRIX, elements)
        values = [e.value for e in elements]
        inputs = {"matrix": str(_TDIM_MATRIX),
                  "values": [str(x) for x in values],
                  "dens": [str(e.den) for e in elements]}
        cases.append(_verified_case(inputs, w, values))
    return cases


def suite_cAnalytic(seed: int, scale: int) -> list[dict]:
    rng = _rng("cAnalytic", seed)
    cases = []
    m = OrderMatrix([[1, 1]])
    for _ in range(scale):
        a = [_nonzero(lambda: random_fraction_elem(rng, QQ, "maxideal")),
             _nonzero(lambda: random_fraction_elem(rng, QQ, "maxideal"))]
        w = vdim_witness(m, a)
        homog, t0 = homogenize_witness(w.poly, a)
        vanishes = evaluate(homog, a) == 0
        degrees = {sum(e) for e in homog.terms}
        homogeneous = len(degrees) == 1
        unit = homog.coeff(t0).is_unit()
        ok = vanishes and homogeneous and unit
        reason = ("homogenized polynomial does not vanish" if not vanishes
                  else "result is not homogeneous" if not homogeneous
                  else "marked coefficient is not a unit")
        cases.append(_case({"a": [str(x) for x in a],
                            "homogeneous": str(homog),
                            "unit_monomial": list(t0)}, ok, reason))
    pool, elements = _r_pool()
    for d in (1, 2):
        found = independence_search(elements, None, 0, pool,
                                    exact_degree=d, require_unit=True)
        cases.append(_case(
            {"check": "no-homogeneous-relation",
             "elements": _R_SEARCH_ELEMENTS, "degree": d,
             "found": None if found is None else str(found)},
            found is None, "found an unexpected homogeneous relation"))
    return cases


_SUITES = {
    "lPrelim": suite_lPrelim,
    "pR": suite_pR,
    "pW": suite_pW,
    "pV": suite_pV,
    "tDim": suite_tDim,
    "tVdimA": suite_tVdimA,
    "tVdimB": suite_tVdimB,
    "cAnalytic": suite_cAnalytic,
}


def run_suite(name: str, seed: int, scale: int) -> dict:
    """Run one named suite; returns the report dict including timing."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of "
                         f"{sorted(_SUITES)}")
    if scale < 1:
        raise ValueError("scale must be at least 1")
    start = time.monotonic()
    cases = _SUITES[name](seed, scale)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    failed = sum(1 for c in cases if c["verdict"] == "fail")
    return {
        "command": "suite",
        "name": name,
        "seed": seed,
        "scale": scale,
        "cases": cases,
        "summary": {"total": len(cases), "passed": len(cases) - failed,
                    "failed": failed},
        "timing_ms": elapsed_ms,
    }


def render_report(report: dict, include_timing: bool = True) -> str:
    """Serialize a report deterministically; timing is the only field
    that may differ between identical runs."""
    out = dict(report)
    if not include_timing:
        out.pop("timing_ms", None)
    return json.dumps(out, sort_keys=True, indent=2) + "\n"
