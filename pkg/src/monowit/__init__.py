"""monowit: exact monomial (pre)orders from matrices, valuation-style rings,
and constructive dependence witnesses."""

from .scalars import (
    QuadScalar,
    RatFun1,
    RatFun2,
    SQRT2,
    eval_at_v0,
    is_rational_constant,
    quad_floor_ratio,
    quad_sign,
    u_adic_valuation,
    v_adic_valuation,
)

__all__ = [
    "QuadScalar",
    "RatFun1",
    "RatFun2",
    "SQRT2",
    "eval_at_v0",
    "is_rational_constant",
    "quad_floor_ratio",
    "quad_sign",
    "u_adic_valuation",
    "v_adic_valuation",
]
