"""Universal splitting rings of monic polynomials over exact base rings."""

from ._splitring import (
    Matrix,
    Poly,
    SplitElem,
    SplitRing,
    SplitringError,
    build_realization,
    central_quotient,
    default_cap,
    matrix_from_json,
    relations,
    relations_agree,
    sigma_expansion_holds,
    verify_realization,
)

__all__ = [
    "Matrix",
    "Poly",
    "SplitElem",
    "SplitRing",
    "SplitringError",
    "build_realization",
    "central_quotient",
    "default_cap",
    "matrix_from_json",
    "relations",
    "relations_agree",
    "sigma_expansion_holds",
    "verify_realization",
]
