"""Numerical laboratory for integer sequences generated by cocycles over
irrational rotations: exact sequence construction, dynamical simulators,
and the orthogonality / equidistribution statistics they support."""

__version__ = "0.1.0"

from .surd import (
    ContinuedFraction,
    FixedPointReal,
    IncompatibleRadicandsError,
    PrecisionExhausted,
    QuadPairValue,
    QuadraticSurd,
    approx_f64,
    cf_expand,
    exact_floor_linear,
    frac_part,
    preset,
)
from .cocycle import (
    AffineCocycle,
    AffineOrbit,
    BirkhoffAccumulator,
    FourierCocycle,
    TailModel,
    affine_closed_form,
    birkhoff_sum,
    ergodicity_criterion,
)

__all__ = [
    "__version__",
    "ContinuedFraction",
    "FixedPointReal",
    "IncompatibleRadicandsError",
    "PrecisionExhausted",
    "QuadPairValue",
    "QuadraticSurd",
    "approx_f64",
    "cf_expand",
    "exact_floor_linear",
    "frac_part",
    "preset",
    "AffineCocycle",
    "AffineOrbit",
    "BirkhoffAccumulator",
    "FourierCocycle",
    "TailModel",
    "affine_closed_form",
    "birkhoff_sum",
    "ergodicity_criterion",
]
