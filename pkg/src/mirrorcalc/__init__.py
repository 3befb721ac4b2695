"""Exact-arithmetic mirror symmetry engine.

Subpackages: series arithmetic, Schubert/Chern intersection counts,
lattice polytope polarity, Picard-Fuchs periods, Yukawa couplings and
instanton numbers, quantum cohomology rings, and a batch CLI.
"""

from mirrorcalc.series import (
    LaurentElement,
    LogSeries,
    NilpotentPoly,
    PowerSeries,
    lambert_expand,
    lambert_invert,
    lambert_synthesize,
    theta,
)

__all__ = [
    "LaurentElement",
    "LogSeries",
    "NilpotentPoly",
    "PowerSeries",
    "lambert_expand",
    "lambert_invert",
    "lambert_synthesize",
    "theta",
]
