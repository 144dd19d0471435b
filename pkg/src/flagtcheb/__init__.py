"""Face numbers of flag spheres, Tchebyshev triangulations and mirroring complexes."""

from __future__ import annotations

from .complex import SimplicialComplex, f_vector, h_vector
from .errors import FlagTchebError
from .poly import RatPoly, gamma_vector

__version__ = "0.1.0"

__all__ = ["FlagTchebError", "RatPoly", "SimplicialComplex", "f_vector", "gamma_vector", "h_vector"]
