"""Exact arithmetic in the limiting Grothendieck ring of wreath products.

Given a finite-rank ring R (free over the integers, with its structure
tensor), this package builds the integral limit ring spanned by the
multipartition basis Z, the rational enveloping-algebra realization that
serves as an independent cross-check, and the surrounding lambda-ring, Hopf
and Witt-vector structure, all over exact rational arithmetic.
"""

__version__ = "0.1.0"

from .kernels import backend

__all__ = ["backend", "__version__"]
