"""convcheck: exact-arithmetic checker for a catalog of binomial-convolution
identities of two-letter symmetric functions and their recurrence families."""

from ._scalar import BACKEND, Rational

__version__ = "0.1.0"

__all__ = ["BACKEND", "Rational", "__version__"]
