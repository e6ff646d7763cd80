"""Fractional-order constants and the power-law nonlinearity family.

Everything downstream (cylinder assembly, spectral solves, Orlicz norms)
derives its constants from :class:`FractionalParams` and
:class:`PowerNonlinearity`.  Both are immutable value objects and all
operations here are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FractionalParams",
    "PowerNonlinearity",
    "fractional_params",
    "gamma_function",
    "nonlinearity_eval",
    "conjugate_eval",
]

# Lanczos approximation, g = 7 with 9 coefficients.  Relative accuracy is
# better than 1e-13 on (0, 2), which covers both Gamma(s) and Gamma(1-s).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_function(z: float) -> float:
    """Gamma(z) for real z > 0 by the Lanczos approximation."""
    if z <= 0.0:
        raise ValueError(f"gamma_function requires z > 0, got {z}")
    if z < 0.5:
        # reflection keeps the series argument in its accurate range
        return math.pi / (math.sin(math.pi * z) * gamma_function(1.0 - z))
    z -= 1.0
    x = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * x


@dataclass(frozen=True)
class FractionalParams:
    """Order s in (0,1), weight exponent alpha = 1 - 2s and scaling d_s."""

    s: float
    alpha: float
    d_s: float


def fractional_params(s: float) -> FractionalParams:
    """Build the constant pack for fractional order ``s``.

    alpha = 1 - 2s is the exponent of the degenerate weight y^alpha and
    d_s = 2^alpha * Gamma(1-s) / Gamma(s) scales the boundary flux of the
    extended problem back to the fractional operator.
    """
    if not (0.0 < s < 1.0):
        raise ValueError(f"fractional order must satisfy 0 < s < 1, got {s}")
    alpha = 1.0 - 2.0 * s
    d_s = 2.0**alpha * gamma_function(1.0 - s) / gamma_function(s)
    return FractionalParams(s=s, alpha=alpha, d_s=d_s)


@dataclass(frozen=True)
class PowerNonlinearity:
    """Odd monotone power nonlinearity f(t) = b |t|^(q-1) t with b > 0, q >= 1.

    Its primitive is F(t) = b/(q+1) |t|^(q+1); the inverse of f and the
    complementary primitive close the Young/Hoelder pairing used by the
    Orlicz module.
    """

    b: float
    q: float

    def __post_init__(self):
        if not self.b > 0.0:
            raise ValueError(f"coefficient b must be positive, got {self.b}")
        if not self.q >= 1.0:
            raise ValueError(f"exponent q must be >= 1, got {self.q}")

    def value(self, t):
        """f(t) = b |t|^(q-1) t."""
        t = np.asarray(t, dtype=float)
        return self.b * np.abs(t) ** (self.q - 1.0) * t

    def derivative(self, t):
        """f'(t) = q b |t|^(q-1), nonnegative everywhere."""
        t = np.asarray(t, dtype=float)
        return self.q * self.b * np.abs(t) ** (self.q - 1.0)

    def primitive(self, t):
        """F(t) = b/(q+1) |t|^(q+1)."""
        t = np.asarray(t, dtype=float)
        return self.b / (self.q + 1.0) * np.abs(t) ** (self.q + 1.0)

    def inverse(self, t):
        """Inverse of f:  b^(-1/q) |t|^((1-q)/q) t, with 0 mapped to 0."""
        t = np.asarray(t, dtype=float)
        # |t|^((1-q)/q) blows up at 0 for q > 1; mask it out.
        base = np.where(t == 0.0, 1.0, np.abs(t))
        out = self.b ** (-1.0 / self.q) * base ** ((1.0 - self.q) / self.q) * t
        return np.where(t == 0.0, 0.0, out)

    def conjugate_primitive(self, t):
        """Complementary primitive q/(q+1) b^(-1/q) |t|^((q+1)/q)."""
        t = np.asarray(t, dtype=float)
        return self.q / (self.q + 1.0) * self.b ** (-1.0 / self.q) * np.abs(t) ** (
            (self.q + 1.0) / self.q
        )


def nonlinearity_eval(nl: PowerNonlinearity, t):
    """Evaluate (f, f', F) of the power family at ``t``."""
    return nl.value(t), nl.derivative(t), nl.primitive(t)


def conjugate_eval(nl: PowerNonlinearity, t):
    """Evaluate the inverse pair (f~, F~) at ``t``."""
    return nl.inverse(t), nl.conjugate_primitive(t)
