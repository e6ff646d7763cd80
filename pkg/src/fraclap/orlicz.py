"""Luxemburg norms and the Young/Hoelder inequality surface for the power
nonlinearity family.

All integrals run through the shared per-cell tensor Gauss rule (2 points per
direction) applied to the multilinear interpolant, so the pointwise Young
inequality transfers to the discrete functionals exactly.
"""

from __future__ import annotations

import numpy as np

from .fields import NodalField, integrate_interpolant
from .params import PowerNonlinearity

__all__ = [
    "luxemburg_norm",
    "delta2_constants",
    "holder_ratio",
    "conjugate_integrability_check",
]

_QUAD_POINTS = 2
_BISECT_TOL = 1e-12  # on |integral - 1|, tighter than the 1e-8 guarantee
_BISECT_CAP = 200


def _modular(field: NodalField, primitive, k: float) -> float:
    """int primitive(u/k) via the shared quadrature of the interpolant."""
    return integrate_interpolant(field, lambda v: primitive(v / k), npts=_QUAD_POINTS)


def _luxemburg(field: NodalField, primitive) -> float:
    vals = field.values
    if not np.all(np.isfinite(vals)):
        raise ValueError("field contains non-finite values")
    if not np.any(vals):
        return 0.0

    k_lo = 1e-30
    k_hi = max(1.0, float(np.max(np.abs(vals))) * 2.0)
    # the modular is strictly decreasing in k, so push k_hi to the <= 1 side
    for _ in range(_BISECT_CAP):
        if _modular(field, primitive, k_hi) <= 1.0:
            break
        k_hi *= 2.0
    else:
        raise ValueError("could not bracket the Luxemburg norm")

    for _ in range(_BISECT_CAP):
        k_mid = 0.5 * (k_lo + k_hi)
        val = _modular(field, primitive, k_mid)
        if abs(val - 1.0) <= _BISECT_TOL:
            return k_mid
        if val > 1.0:
            k_lo = k_mid
        else:
            k_hi = k_mid
    return 0.5 * (k_lo + k_hi)


def luxemburg_norm(field: NodalField, nl: PowerNonlinearity) -> float:
    """Luxemburg norm inf{k > 0 : int F(u/k) <= 1} for F induced by ``nl``.

    Found by bisection; at the returned k the modular integral equals 1 to
    within 1e-8.  The zero field has norm 0.
    """
    return _luxemburg(field, nl.primitive)


def conjugate_luxemburg_norm(field: NodalField, nl: PowerNonlinearity) -> float:
    """Luxemburg norm with respect to the complementary function of ``nl``."""
    return _luxemburg(field, nl.conjugate_primitive)


def delta2_constants(nl: PowerNonlinearity) -> tuple[float, float]:
    """Sharp growth constants (c1, c2) with c1*t*f(t) <= F(t) <= t*f(t) and
    the complementary chain governed by c2.

    For the power family t*f(t) = (q+1) F(t) exactly, so c1 = 1/(q+1) and
    c2 = q/(q+1)."""
    q = nl.q
    return 1.0 / (q + 1.0), q / (q + 1.0)


def holder_ratio(u: NodalField, v: NodalField, nl: PowerNonlinearity) -> float:
    """|int u v| / (2 ||u||_F ||v||_F~), at most 1 up to bisection slack.

    Returns 0 when either norm vanishes."""
    if u.domain_dim != v.domain_dim or u.grid_divisions != v.grid_divisions:
        raise ValueError("fields must live on the same grid")
    norm_u = luxemburg_norm(u, nl)
    norm_v = conjugate_luxemburg_norm(v, nl)
    if norm_u == 0.0 or norm_v == 0.0:
        return 0.0
    pairing = _pair_integral(u, v)
    return abs(pairing) / (2.0 * norm_u * norm_v)


def _pair_integral(u: NodalField, v: NodalField) -> float:
    from .fields import interpolant_at_gauss

    uv, wts = interpolant_at_gauss(u, _QUAD_POINTS)
    vv, _ = interpolant_at_gauss(v, _QUAD_POINTS)
    prod = uv * vv
    if u.domain_dim == 1:
        return float(wts[0] @ prod)
    return float(np.einsum("i,j,ij->", wts[0], wts[1], prod))


def conjugate_integrability_check(
    u: NodalField, nl: PowerNonlinearity
) -> tuple[float, float]:
    """Return (int F(u), int F~(f(u))).

    The second integral is controlled by (q+1) times the first, which is the
    integrability transfer making f(u) a legitimate dual-space element."""
    int_f = integrate_interpolant(u, nl.primitive, npts=_QUAD_POINTS)
    int_conj = integrate_interpolant(
        u, lambda v: nl.conjugate_primitive(nl.value(v)), npts=_QUAD_POINTS
    )
    return int_f, int_conj
