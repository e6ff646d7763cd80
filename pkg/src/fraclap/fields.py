"""Nodal fields on tensor grids of the unit interval/square, plus the shared
per-cell tensor Gauss quadrature kernel used by the Orlicz norms, load
assembly and error measurement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "NodalField",
    "gauss_cells",
    "interp_matrix",
    "weighted_hat_matrix",
    "integrate_interpolant",
]

# Gauss-Legendre nodes/weights on the reference cell [0, 1]
_GAUSS = {
    1: (np.array([0.5]), np.array([1.0])),
    2: (
        np.array([0.5 - 0.5 / np.sqrt(3.0), 0.5 + 0.5 / np.sqrt(3.0)]),
        np.array([0.5, 0.5]),
    ),
    3: (
        np.array([0.5 - 0.5 * np.sqrt(0.6), 0.5, 0.5 + 0.5 * np.sqrt(0.6)]),
        np.array([5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0]),
    ),
}


@dataclass(frozen=True)
class NodalField:
    """Values on the (M+1)^N tensor grid of (0,1)^N, boundary included.

    ``values`` is stored flat in row-major order; for N = 2 entry
    ``values[i*(M+1)+j]`` sits at the node (i/M, j/M).
    """

    domain_dim: int
    grid_divisions: int
    values: np.ndarray

    def __post_init__(self):
        if self.domain_dim not in (1, 2):
            raise ValueError(f"domain_dim must be 1 or 2, got {self.domain_dim}")
        n = (self.grid_divisions + 1) ** self.domain_dim
        vals = np.asarray(self.values, dtype=float).ravel()
        if vals.size != n:
            raise ValueError(
                f"expected {n} nodal values for dim={self.domain_dim}, "
                f"M={self.grid_divisions}, got {vals.size}"
            )
        object.__setattr__(self, "values", vals)

    @property
    def shape(self):
        return (self.grid_divisions + 1,) * self.domain_dim

    def grid_values(self) -> np.ndarray:
        """Values reshaped onto the tensor grid."""
        return self.values.reshape(self.shape)

    def nodes_1d(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.grid_divisions + 1)

    def boundary_max(self) -> float:
        g = self.grid_values()
        if self.domain_dim == 1:
            return max(abs(g[0]), abs(g[-1]))
        return max(
            np.abs(g[0, :]).max(),
            np.abs(g[-1, :]).max(),
            np.abs(g[:, 0]).max(),
            np.abs(g[:, -1]).max(),
        )

    @classmethod
    def from_callable(cls, dim: int, divisions: int, func) -> "NodalField":
        x = np.linspace(0.0, 1.0, divisions + 1)
        if dim == 1:
            vals = np.asarray(func(x), dtype=float)
        else:
            X1, X2 = np.meshgrid(x, x, indexing="ij")
            vals = np.asarray(func(X1, X2), dtype=float)
        return cls(dim, divisions, vals.ravel())

    @classmethod
    def zeros(cls, dim: int, divisions: int) -> "NodalField":
        return cls(dim, divisions, np.zeros((divisions + 1) ** dim))


def gauss_cells(divisions: int, npts: int):
    """Composite Gauss points/weights on [0,1] split into ``divisions`` cells.

    Returns flat arrays of length divisions*npts; weights include the cell
    width factor, so ``w @ f(x)`` approximates the integral over [0,1].
    """
    ref_x, ref_w = _GAUSS[npts]
    h = 1.0 / divisions
    pts = ((np.arange(divisions)[:, None] + ref_x[None, :]) * h).ravel()
    wts = np.tile(ref_w * h, divisions)
    return pts, wts


def interp_matrix(divisions: int, pts: np.ndarray) -> np.ndarray:
    """Dense matrix evaluating the piecewise-linear interpolant at ``pts``.

    Shape (len(pts), divisions+1); two nonzeros per row.
    """
    h = 1.0 / divisions
    idx = np.minimum((pts / h).astype(int), divisions - 1)
    loc = pts / h - idx
    P = np.zeros((pts.size, divisions + 1))
    rows = np.arange(pts.size)
    P[rows, idx] = 1.0 - loc
    P[rows, idx + 1] = loc
    return P


def weighted_hat_matrix(divisions: int, npts: int):
    """Hat functions sampled at composite Gauss points, premultiplied by the
    quadrature weights.  Row i approximates the functional v -> int v*hat_i.

    Returns (H, pts) with H of shape (divisions+1, divisions*npts).
    """
    pts, wts = gauss_cells(divisions, npts)
    P = interp_matrix(divisions, pts)
    return (P * wts[:, None]).T, pts


def interpolant_at_gauss(field: NodalField, npts: int):
    """Interpolant values on the tensor Gauss grid plus per-direction weights."""
    pts, wts = gauss_cells(field.grid_divisions, npts)
    P = interp_matrix(field.grid_divisions, pts)
    g = field.grid_values()
    if field.domain_dim == 1:
        return P @ g, (wts,)
    return P @ g @ P.T, (wts, wts)


def integrate_interpolant(field: NodalField, func=None, npts: int = 2) -> float:
    """Integrate func(interpolant) over the domain by per-cell tensor Gauss.

    ``func`` is applied pointwise to the interpolant values at the quadrature
    nodes (identity when omitted).
    """
    vals, wts = interpolant_at_gauss(field, npts)
    if func is not None:
        vals = func(vals)
    if field.domain_dim == 1:
        return float(wts[0] @ vals)
    return float(np.einsum("i,j,ij->", wts[0], wts[1], vals))
