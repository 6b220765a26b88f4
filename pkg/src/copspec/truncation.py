"""Finite truncations of the Fourier-side operators.

The weighted half-line space is discretized by normalized indicators of
log-spaced bins.  Multiplication operators compress to exactly diagonal
matrices whose entries are weighted bin averages of the symbol; scaled
dilations compress to an exact multiple of a power of the shift when the
grid ratio matches the slope.  Truncation eigenvalues are meaningless
for the shift (it is nilpotent while the true spectrum is a circle), so
everything here is phrased in terms of singular values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import GridMismatchError
from .fourier import Sampled
from .maps import FourierOpDescriptor, Multiplication, ScaledDilation
from .quadrature import gauss_legendre, weight_integral
from .spaces import SpaceParams


@dataclass(frozen=True)
class LogGrid:
    """Geometric grid t_min * ratio**j with ``size`` bins.

    ``shift_steps`` records the integer m with ratio**m = 1/mu when the
    grid was built for a dilation experiment (negative for expanding
    slopes); multiplication grids leave it unset.
    """

    t_min: float
    ratio: float
    size: int
    shift_steps: int | None = None

    def __post_init__(self):
        if not (self.t_min > 0.0 and self.ratio > 1.0 and self.size >= 1):
            raise ValueError("grid requires t_min > 0, ratio > 1, size >= 1")
        if self.shift_steps == 0:
            raise ValueError("shift_steps must be a nonzero integer")

    @staticmethod
    def regular(t_min: float = 1e-4, ratio: float = 1.01, size: int = 2048) -> "LogGrid":
        return LogGrid(t_min, ratio, size)

    @staticmethod
    def for_slope(mu: float, t_min: float = 1e-4, size: int = 2048,
                  ratio_target: float = 1.01,
                  steps: int | None = None) -> "LogGrid":
        """Grid whose ratio is an exact integer root of 1/mu.

        By default the step count m with ratio**m = 1/mu comes from the
        target ratio; pass ``steps`` to pin it (small grids want m = 1).
        """
        if not (mu > 0.0 and mu != 1.0):
            raise ValueError("dilation grids require a positive slope != 1")
        if steps is None:
            steps = max(1, round(abs(math.log(1.0 / mu)) / math.log(ratio_target)))
            if mu > 1.0:
                steps = -steps
        if steps == 0 or (mu < 1.0) != (steps > 0):
            raise ValueError("steps must have the sign of log(1/mu)")
        ratio = (1.0 / mu) ** (1.0 / steps)
        return LogGrid(t_min, ratio, size, shift_steps=steps)

    @property
    def edges(self) -> np.ndarray:
        return self.t_min * self.ratio ** np.arange(self.size + 1)

    @property
    def t_max(self) -> float:
        return float(self.t_min * self.ratio**self.size)

    def widths(self) -> np.ndarray:
        e = self.edges
        return e[1:] - e[:-1]

    def to_sampled(self, values) -> Sampled:
        return Sampled(self.edges, np.asarray(values, dtype=complex))


@dataclass(frozen=True)
class TruncatedOperator:
    """Compression of a Fourier-side operator to the normalized-indicator
    basis of a log grid.

    Stored structurally: a diagonal vector for multiplications, a scaled
    shift (scale, steps) for dilations, or a dense matrix.  ``matrix``
    materializes the dense array on demand.
    """

    size: int
    provenance: str
    diagonal: np.ndarray | None = None
    shift_scale: float | None = None
    shift_steps: int | None = None
    dense: np.ndarray | None = None

    @staticmethod
    def from_diagonal(diag: np.ndarray, provenance: str) -> "TruncatedOperator":
        diag = np.asarray(diag, dtype=complex)
        return TruncatedOperator(len(diag), provenance, diagonal=diag)

    @staticmethod
    def from_shift(scale: float, steps: int, size: int, provenance: str) -> "TruncatedOperator":
        return TruncatedOperator(size, provenance, shift_scale=float(scale),
                                 shift_steps=int(steps))

    @staticmethod
    def from_dense(matrix: np.ndarray, provenance: str = "dense") -> "TruncatedOperator":
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("dense operator must be a square matrix")
        return TruncatedOperator(matrix.shape[0], provenance, dense=matrix)

    @property
    def kind(self) -> str:
        if self.diagonal is not None:
            return "diagonal"
        if self.shift_scale is not None:
            return "shift"
        return "dense"

    @property
    def matrix(self) -> np.ndarray:
        if self.dense is not None:
            return self.dense
        if self.diagonal is not None:
            return np.diag(self.diagonal)
        out = np.zeros((self.size, self.size), dtype=complex)
        m = self.shift_steps
        for j in range(self.size):
            if 0 <= j - m < self.size:
                out[j - m, j] = self.shift_scale
        return out

    def matvec(self, v: np.ndarray) -> np.ndarray:
        if self.diagonal is not None:
            return self.diagonal * v
        if self.dense is not None:
            return self.dense @ v
        out = np.zeros_like(v)
        m, c, n = self.shift_steps, self.shift_scale, self.size
        if abs(m) >= n:
            return out
        if m > 0:
            out[: n - m] = c * v[m:]
        else:
            out[-m:] = c * v[: n + m]
        return out

    def rmatvec(self, v: np.ndarray) -> np.ndarray:
        if self.diagonal is not None:
            return np.conj(self.diagonal) * v
        if self.dense is not None:
            return self.dense.conj().T @ v
        out = np.zeros_like(v)
        m, c, n = self.shift_steps, np.conj(self.shift_scale), self.size
        if abs(m) >= n:
            return out
        if m > 0:
            out[m:] = c * v[: n - m]
        else:
            out[: n + m] = c * v[-m:]
        return out


def _bin_symbol_averages(shift: complex, edges: np.ndarray, beta: float) -> np.ndarray:
    """Weighted bin averages of exp(i*shift*t) against t**(-beta).

    Gauss-Legendre per bin, with panel counts scaled to the number of
    oscillations so the averages are exact to machine precision.
    """
    n_bins = len(edges) - 1
    widths = edges[1:] - edges[:-1]
    denominators = np.array([weight_integral(edges[j], edges[j + 1], beta)
                             for j in range(n_bins)])
    osc = abs(shift) * widths
    panels = np.maximum(1, np.ceil(osc / 3.0).astype(int))
    x16, w16 = gauss_legendre(16)

    numerators = np.empty(n_bins, dtype=complex)
    simple = panels == 1
    if np.any(simple):
        a = edges[:-1][simple]
        half = 0.5 * widths[simple]
        nodes = a[:, None] + half[:, None] * (x16[None, :] + 1.0)
        vals = np.exp(1j * shift * nodes) * nodes**-beta
        numerators[simple] = (vals @ w16) * half
    for j in np.nonzero(~simple)[0]:
        sub = np.linspace(edges[j], edges[j + 1], panels[j] + 1)
        half = 0.5 * (sub[1:] - sub[:-1])
        nodes = (0.5 * (sub[1:] + sub[:-1])[:, None] + half[:, None] * x16[None, :])
        vals = np.exp(1j * shift * nodes) * nodes**-beta
        numerators[j] = np.sum((vals @ w16) * half)
    return numerators / denominators


def symbol_oscillation_bounds(grid: LogGrid, shift: complex) -> np.ndarray:
    """Per-bin upper bounds for the oscillation of exp(i*shift*t).

    The derivative bound |shift| * exp(-Im(shift) * t_left) * width is
    capped by the diameter bound 2 * exp(-Im(shift) * t_left).
    """
    edges = grid.edges
    damping = np.exp(-np.imag(shift) * edges[:-1])
    return np.minimum(abs(shift) * grid.widths() * damping, 2.0 * damping)


def build_truncation(desc: FourierOpDescriptor, space: SpaceParams,
                     grid: LogGrid) -> TruncatedOperator:
    """Compress a Fourier-side operator descriptor to the grid basis.

    Multiplications become exactly diagonal (indicator supports are
    disjoint); dilations become an exact scalar multiple of the m-step
    shift, where the scalar absorbs both the 1/mu prefactor and the
    norm ratio of dilated bins.
    """
    beta = space.fourier_weight_exponent()
    if isinstance(desc, Multiplication):
        diag = _bin_symbol_averages(desc.shift, grid.edges, beta)
        return TruncatedOperator.from_diagonal(
            diag, f"multiplication shift={desc.shift}")
    if isinstance(desc, ScaledDilation):
        m = grid.shift_steps
        if m is None or abs(grid.ratio**m * desc.mu - 1.0) > 1e-12:
            raise GridMismatchError(
                "grid ratio is not an integer root of 1/mu; build the grid "
                "with LogGrid.for_slope")
        if space.is_dirichlet:
            exponent = -space.alpha / 2.0
        else:
            exponent = -(space.alpha + 2.0) / 2.0
        return TruncatedOperator.from_shift(desc.mu**exponent, m, grid.size,
                                            f"dilation mu={desc.mu}")
    raise TypeError(f"unknown descriptor {type(desc).__name__}")


def operator_norm_estimate(op: TruncatedOperator, tol: float = 1e-10,
                           max_iter: int = 20000) -> float:
    """Largest singular value.

    Diagonal compressions are exact (the Gram map is diagonal, so power
    iteration degenerates to the maximum); other kinds run power
    iteration on the Gram map to the requested relative tolerance.
    """
    if op.diagonal is not None:
        return float(np.max(np.abs(op.diagonal))) if op.size else 0.0
    rng = np.random.default_rng(0)
    v = rng.standard_normal(op.size) + 1j * rng.standard_normal(op.size)
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(max_iter):
        u = op.matvec(v)
        nu = np.linalg.norm(u)
        if nu == 0.0:
            return 0.0
        w = op.rmatvec(u)
        gram_norm = np.linalg.norm(w)
        new_sigma = math.sqrt(gram_norm)
        if abs(new_sigma - sigma) <= tol * max(new_sigma, 1e-300):
            return new_sigma
        sigma = new_sigma
        v = w / gram_norm
    return sigma


def _solve_shift(scale: float, steps: int, size: int, lam: complex,
                 y: np.ndarray, adjoint: bool) -> np.ndarray:
    """Solve (c*S^m - lam) z = y (or its conjugate transpose) by
    substitution; the matrix is triangular for either sign of m."""
    z = np.zeros_like(y)
    m, c = steps, scale
    if adjoint:
        lam_c = np.conj(lam)
        order = range(size) if m > 0 else range(size - 1, -1, -1)
        for j in order:
            acc = y[j]
            if 0 <= j - m < size:
                acc = acc - np.conj(c) * z[j - m]
            z[j] = -acc / lam_c
        return z
    order = range(size - 1, -1, -1) if m > 0 else range(size)
    for k in order:
        acc = y[k]
        if 0 <= k + m < size:
            acc = acc - c * z[k + m]
        z[k] = -acc / lam
    return z


def _smallest_singular(op: TruncatedOperator, lam: complex, tol: float,
                       max_iter: int) -> float:
    """Smallest singular value of op - lam*I by inverse power iteration
    on the Gram map; exact for diagonal compressions."""
    if op.diagonal is not None:
        return float(np.min(np.abs(op.diagonal - lam)))
    if op.shift_scale is not None:
        if lam == 0.0:
            return 0.0  # the truncated shift is rank deficient

        def solve(y, adjoint):
            return _solve_shift(op.shift_scale, op.shift_steps, op.size, lam,
                                y, adjoint)
    else:
        matrix = op.dense - lam * np.eye(op.size)
        try:
            lu = scipy.linalg.lu_factor(matrix)
        except scipy.linalg.LinAlgError:
            return 0.0

        def solve(y, adjoint):
            return scipy.linalg.lu_solve(lu, y, trans=2 if adjoint else 0)

    rng = np.random.default_rng(0)
    v = rng.standard_normal(op.size) + 1j * rng.standard_normal(op.size)
    v /= np.linalg.norm(v)
    sigma = math.inf
    for _ in range(max_iter):
        t = solve(v, True)
        w = solve(t, False)
        growth = np.linalg.norm(w)
        if not np.isfinite(growth):
            return 0.0
        if growth == 0.0:
            return 0.0
        new_sigma = 1.0 / math.sqrt(growth)
        if abs(new_sigma - sigma) <= tol * max(new_sigma, 1e-300):
            return new_sigma
        sigma = new_sigma
        v = w / growth
    return sigma


def min_singular_grid(op: TruncatedOperator, points, tol: float = 1e-10,
                      max_iter: int = 2000) -> list[float]:
    """Smallest singular value of op - lam*I for each lam in ``points``."""
    return [_smallest_singular(op, complex(lam), tol, max_iter)
            for lam in points]
