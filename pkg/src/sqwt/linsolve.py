"""Assembly and pivoted solution of the n-by-n signed coefficient system.

The system matrix has entry (i, j) equal to the sign of train j at
subinterval i, so every entry is +-1. Factorization works on a dense
Fortran-ordered copy (LAPACK, partial pivoting, factored in place);
residuals for iterative refinement and diagnostics are computed
matrix-free from the half-wave run structure instead.
"""

from __future__ import annotations

import os
import time
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .errors import CapExceeded, DimensionMismatch, SingularSystem
from .waves import SignPattern

MAX_N_DENSE_ENV = "SQWT_MAX_N_DENSE"
DEFAULT_MAX_N_DENSE = 12_000


def default_max_n_dense() -> int:
    """Dense-size cap; the SQWT_MAX_N_DENSE environment variable overrides it."""
    raw = os.environ.get(MAX_N_DENSE_ENV)
    if raw is None:
        return DEFAULT_MAX_N_DENSE
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_DENSE_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_N_DENSE_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class SolverOptions:
    """Solver knobs.

    pivot_tolerance of None means 1e-12 * n * (largest entry magnitude),
    max_n_dense of None means default_max_n_dense().
    """

    pivot_tolerance: float | None = None
    refinement_steps: int = 2
    max_n_dense: int | None = None

    def __post_init__(self):
        if self.pivot_tolerance is not None and not self.pivot_tolerance > 0:
            raise ValueError(f"pivot_tolerance must be > 0, got {self.pivot_tolerance!r}")
        if self.refinement_steps < 0:
            raise ValueError(f"refinement_steps must be >= 0, got {self.refinement_steps!r}")
        if self.max_n_dense is not None and self.max_n_dense < 1:
            raise ValueError(f"max_n_dense must be >= 1, got {self.max_n_dense!r}")


@dataclass(frozen=True)
class SolveReport:
    """Diagnostics from one solve."""

    min_pivot: float
    residual_inf_norm: float
    refinement_steps_used: int
    elapsed_seconds: float


def assemble_dense(pattern: SignPattern, max_n_dense: int | None = None) -> np.ndarray:
    """Materialize the sign matrix as float64 entries of +-1.0.

    The array is Fortran-ordered so LAPACK can factor it in place without
    another copy. Sizes above the cap are refused: the matrix holds n*n
    doubles (800 MB at n = 10,000).
    """
    cap = default_max_n_dense() if max_n_dense is None else max_n_dense
    n = pattern.n
    if n > cap:
        raise CapExceeded(n, cap)
    a = np.empty((n, n), dtype=np.float64, order="F")
    rows = np.arange(n, dtype=np.int64)
    for j in range(n):
        l = n - j  # half-wave span of train j+1
        a[:, j] = 1.0 - 2.0 * ((rows // l) & 1)
    return a


def apply_sign_matrix(pattern: SignPattern, x: np.ndarray) -> np.ndarray:
    """Matrix-free product of the sign matrix with x.

    Walks each train's half-wave runs and adds or subtracts x_j over the
    run's rows: signed additions only, no multiplies, no matrix. Every row
    accumulates in ascending-j order with exact TwoSum compensation, so the
    result is bit-reproducible, independent of thread count, and free of
    the O(n) rounding drift a plain running sum would pick up (coefficient
    magnitudes can dwarf the series values by orders of magnitude).
    """
    n = pattern.n
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {x.shape}")
    y = np.zeros(n, dtype=np.float64)
    comp = np.zeros(n, dtype=np.float64)
    for j0 in range(n):
        l = n - j0
        xj = x[j0]
        positive = True
        for start in range(0, n, l):
            stop = start + l
            if stop > n:
                stop = n
            seg = y[start:stop]
            u = xj if positive else -xj
            total = seg + u
            # TwoSum: recover the rounding error of seg + u exactly
            virtual = total - seg
            comp[start:stop] += (seg - (total - virtual)) + (u - virtual)
            y[start:stop] = total
            positive = not positive
    return y + comp


@dataclass(frozen=True)
class Factorization:
    """Pivoted LU factors of an assembled sign matrix plus pivot diagnostics."""

    lu: np.ndarray
    piv: np.ndarray
    min_pivot: float

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """Back-substitute one right-hand side through the factors."""
        rhs = np.asarray(rhs, dtype=np.float64)
        if rhs.shape != (self.n,):
            raise DimensionMismatch(
                f"expected a vector of length {self.n}, got shape {rhs.shape}"
            )
        return lu_solve((self.lu, self.piv), rhs, check_finite=False)


def factorize(matrix: np.ndarray, pivot_tolerance: float | None = None) -> Factorization:
    """LU-factorize a square matrix in place with partial row pivoting.

    The smallest pivot magnitude |U_kk| is recorded; if it falls below
    pivot_tolerance (default 1e-12 * n * max|entry|), SingularSystem is
    raised carrying the first offending 1-based pivot position.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {matrix.shape}")
    n = matrix.shape[0]
    if pivot_tolerance is None:
        pivot_tolerance = 1e-12 * n * float(np.max(np.abs(matrix)))
    with warnings.catch_warnings():
        # LAPACK flags exact-zero pivots with a warning; the tolerance
        # check below is the single authority on singularity.
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(matrix, overwrite_a=True, check_finite=False)
    pivots = np.abs(np.diag(lu))
    min_pivot = float(pivots.min())
    if min_pivot < pivot_tolerance:
        k = int(np.argmax(pivots < pivot_tolerance))
        raise SingularSystem(k + 1, float(pivots[k]), pivot_tolerance)
    return Factorization(lu, piv, min_pivot)


def _refine(
    fact: Factorization,
    pattern: SignPattern,
    rhs: np.ndarray,
    x: np.ndarray,
    steps: int,
) -> tuple[np.ndarray, float, int]:
    """Iterative refinement against the matrix-free residual.

    Runs at most `steps` corrections, stopping early only on an exactly
    zero residual. Returns (solution, final residual inf-norm, steps used).
    """
    residual = rhs - apply_sign_matrix(pattern, x)
    norm = float(np.max(np.abs(residual)))
    used = 0
    for _ in range(steps):
        if norm == 0.0:
            break
        x = x + fact.solve(residual)
        used += 1
        residual = rhs - apply_sign_matrix(pattern, x)
        norm = float(np.max(np.abs(residual)))
    return x, norm, used


def solve(
    pattern: SignPattern,
    rhs: np.ndarray,
    options: SolverOptions | None = None,
) -> tuple[np.ndarray, SolveReport]:
    """Solve sign_matrix @ c = rhs.

    Assembles the dense matrix, factorizes with partial pivoting, then runs
    the configured refinement steps, each feeding the matrix-free residual
    back through the factors. The reported residual_inf_norm is recomputed
    matrix-free after the last step. Deterministic for fixed inputs and
    options, whatever thread count the BLAS uses.
    """
    if options is None:
        options = SolverOptions()
    n = pattern.n
    rhs = np.asarray(rhs, dtype=np.float64)
    if rhs.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {rhs.shape}")
    if not np.all(np.isfinite(rhs)):
        raise ValueError("right-hand side contains non-finite values")
    t0 = time.perf_counter()
    a = assemble_dense(pattern, options.max_n_dense)
    fact = factorize(a, options.pivot_tolerance)
    x = fact.solve(rhs)
    x, residual_norm, used = _refine(fact, pattern, rhs, x, options.refinement_steps)
    report = SolveReport(
        min_pivot=fact.min_pivot,
        residual_inf_norm=residual_norm,
        refinement_steps_used=used,
        elapsed_seconds=time.perf_counter() - t0,
    )
    return x, report
