"""Validated Hermitian observables and density matrices.

All bound computations in this package start from two value types defined
here: :class:`HermitianMatrix` for observables and :class:`DensityMatrix`
for states.  Both validate on construction and hold read-only arrays, so a
value that exists is safe to compute with.  The density matrix also carries
its eigendecomposition, which the bound coefficients need.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidSpectrum,
    NonFinite,
    NotHermitian,
    NotPositive,
    TraceNotOne,
)

# Relative tolerance for accepting a raw matrix as Hermitian.
HERMITICITY_RTOL = 1e-10
# Absolute tolerance on the trace of a raw density matrix.
TRACE_ATOL = 1e-10
# Eigenvalues in [-EIG_CLAMP, 0) are treated as zero; below that is an error.
EIG_CLAMP = 1e-10
# Tolerance on eigenvector unitarity and on reconstructing the matrix from
# its stored decomposition.
FRAME_ATOL = 1e-9


def _as_square_complex(raw, name: str) -> np.ndarray:
    arr = np.asarray(raw, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionMismatch(f"{name} must be a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains non-finite entries")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr)
    out.setflags(write=False)
    return out


def _hermiticity_defect(mat: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)
    return float(np.max(np.abs(mat - mat.conj().T))) / scale


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """A square complex matrix equal to its conjugate transpose.

    The array is copied and frozen; hermiticity is enforced up to a
    relative tolerance of ``HERMITICITY_RTOL`` at construction.
    """

    mat: np.ndarray

    def __post_init__(self) -> None:
        arr = _as_square_complex(self.mat, "matrix")
        if _hermiticity_defect(arr) > HERMITICITY_RTOL:
            raise NotHermitian("matrix is not Hermitian within tolerance")
        object.__setattr__(self, "mat", _frozen(arr))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A unit-trace positive semidefinite matrix with its eigensystem.

    ``eigenvalues`` are ascending and sum to one; column ``i`` of
    ``eigenvectors`` belongs to ``eigenvalues[i]``.  Consistency between
    the matrix and its stored decomposition is checked on construction.
    """

    mat: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self) -> None:
        mat = _as_square_complex(self.mat, "density matrix")
        if _hermiticity_defect(mat) > HERMITICITY_RTOL:
            raise NotHermitian("density matrix is not Hermitian within tolerance")
        n = mat.shape[0]

        vals = np.asarray(self.eigenvalues, dtype=float)
        if vals.shape != (n,):
            raise DimensionMismatch("eigenvalues must match the matrix dimension")
        if not np.all(np.isfinite(vals)):
            raise NonFinite("eigenvalues contain non-finite entries")
        if np.any(np.diff(vals) < 0):
            raise InvalidSpectrum("eigenvalues must be ascending")
        if vals[0] < 0:
            raise NotPositive(f"negative eigenvalue {vals[0]!r}")
        total = float(vals.sum())
        if abs(total - 1.0) > TRACE_ATOL:
            raise TraceNotOne(f"eigenvalues sum to {total!r}")
        vals = vals / total

        frame = np.asarray(self.eigenvectors, dtype=complex)
        if frame.shape != (n, n):
            raise DimensionMismatch("eigenvectors must match the matrix dimension")
        if not np.all(np.isfinite(frame)):
            raise NonFinite("eigenvectors contain non-finite entries")
        if np.max(np.abs(frame.conj().T @ frame - np.eye(n))) > FRAME_ATOL:
            raise InvalidSpectrum("eigenvector matrix is not unitary within tolerance")
        if np.max(np.abs((frame * vals) @ frame.conj().T - mat)) > FRAME_ATOL:
            raise InvalidSpectrum("eigendecomposition does not reproduce the matrix")

        object.__setattr__(self, "mat", _frozen(mat))
        object.__setattr__(self, "eigenvalues", _frozen(vals))
        object.__setattr__(self, "eigenvectors", _frozen(frame))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])


def make_hermitian(raw) -> HermitianMatrix:
    """Validate ``raw`` as Hermitian and symmetrise away float noise.

    Parameters
    ----------
    raw : array_like
        Square complex matrix.  Its deviation from the conjugate
        transpose must stay within ``HERMITICITY_RTOL`` relative to the
        largest entry magnitude.

    Returns
    -------
    HermitianMatrix
        Wrapper around ``(raw + raw†) / 2``.
    """
    arr = _as_square_complex(raw, "matrix")
    if _hermiticity_defect(arr) > HERMITICITY_RTOL:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return HermitianMatrix((arr + arr.conj().T) / 2.0)


def make_density(raw) -> DensityMatrix:
    """Validate ``raw`` as a density matrix and return it with its eigensystem.

    The input must be Hermitian within ``HERMITICITY_RTOL`` and have trace
    within ``TRACE_ATOL`` of one.  Eigenvalues in ``[-EIG_CLAMP, 0)`` are
    clamped to zero, anything lower raises ``NotPositive``; the spectrum is
    then renormalised to unit sum and the matrix rebuilt from it, so the
    stored matrix and decomposition agree to rounding.
    """
    arr = _as_square_complex(raw, "density matrix")
    if _hermiticity_defect(arr) > HERMITICITY_RTOL:
        raise NotHermitian("density matrix is not Hermitian within tolerance")
    sym = (arr + arr.conj().T) / 2.0
    trace = complex(np.trace(sym))
    if abs(trace - 1.0) > TRACE_ATOL:
        raise TraceNotOne(f"trace is {trace!r}")
    vals, frame = np.linalg.eigh(sym)
    low = float(vals[0])
    if low < -EIG_CLAMP:
        raise NotPositive(f"negative eigenvalue {low!r}")
    vals = np.where(vals < 0.0, 0.0, vals)
    vals = vals / vals.sum()
    rebuilt = (frame * vals) @ frame.conj().T
    rebuilt = (rebuilt + rebuilt.conj().T) / 2.0
    return DensityMatrix(rebuilt, vals, frame)


def density_from_decomposition(eigenvalues, eigenvectors) -> DensityMatrix:
    """Build a density matrix from an ascending spectrum and a unitary frame.

    Keeps the given eigenvalues bit-exact (apart from renormalising their
    sum to one), which matters when a zero or a repeated eigenvalue is
    intended exactly.
    """
    vals = np.asarray(eigenvalues, dtype=float)
    frame = np.asarray(eigenvectors, dtype=complex)
    if vals.ndim != 1 or frame.shape != (vals.size, vals.size):
        raise DimensionMismatch("spectrum and frame shapes disagree")
    mat = (frame * vals) @ frame.conj().T
    mat = (mat + mat.conj().T) / 2.0
    return DensityMatrix(mat, vals, frame)


def expectation(state: DensityMatrix, obs: HermitianMatrix) -> float:
    """Return Tr[rho A] as a real number."""
    _check_same_dim(state, obs)
    return float(np.einsum("ij,ji->", state.mat, obs.mat).real)


def center(state: DensityMatrix, obs: HermitianMatrix) -> HermitianMatrix:
    """Shift ``obs`` by its expectation so the centred mean vanishes."""
    _check_same_dim(state, obs)
    mean = expectation(state, obs)
    shifted = obs.mat.copy()
    np.fill_diagonal(shifted, np.diagonal(shifted) - mean)
    return HermitianMatrix(shifted)


def variance(state: DensityMatrix, obs: HermitianMatrix) -> float:
    """Return Tr[rho A0^2] for the centred observable A0, clamped at zero."""
    a0 = center(state, obs).mat
    second = float(np.einsum("ij,jk,ki->", state.mat, a0, a0).real)
    return max(second, 0.0)


def eigenbasis_elements(state: DensityMatrix, obs: HermitianMatrix) -> np.ndarray:
    """Return the matrix of ``obs`` expressed in the state's eigenbasis."""
    _check_same_dim(state, obs)
    frame = state.eigenvectors
    return frame.conj().T @ obs.mat @ frame


def _check_same_dim(state: DensityMatrix, obs: HermitianMatrix) -> None:
    if state.dim != obs.dim:
        raise DimensionMismatch(f"state dim {state.dim} vs observable dim {obs.dim}")
