"""Variance-product lower bounds weighted by the state's spectrum.

For observables A, B in state rho, the classical bound is Robertson's
quarter-squared commutator trace.  Its q-deformed generalisation carries
the prefactor 1/(1+|q|)^2, and the refinement implemented here sharpens
that prefactor using the extreme eigenvalues of rho:

    |q| <= 1:  (l_max + |q| l_min)^2 / [(1+|q|)^2 (l_max - |q| l_min)^2]
    |q| >  1:  (|q| l_max + l_min)^2 / [(1+|q|)^2 (|q| l_max - l_min)^2]

multiplying the squared trace of the deformed bracket of the centred
observables (with the operands swapped for |q| > 1).  Negative q reduces
to the same two forms through the anti-commutator identity
{A,B}_q = [A,B]_{-q}.  ``bound_report`` evaluates every bound on one
instance and is the record type the verification harness streams out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import QParameter, QRegime, q_trace_term
from .errors import (
    DegenerateCoefficient,
    DimensionMismatch,
    DomainError,
    InvalidSpectrum,
)
from .hermitian import (
    DensityMatrix,
    HermitianMatrix,
    center,
    eigenbasis_elements,
    variance,
)

# Coefficient denominators below this magnitude are flagged infinite.
DEGENERATE_DENOMINATOR = 1e-14
# An infinite coefficient is legal only while the trace term is below this.
DEGENERATE_TERM = 1e-12
# Variance products below this floor report no tightness ratio.
RATIO_FLOOR = 1e-14


def robertson_bound(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix
) -> float:
    """Return the classical lower bound, one quarter of |Tr[rho [A,B]]|^2.

    Centring drops out of a commutator trace, so the raw observables are
    used directly.
    """
    term = _plain_commutator_trace(state, a, b)
    return 0.25 * abs(term) ** 2


def naive_q_bound(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix, q: float
) -> float:
    """Return the unrefined deformed bound |Tr[rho [A0,B0]_|q|]|^2 / (1+|q|)^2."""
    aq = abs(QParameter(q).q)
    a0 = center(state, a)
    b0 = center(state, b)
    term = q_trace_term(state, a0, b0, aq)
    return abs(term) ** 2 / (1.0 + aq) ** 2


def refined_coefficient(q: float, lambda_min: float, lambda_max: float) -> float:
    """Return the spectrum-weighted prefactor of the refined bound.

    Parameters
    ----------
    q : float
        Deformation parameter; only |q| enters.
    lambda_min, lambda_max : float
        Extreme eigenvalues of the state, ``0 <= lambda_min <= lambda_max``
        with ``lambda_max > 0``.

    Returns
    -------
    float
        The branch value for |q| <= 1 or |q| > 1 as in the module
        docstring.  At ``lambda_min == 0`` both branches collapse
        algebraically to ``1/(1+|q|)^2``, which is returned exactly.
        ``math.inf`` flags a denominator magnitude below
        ``DEGENERATE_DENOMINATOR``.
    """
    aq = abs(QParameter(q).q)
    if not (0.0 <= lambda_min <= lambda_max) or lambda_max <= 0.0:
        raise InvalidSpectrum(
            f"need 0 <= lambda_min <= lambda_max with lambda_max > 0, "
            f"got ({lambda_min!r}, {lambda_max!r})"
        )
    if lambda_min == 0.0:
        # The extreme-eigenvalue weights cancel; no rounding allowed here.
        return 1.0 / (1.0 + aq) ** 2
    if aq <= 1.0:
        numerator = (lambda_max + aq * lambda_min) ** 2
        denominator = (1.0 + aq) ** 2 * (lambda_max - aq * lambda_min) ** 2
    else:
        numerator = (aq * lambda_max + lambda_min) ** 2
        denominator = (1.0 + aq) ** 2 * (aq * lambda_max - lambda_min) ** 2
    if denominator < DEGENERATE_DENOMINATOR:
        return math.inf
    return numerator / denominator


def refined_q_bound(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix, q: float
) -> float:
    """Return the eigenvalue-weighted lower bound on V(A) V(B).

    Dispatches on the regime of q:

    * ``0 < q <= 1`` — coefficient times |Tr[rho [A0,B0]_q]|^2;
    * ``q > 1`` — the |q| > 1 coefficient times |Tr[rho [B0,A0]_q]|^2;
    * ``q = 0`` — |Tr[rho A0 B0]|^2;
    * ``-1 <= q < 0`` — coefficient(|q|) times |Tr[rho {A0,B0}_q]|^2;
    * ``q < -1`` — the |q| > 1 coefficient times |Tr[rho {B0,A0}_q]|^2.

    A flagged-infinite coefficient is only reachable when the matching
    trace term vanishes, in which case the bound is defined as zero; a
    non-vanishing term there raises ``DegenerateCoefficient``.
    """
    param = QParameter(q)
    aq = abs(param.q)
    a0 = center(state, a)
    b0 = center(state, b)
    # Negative q turns the bracket into the anti-commutator; numerically
    # {X,Y}_q = [X,Y]_{-q} holds bit for bit, so each arm reduces to the
    # |q|-weighted bracket of the appropriately ordered operands.
    if param.regime is QRegime.POSITIVE_LEQ_ONE:
        term = q_trace_term(state, a0, b0, aq)
    elif param.regime is QRegime.POSITIVE_GT_ONE:
        term = q_trace_term(state, b0, a0, aq)
    elif param.regime is QRegime.ZERO:
        term = q_trace_term(state, a0, b0, 0.0)
    elif param.regime is QRegime.NEGATIVE_GEQ_MINUS_ONE:
        term = q_trace_term(state, a0, b0, aq)
    else:
        term = q_trace_term(state, b0, a0, aq)
    coefficient = refined_coefficient(aq, state.lambda_min, state.lambda_max)
    magnitude = abs(term)
    if math.isinf(coefficient):
        if magnitude < DEGENERATE_TERM:
            return 0.0
        raise DegenerateCoefficient(
            f"infinite coefficient with trace term {magnitude!r} at q={param.q!r}"
        )
    return coefficient * magnitude**2


def refined_commutator_bound(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix
) -> float:
    """Return the q = 1 refinement from the uncentred commutator trace.

    Identical to ``refined_q_bound(state, a, b, 1.0)`` up to rounding,
    since centring shifts cancel inside a commutator trace.
    """
    coefficient = refined_coefficient(1.0, state.lambda_min, state.lambda_max)
    magnitude = abs(_plain_commutator_trace(state, a, b))
    if math.isinf(coefficient):
        if magnitude < DEGENERATE_TERM:
            return 0.0
        raise DegenerateCoefficient(
            f"infinite coefficient with trace term {magnitude!r} at q=1.0"
        )
    return coefficient * magnitude**2


def weight_ratio_sq(t, q):
    """Return ((t - |q|) / (t + |q|))^2 elementwise for t >= 1.

    Non-decreasing in t on the domain, which is what makes the extreme
    eigenvalue ratio the worst case in the refined coefficient.
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 1.0):
        raise DomainError("t must be >= 1")
    aq = abs(float(q))
    out = ((arr - aq) / (arr + aq)) ** 2
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def weight_ratio_excess(t, q):
    """Return (1+|q|t)^2 (t-|q|)^2 - (1-|q|t)^2 (t+|q|)^2 elementwise.

    Nonnegative for t >= 1 when |q| <= 1, and exactly zero at t = 1,
    at q = 0, and at |q| = 1.
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 1.0):
        raise DomainError("t must be >= 1")
    aq = abs(float(q))
    out = (1.0 + aq * arr) ** 2 * (arr - aq) ** 2 - (1.0 - aq * arr) ** 2 * (
        arr + aq
    ) ** 2
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def schwarz_split(
    state: DensityMatrix, a0: HermitianMatrix, b0: HermitianMatrix, q: float
) -> tuple[float, float]:
    """Return the two sides of the Cauchy-Schwarz step behind the bound.

    For centred observables and |q| <= 1,

        lhs = |Tr[rho [A0,B0]_|q|]|^2
        rhs = (sum_ij |l_i - |q| l_j| |a_ij|^2) (sum_ij |l_i - |q| l_j| |b_ji|^2)

    with the matrix elements taken in the state's eigenbasis; lhs <= rhs
    up to float noise.
    """
    param = QParameter(q)
    aq = abs(param.q)
    if aq > 1.0:
        raise DomainError(f"|q| must be <= 1, got {param.q!r}")
    term = q_trace_term(state, a0, b0, aq)
    lhs = abs(term) ** 2
    lam = state.eigenvalues
    weights = np.abs(lam[:, None] - aq * lam[None, :])
    a_elems = eigenbasis_elements(state, a0)
    b_elems = eigenbasis_elements(state, b0)
    sum_a = float(np.sum(weights * np.abs(a_elems) ** 2))
    sum_b = float(np.sum(weights * np.abs(b_elems.T) ** 2))
    return lhs, sum_a * sum_b


@dataclass(frozen=True)
class BoundReport:
    """Every bound evaluated on one (state, A, B, q) instance.

    ``refined_commutator`` is populated only at q = 1; ``ratio`` is None
    when the variance product sits below ``RATIO_FLOOR``.
    """

    dim: int
    q: float
    regime: QRegime
    var_a: float
    var_b: float
    product: float
    lambda_min: float
    lambda_max: float
    robertson: float
    naive_q: float
    refined: float
    refined_commutator: float | None
    slack: float
    ratio: float | None


def bound_report(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix, q: float
) -> BoundReport:
    """Evaluate all bounds on one instance and package them consistently."""
    param = QParameter(q)
    var_a = variance(state, a)
    var_b = variance(state, b)
    product = var_a * var_b
    refined = refined_q_bound(state, a, b, param.q)
    return BoundReport(
        dim=state.dim,
        q=param.q,
        regime=param.regime,
        var_a=var_a,
        var_b=var_b,
        product=product,
        lambda_min=state.lambda_min,
        lambda_max=state.lambda_max,
        robertson=robertson_bound(state, a, b),
        naive_q=naive_q_bound(state, a, b, param.q),
        refined=refined,
        refined_commutator=(
            refined_commutator_bound(state, a, b) if param.q == 1.0 else None
        ),
        slack=product - refined,
        ratio=None if product < RATIO_FLOOR else refined / product,
    )


def _plain_commutator_trace(
    state: DensityMatrix, a: HermitianMatrix, b: HermitianMatrix
) -> complex:
    if a.dim != b.dim or a.dim != state.dim:
        raise DimensionMismatch(
            f"dims disagree: state {state.dim}, a {a.dim}, b {b.dim}"
        )
    forward = np.einsum("ij,jk,ki->", state.mat, a.mat, b.mat)
    backward = np.einsum("ij,jk,ki->", state.mat, b.mat, a.mat)
    return complex(forward - backward)
