"""Series reconstruction of a characteristic function and its density
from one grid of complex-order moments.

The CF series on the line Re(gamma) = rho is the rectangle-rule
discretization

    cf(theta) ~ (delta / 2 pi) * sum_k Gamma(gamma_k) M_k |theta|^(-gamma_k)

valid directly for theta > 0 on a minus-sign grid (theta < 0 on a plus
grid); the opposite half-axis follows from Hermitian symmetry.  The
density series reuses the *same* minus-sign grid:

    pdf(x) ~ (delta / 2 pi^2) *
             Re sum_k Gamma(gamma_k) Gamma(1-gamma_k) M_k (i x)^(gamma_k - 1)

with the signed-power branch of :func:`fracmom.special.signed_complex_power`.
Both series are singular at the origin — the origin is rejected, not
patched.

Two classical baselines complete the module: the integer-moment Taylor
expansion of the CF (which visibly diverges for heavy tails — the
motivating failure mode) and the residue partial sum for the standard
Gaussian, which reproduces that Taylor series term by term from the
pole structure of the moment integrand.

Truncation behavior worth knowing when choosing m: the grid resolves
oscillation frequencies of |theta|^(-i eta) only up to eta_max = m*delta,
so reconstruction error grows once ln|theta| (CF) or |ln x| (PDF)
exceeds roughly eta_max / 2; and the rectangle rule itself contributes
an aliasing floor of order exp(-2 pi rho / delta).  Both effects are
properties of the discretized line integral, not of the moment values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distributions import DistributionSpec, exact_cf, exact_pdf
from .errors import ArgumentError, DomainError, UnsupportedError
from .moments import GridParams, MomentGrid
from .special import complex_gamma, reflection_product

# ----------------------------------------------------------------------
# series weights and kernels
# ----------------------------------------------------------------------


def _cf_weights(grid: MomentGrid) -> np.ndarray:
    nodes = grid.params.nodes()
    gam = np.array([complex_gamma(g) for g in nodes])
    return gam * grid.values


def _pdf_weights(grid: MomentGrid) -> np.ndarray:
    nodes = grid.params.nodes()
    prod = np.array([reflection_product(g) for g in nodes])
    return prod * grid.values


def _cf_sum(grid: MomentGrid, weights: np.ndarray, theta: np.ndarray) -> np.ndarray:
    # direct branch: |theta|^(-gamma_k), valid on the grid's own half-axis
    nodes = grid.params.nodes()
    log_t = np.log(np.abs(theta))
    kernel = np.exp(-np.outer(log_t, nodes))
    return (grid.params.delta / (2.0 * math.pi)) * kernel @ weights


def _pdf_sum_complex(
    grid: MomentGrid, weights: np.ndarray, x: np.ndarray
) -> np.ndarray:
    # (i x)^(gamma_k - 1) on the plus branch of the signed power
    nodes = grid.params.nodes() - 1.0
    log_x = np.log(np.abs(x))
    phase = (1j * math.pi / 2.0) * np.sign(x)
    kernel = np.exp(np.outer(log_x, nodes) + np.outer(phase, nodes))
    return (grid.params.delta / (2.0 * math.pi**2)) * kernel @ weights


# ----------------------------------------------------------------------
# scalar series evaluation
# ----------------------------------------------------------------------


def cf_series(grid: MomentGrid, theta: float) -> complex:
    """Reconstructed CF at one point.

    A minus-sign grid covers theta > 0 directly; a plus-sign grid covers
    theta < 0.  The other half-axis is filled in by the Hermitian
    extension cf(-theta) = conj(cf(theta)).  theta = 0 raises
    :class:`DomainError` (the series has no finite value there; the CLI
    layer may insert the exact CF(0) = 1 separately).
    """
    theta = float(theta)
    if theta == 0.0:
        raise DomainError("CF series is singular at theta = 0")
    weights = _cf_weights(grid)
    direct_positive = grid.params.sign == "minus"
    if (theta > 0.0) == direct_positive:
        return complex(_cf_sum(grid, weights, np.array([theta]))[0])
    return complex(np.conj(_cf_sum(grid, weights, np.array([-theta]))[0]))


def pdf_series(grid: MomentGrid, x: float) -> float:
    """Reconstructed density at one point (real part of the dual series).

    Only grids tabulating E[(-iX)^(-gamma)] are accepted — the density
    series is written for that convention, and evaluating it on a plus
    grid would silently produce the density of -X.
    """
    return float(_pdf_series_points(grid, np.array([float(x)]))[0].real)


def _pdf_series_points(grid: MomentGrid, x: np.ndarray) -> np.ndarray:
    if grid.params.sign != "minus":
        raise ArgumentError(
            "density series needs a grid built with sign='minus'"
        )
    if np.any(x == 0.0):
        raise DomainError("density series is singular at x = 0")
    weights = _pdf_weights(grid)
    return _pdf_sum_complex(grid, weights, x)


# ----------------------------------------------------------------------
# classical baselines
# ----------------------------------------------------------------------


def _integer_moment(spec: DistributionSpec, j: int) -> float:
    p = spec.params
    if spec.family == "uniform":
        return 0.0 if j % 2 else p["a"] ** j / (j + 1)
    if spec.family == "gaussian":
        mu, sig = p["mu"], p["sigma"]
        if j == 0:
            return 1.0
        m_prev, m_cur = 1.0, mu  # E[X^0], E[X^1]
        for n in range(2, j + 1):
            m_prev, m_cur = m_cur, mu * m_cur + (n - 1) * sig * sig * m_prev
        return m_cur
    # rayleigh
    sig = p["sigma"]
    return sig**j * 2.0 ** (j / 2.0) * math.gamma(1.0 + j / 2.0)


def classical_taylor_cf(
    spec: DistributionSpec, theta: float, order: int
) -> complex:
    """Truncated Taylor expansion of the CF through ``(i theta)^order``.

    Supported for the families with finite integer moments of every
    order (uniform, Gaussian, Rayleigh); Cauchy and Levy raise
    :class:`UnsupportedError`.  At moderate ``theta`` the truncation
    error explodes — that divergence is the behavior this baseline
    exists to demonstrate.
    """
    if order < 0:
        raise ArgumentError("order must be >= 0")
    if spec.family in ("cauchy", "levy"):
        raise UnsupportedError(
            f"{spec.family} has no finite integer moments; its Taylor CF "
            "expansion is a sum of divergent terms"
        )
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (i theta)^j / j!
    for j in range(order + 1):
        if j > 0:
            term *= 1j * theta / j
        total += term * _integer_moment(spec, j)
    return total


def residue_partial_sum(
    spec: DistributionSpec, theta: float, terms: int
) -> complex:
    """Partial sum of the residue expansion of the standard Gaussian CF.

    The poles of the moment-line integrand at gamma = 0, -2, -4, ...
    contribute exactly the even Taylor terms (i theta)^(2k) (2k-1)!! / (2k)!,
    so ``terms`` residues reproduce :func:`classical_taylor_cf` at order
    2(terms-1) — the test suite asserts the two code paths agree to
    1e-14.
    """
    if spec.family != "gaussian" or spec.params != {"mu": 0.0, "sigma": 1.0}:
        raise ArgumentError(
            "residue expansion is established for the standard Gaussian only"
        )
    if terms < 1:
        raise ArgumentError("terms must be >= 1")
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (i theta)^(2k) (2k-1)!! / (2k)!
    for k in range(terms):
        if k > 0:
            # ratio between consecutive summands: (i theta)^2 / (2k)
            term *= (1j * theta) * (1j * theta) / (2.0 * k)
        total += term
    return total


# ----------------------------------------------------------------------
# curve sampling
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CurveResult:
    """A reconstructed curve, optionally with a pointwise exact reference.

    ``im_max`` is a diagnostic on density curves: the largest |imaginary
    part| of the series *before* the real-part projection.  It is of the
    same order as the density itself (the un-projected sum carries the
    conjugate Hilbert-transform component), so it is reported rather
    than asserted small.
    """

    abscissae: np.ndarray
    values: np.ndarray
    exact: np.ndarray | None
    abs_err: np.ndarray | None
    params: GridParams
    kind: str
    im_max: float | None = None


def sample_curve(
    grid: MomentGrid,
    kind: str,
    abscissae: Sequence[float],
    exact_spec: DistributionSpec | None = None,
) -> CurveResult:
    """Evaluate the CF or PDF series on an array of points.

    Points must exclude the origin.  When ``exact_spec`` is given, the
    matching exact curve and pointwise absolute errors are attached.
    An empty abscissae array produces an empty result.
    """
    if kind not in ("cf", "pdf"):
        raise ArgumentError(f"kind must be 'cf' or 'pdf', got {kind!r}")
    x = np.asarray(abscissae, dtype=float)
    if x.size == 0:
        empty_c = np.empty(0, dtype=complex)
        return CurveResult(
            abscissae=x,
            values=empty_c,
            exact=empty_c if exact_spec is not None else None,
            abs_err=np.empty(0) if exact_spec is not None else None,
            params=grid.params,
            kind=kind,
            im_max=0.0 if kind == "pdf" else None,
        )
    if np.any(x == 0.0):
        raise DomainError(f"{kind} series is singular at the origin")

    im_max: float | None = None
    if kind == "cf":
        weights = _cf_weights(grid)
        direct_positive = grid.params.sign == "minus"
        direct = (x > 0.0) if direct_positive else (x < 0.0)
        values = np.empty(x.size, dtype=complex)
        if np.any(direct):
            values[direct] = _cf_sum(grid, weights, x[direct])
        if np.any(~direct):
            values[~direct] = np.conj(_cf_sum(grid, weights, -x[~direct]))
        exact = exact_cf(exact_spec, x) if exact_spec is not None else None
    else:
        raw = _pdf_series_points(grid, x)
        im_max = float(np.max(np.abs(raw.imag)))
        values = raw.real.astype(complex)
        exact = (
            exact_pdf(exact_spec, x).astype(complex)
            if exact_spec is not None
            else None
        )

    abs_err = np.abs(values - exact) if exact is not None else None
    return CurveResult(
        abscissae=x,
        values=values,
        exact=exact,
        abs_err=abs_err,
        params=grid.params,
        kind=kind,
        im_max=im_max,
    )


def write_curve_csv(result: CurveResult, out, *, family: str | None = None) -> None:
    """Write `x,re,im,exact_re,exact_im,abs_err` rows with `#` metadata.

    Exact columns are left empty when the curve carries no reference.
    Floats use ``repr`` for bit-exact round-tripping.
    """
    p = result.params
    out.write(f"# kind: {result.kind}\n")
    if family is not None:
        out.write(f"# family: {family}\n")
    out.write(f"# rho: {p.rho!r}\n")
    out.write(f"# delta: {p.delta!r}\n")
    out.write(f"# m: {p.m}\n")
    out.write(f"# sign: {p.sign}\n")
    out.write("x,re,im,exact_re,exact_im,abs_err\n")
    for i, xv in enumerate(result.abscissae):
        v = complex(result.values[i])
        if result.exact is not None:
            e = complex(result.exact[i])
            err = float(result.abs_err[i])
            tail = f"{e.real!r},{e.imag!r},{err!r}"
        else:
            tail = ",,"
        out.write(f"{float(xv)!r},{v.real!r},{v.imag!r},{tail}\n")
