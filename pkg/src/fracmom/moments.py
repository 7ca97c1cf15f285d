"""Complex-order moment grids and their estimators.

A grid is the family of values E[(s i X)^(-gamma_k)] on the vertical
line gamma_k = rho + i k delta, k = -m..m.  Three interchangeable
estimators are provided — catalog closed forms, adaptive quadrature of
the defining integral, and a Monte Carlo average over samples — plus
conversion between signed / plain / absolute moment flavors, strip
arithmetic, a truncation heuristic, and a CSV round-trip format.
"""

from __future__ import annotations

import cmath
import json
import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple, TextIO

import numpy as np
from scipy import integrate

from .distributions import (
    DistributionSpec,
    FundamentalStrip,
    closed_form_moment,
    exact_pdf,
)
from .errors import (
    AllSamplesDegenerateError,
    ArgumentError,
    EmptyStripError,
    PoleError,
    QuadratureError,
    StripError,
)
from .special import sign_value

GRID_METHODS = ("closed_form", "quadrature", "monte_carlo")

_TRUNCATION_CAP = 10_000


# ----------------------------------------------------------------------
# grid types
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GridParams:
    """Line abscissa, imaginary step, half-width and sign of a grid."""

    rho: float
    delta: float
    m: int
    sign: str = "minus"

    def __post_init__(self):
        sign_value(self.sign)  # validates
        if not self.delta > 0.0:
            raise ArgumentError("delta must be > 0")
        if self.m < 1:
            raise ArgumentError("m must be >= 1")
        if not math.isfinite(self.rho):
            raise ArgumentError("rho must be finite")

    def node(self, k: int) -> complex:
        return complex(self.rho, k * self.delta)

    def nodes(self) -> np.ndarray:
        k = np.arange(-self.m, self.m + 1)
        return self.rho + 1j * self.delta * k


@dataclass(frozen=True)
class MomentGrid:
    """2m+1 moment values tabulated on the nodes of ``params``."""

    params: GridParams
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (2 * self.params.m + 1,):
            raise ArgumentError(
                f"grid needs {2 * self.params.m + 1} values, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)

    def value(self, k: int) -> complex:
        m = self.params.m
        if not -m <= k <= m:
            raise ArgumentError(f"node index {k} outside [-{m}, {m}]")
        return complex(self.values[k + m])


# ----------------------------------------------------------------------
# estimators
# ----------------------------------------------------------------------

_QUAD_LIMIT = 200


def _quad_real(f: Callable[[float], float], a: float, b: float, epsabs: float):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(f, a, b, epsabs=epsabs, epsrel=1e-12,
                                  limit=_QUAD_LIMIT)
    return val, err


def moment_quadrature(
    pdf: Callable[[float], float],
    support: tuple[float, float],
    gamma: complex,
    sign: str,
    *,
    tol: float = 1e-9,
) -> complex:
    """E[(s i X)^(-gamma)] by adaptive quadrature of the defining integral.

    The integral is split at the origin.  On each half-line the phase
    exp(-/+ s gamma i pi/2) is constant and is factored out, leaving the
    real-axis integrand |x|^(-gamma) pdf(x) whose real and imaginary
    parts are integrated separately.  The requested absolute accuracy of
    each piece is pre-scaled by the phase magnitude so the final error
    estimate is honest; if that estimate still exceeds ``tol`` a
    :class:`QuadratureError` carrying it is raised.
    """
    gamma = complex(gamma)
    s = sign_value(sign)
    lo, hi = support
    total = 0.0 + 0.0j
    achieved = 0.0

    pieces = []
    if hi > 0.0:
        # x > 0 half: (s i x)^(-g) = x^(-g) * exp(-s g i pi/2)
        phase = cmath.exp(-s * gamma * 1j * math.pi / 2.0)
        pieces.append((max(lo, 0.0), hi, phase, 1.0))
    if lo < 0.0:
        # x < 0 half, mapped to u = -x > 0
        phase = cmath.exp(+s * gamma * 1j * math.pi / 2.0)
        pieces.append((max(0.0, -hi), -lo, phase, -1.0))

    for a, b, phase, orient in pieces:
        mod = abs(phase)
        eps = max((tol / 4.0) / max(mod, 1.0), 1e-13)

        def integrand(u: float, w: complex) -> float:
            # u^(-gamma) pdf(orient * u), one real component at a time
            z = cmath.exp(-gamma * math.log(u)) * pdf(orient * u)
            return (z * w).real

        re, e_re = _quad_real(lambda u: integrand(u, 1.0), a, b, eps)
        im, e_im = _quad_real(lambda u: integrand(u, -1j), a, b, eps)
        total += phase * complex(re, im)
        achieved += (e_re + e_im) * mod

    if achieved > tol:
        raise QuadratureError(
            f"moment quadrature error estimate {achieved:.3e} exceeds "
            f"target {tol:.3e} at gamma = {gamma}",
            achieved=achieved,
        )
    return total


class MonteCarloMoment(NamedTuple):
    value: complex
    stderr: float
    dropped: int


def moment_monte_carlo(samples, gamma: complex, sign: str) -> MonteCarloMoment:
    """Sample-average estimate of E[(s i X)^(-gamma)] with a standard error.

    Exact zeros are dropped (the integrand is singular there for
    Re gamma > 0) and counted in the result.  The standard error is the
    delete-one jackknife of the mean, which for a plain average is the
    classical sqrt(Var/n); for a complex estimate the variance is taken
    as E|V - mean|^2.
    """
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise ArgumentError("samples must be nonempty")
    keep = x[x != 0.0]
    dropped = int(x.size - keep.size)
    if keep.size == 0:
        raise AllSamplesDegenerateError(
            f"all {x.size} samples are exactly zero"
        )
    vals = _signed_powers(keep, gamma, sign_value(sign))
    value = complex(vals.mean())
    n = keep.size
    if n > 1:
        var = float(np.mean(np.abs(vals - value) ** 2)) * n / (n - 1)
        stderr = math.sqrt(var / n)
    else:
        stderr = math.inf
    return MonteCarloMoment(value, stderr, dropped)


def _signed_powers(x: np.ndarray, gamma: complex, s: int) -> np.ndarray:
    # (s i x)^(-gamma) for an array of nonzero reals
    return np.exp(
        -gamma * np.log(np.abs(x))
        - s * gamma * (1j * math.pi / 2.0) * np.sign(x)
    )


def make_grid(
    spec: DistributionSpec,
    params: GridParams,
    method: str = "closed_form",
    *,
    samples=None,
    tol: float = 1e-9,
) -> MomentGrid:
    """Tabulate the moment grid by one of the three estimators.

    ``rho`` must lie in the family's moment strip intersected with the
    positive axis.  ``samples`` is required (nonempty) for the
    ``monte_carlo`` method and ignored otherwise.
    """
    if method not in GRID_METHODS:
        raise ArgumentError(
            f"method must be one of {GRID_METHODS}, got {method!r}"
        )
    positive = FundamentalStrip(0.0, math.inf)
    allowed = spec.moment_strip.intersect(positive)
    if params.rho not in allowed:
        raise StripError(
            f"rho = {params.rho} outside usable strip {allowed} of {spec.label()}"
        )

    if method == "monte_carlo":
        if samples is None or np.asarray(samples).size == 0:
            raise ArgumentError("monte_carlo needs a nonempty samples array")
        x = np.asarray(samples, dtype=float)
        keep = x[x != 0.0]
        if keep.size == 0:
            raise AllSamplesDegenerateError(
                f"all {x.size} samples are exactly zero"
            )
        s = sign_value(params.sign)
        # shared log/sign factors across nodes
        logs = np.log(np.abs(keep))
        sgn = np.sign(keep)
        values = np.empty(2 * params.m + 1, dtype=complex)
        for i, g in enumerate(params.nodes()):
            values[i] = np.exp(
                -g * logs - s * g * (1j * math.pi / 2.0) * sgn
            ).mean()
        return MomentGrid(params, values)

    values = np.empty(2 * params.m + 1, dtype=complex)
    if method == "closed_form":
        for i, g in enumerate(params.nodes()):
            values[i] = closed_form_moment(spec, g, params.sign)
    else:
        pdf = lambda x: exact_pdf(spec, x)  # noqa: E731
        for i, g in enumerate(params.nodes()):
            values[i] = moment_quadrature(
                pdf, spec.support, g, params.sign, tol=tol
            )
    return MomentGrid(params, values)


# ----------------------------------------------------------------------
# moment-flavor conversion
# ----------------------------------------------------------------------


def convert_moment(
    kind_in: str,
    kind_out: str,
    gamma: complex,
    signed_value: complex,
    plain_value: complex | None = None,
) -> complex:
    """Convert a signed moment E[(±iX)^g] into the plain or absolute flavor.

    ``gamma`` is the literal exponent g carried by every moment in the
    identity (pass a negative value for negative-order moments).  The
    two solvable directions are:

    * ``signed_minus -> plain``:    E[X^g]   = i^g  E[(-iX)^g]
    * ``signed_plus  -> absolute``: E[|X|^g] = (E[(iX)^g] + i^(-g) E[X^g])
                                              / (2 cos(pi g / 2)),
      which additionally needs ``plain_value`` = E[X^g].

    Plain moments of sign-changing variables are understood on the
    principal branch, x^g = |x|^g e^(i pi g) for x < 0.  The remaining
    in/out pairings are underdetermined and raise
    :class:`ArgumentError`; the cosine zeros of the absolute direction
    raise :class:`PoleError`.
    """
    gamma = complex(gamma)
    if kind_in not in ("signed_plus", "signed_minus"):
        raise ArgumentError(f"kind_in must be signed_plus/signed_minus, got {kind_in!r}")
    if kind_out not in ("plain", "absolute"):
        raise ArgumentError(f"kind_out must be plain/absolute, got {kind_out!r}")

    if kind_in == "signed_minus" and kind_out == "plain":
        return cmath.exp(gamma * 1j * math.pi / 2.0) * signed_value
    if kind_in == "signed_plus" and kind_out == "absolute":
        if plain_value is None:
            raise ArgumentError(
                "signed_plus -> absolute needs the plain moment as well"
            )
        cos_half = cmath.cos(math.pi * gamma / 2.0)
        if abs(cos_half) <= 1e-12:
            raise PoleError(
                f"absolute conversion undefined at gamma = {gamma} "
                "(cosine normaliser vanishes)"
            )
        adj = cmath.exp(-gamma * 1j * math.pi / 2.0) * plain_value
        return (signed_value + adj) / (2.0 * cos_half)
    raise ArgumentError(
        f"no identity links {kind_in} to {kind_out}; "
        "supported: signed_minus->plain, signed_plus->absolute"
    )


# ----------------------------------------------------------------------
# strip arithmetic and truncation
# ----------------------------------------------------------------------


def working_strip(spec: DistributionSpec) -> FundamentalStrip:
    """Guaranteed-usable line abscissas for reconstruction.

    The moment strip intersected with (0, 1) — except the Gaussian,
    whose reconstruction line extends over the whole positive axis by
    analytic continuation of its rapidly decaying CF.
    """
    if spec.family == "gaussian":
        strip = FundamentalStrip(0.0, math.inf)
    else:
        strip = spec.moment_strip.intersect(FundamentalStrip(0.0, 1.0))
    if strip.is_empty:
        raise EmptyStripError(
            f"no admissible line abscissa for {spec.label()}"
        )
    return strip


class TruncationSuggestion(NamedTuple):
    m: int
    capped: bool


def suggest_truncation(
    spec: DistributionSpec,
    rho: float,
    delta: float,
    sign: str,
    tol: float,
) -> TruncationSuggestion:
    """Smallest half-width m whose tail term falls below ``tol``.

    The tail magnitude at eta = m*delta is bounded by the asymptotic
    |Gamma(rho + i eta)| ~ sqrt(2 pi) |eta|^(rho - 1/2) e^(-pi |eta|/2)
    times the larger of the two grid endpoint moment magnitudes — an
    envelope, not an exact term, so the suggestion is conservative.
    The sweep is linear in m and stops at 10^4 with ``capped=True`` when
    the target is unreachable.
    """
    if not tol > 0.0:
        raise ArgumentError("tol must be > 0")
    if not delta > 0.0:
        raise ArgumentError("delta must be > 0")

    def envelope(m: int) -> float:
        eta = m * delta
        gamma_mod = (
            math.sqrt(2.0 * math.pi)
            * eta ** (rho - 0.5)
            * math.exp(-math.pi * eta / 2.0)
        )
        if gamma_mod == 0.0:
            # the exponential factor underflowed; in-strip moments are
            # finite, so the bound is zero regardless of their size
            return 0.0
        top = abs(closed_form_moment(spec, complex(rho, eta), sign))
        bot = abs(closed_form_moment(spec, complex(rho, -eta), sign))
        return gamma_mod * max(top, bot)

    # The envelope decays like e^(-pi m delta / 2); if even the cap
    # endpoint misses the target, scanning up to it cannot help, and
    # answering "capped" immediately saves ~10^4 moment evaluations.
    try:
        if envelope(_TRUNCATION_CAP) > tol:
            return TruncationSuggestion(_TRUNCATION_CAP, True)
    except Exception:
        return TruncationSuggestion(_TRUNCATION_CAP, True)

    for m in range(1, _TRUNCATION_CAP + 1):
        try:
            bound = envelope(m)
        except Exception:
            # endpoint moment not evaluable this far out; treat the
            # envelope as unreachable from here on
            break
        if bound <= tol:
            return TruncationSuggestion(m, False)
    return TruncationSuggestion(_TRUNCATION_CAP, True)


# ----------------------------------------------------------------------
# CSV round trip
# ----------------------------------------------------------------------


def write_grid_csv(
    grid: MomentGrid,
    out: TextIO,
    *,
    family: str | None = None,
    params: dict | None = None,
    method: str | None = None,
) -> None:
    """Write a grid as `k,rho,eta,re,im` rows with `#` metadata lines.

    Floats are written with ``repr`` so the read side reproduces them
    bit for bit.
    """
    if family is not None:
        out.write(f"# family: {family}\n")
    if params is not None:
        out.write(f"# params: {json.dumps(params, sort_keys=True)}\n")
    out.write(f"# sign: {grid.params.sign}\n")
    if method is not None:
        out.write(f"# method: {method}\n")
    out.write("k,rho,eta,re,im\n")
    p = grid.params
    for k in range(-p.m, p.m + 1):
        v = grid.value(k)
        eta = k * p.delta
        out.write(f"{k},{p.rho!r},{eta!r},{v.real!r},{v.imag!r}\n")


def read_grid_csv(lines) -> tuple[MomentGrid, dict]:
    """Parse a grid written by :func:`write_grid_csv`.

    Accepts an iterable of lines (a file object works).  Returns the
    grid plus a metadata dict with whatever `#` keys were present.
    """
    meta: dict[str, object] = {}
    rows: list[tuple[int, float, float, complex]] = []
    header_seen = False
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, val = body.partition(":")
                key = key.strip()
                val = val.strip()
                if key == "params":
                    try:
                        meta[key] = json.loads(val)
                    except json.JSONDecodeError:
                        meta[key] = val
                else:
                    meta[key] = val
            continue
        if not header_seen:
            if line != "k,rho,eta,re,im":
                raise ArgumentError(
                    f"unexpected grid CSV header: {line!r}"
                )
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 5:
            raise ArgumentError(f"malformed grid CSV row: {line!r}")
        k = int(parts[0])
        rho, eta, re, im = (float(p) for p in parts[1:])
        rows.append((k, rho, eta, complex(re, im)))

    if not rows:
        raise ArgumentError("grid CSV contains no data rows")
    if "sign" not in meta:
        raise ArgumentError("grid CSV missing '# sign:' metadata")
    rows.sort(key=lambda r: r[0])
    ks = [r[0] for r in rows]
    m = (len(rows) - 1) // 2
    if ks != list(range(-m, m + 1)):
        raise ArgumentError("grid CSV rows must cover k = -m..m exactly")
    rho = rows[0][1]
    if any(r[1] != rho for r in rows):
        raise ArgumentError("grid CSV rows disagree on rho")
    delta = rows[m + 1][2]  # eta at k = 1
    params = GridParams(rho=rho, delta=delta, m=m, sign=str(meta["sign"]))
    values = np.array([r[3] for r in rows], dtype=complex)
    return MomentGrid(params, values), meta
