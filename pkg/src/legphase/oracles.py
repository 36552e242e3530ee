"""Independent, slower reference evaluations used for validation.

Three mutually independent routes:

* adaptive Gauss-Kronrod quadrature of the nonoscillatory integral
  representation (any real degree, any angle in (0, pi/2));
* the three-term recurrence for integer degree (away from theta = 0);
* the hypergeometric series for small degree.

The quadrature route is the workhorse of the error tables.  After the
substitutions tau = beta*x and tau = u^2, the integrand

    2 * (1 + u^2)^(-(nu+1)) / sqrt(u^2 - 2i*beta),   beta = sin(t) e^{it},

is smooth on [0, inf) and decays like a Gaussian of width ~1/sqrt(nu),
so plain bisection-adaptive panels converge quickly.  The power is
always evaluated as exp(-(nu+1)*log1p(u^2)) so huge degrees underflow
cleanly instead of polluting the panel error estimates.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels as _k
from .errors import DomainError, NumericalError, ToleranceError

# 15-point Kronrod nodes/weights and the embedded 7-point Gauss weights
_XGK = np.array([
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
])
_G_IDX = np.arange(1, 15, 2)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget of the adaptive quadrature."""

    abs_tol: float = 1e-20
    rel_tol: float = 1e-13
    max_subdivisions: int = 4000

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


def _adaptive_gk(f, a, b, spec):
    """Integrate a vectorized complex-valued f over [a, b] adaptively.

    Bisects every panel whose Kronrod-Gauss error estimate exceeds its
    share of the global budget until the total estimate meets
    max(abs_tol, rel_tol * |integral|).
    """
    lo = np.array([a], dtype=np.float64)
    hi = np.array([b], dtype=np.float64)
    done_sum = 0.0 + 0.0j
    done_err = 0.0
    created = 1
    width_floor = (b - a) * 1e-15

    while True:
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        x = mid[:, None] + half[:, None] * _XGK[None, :]
        fx = f(x)
        k15 = (fx * _WGK).sum(axis=1) * half
        g7 = (fx[:, _G_IDX] * _WG).sum(axis=1) * half
        err = np.abs(k15 - g7)

        total = done_sum + k15.sum()
        budget = max(spec.abs_tol, spec.rel_tol * abs(total))
        if done_err + err.sum() <= budget:
            return total, done_err + err.sum()

        # settle panels that are individually below their share
        share = budget / (2.0 * (len(lo) + 1))
        settle = (err <= share) | (half[:] <= width_floor)
        if settle.any():
            done_sum += k15[settle].sum()
            done_err += err[settle].sum()
        split = ~settle
        if not split.any():
            raise ToleranceError(
                "adaptive quadrature stalled before reaching tolerance"
            )
        created += int(split.sum())
        if created > spec.max_subdivisions:
            raise ToleranceError(
                f"adaptive quadrature exceeded {spec.max_subdivisions} subdivisions"
            )
        lo_s = lo[split]
        hi_s = hi[split]
        mid_s = mid[split]
        lo = np.concatenate([lo_s, mid_s])
        hi = np.concatenate([mid_s, hi_s])


def _truncation_point(exponent, abs_tol):
    # (1 + U^2)^(-exponent) = abs_tol
    return math.sqrt(math.expm1(-math.log(abs_tol) / exponent))


def _check_angle(theta):
    if not 0.0 < theta < math.pi / 2.0:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta!r}")


def _sigma_integrals(nu, theta, spec, want_derivative):
    st = math.sin(theta)
    ct = math.cos(theta)
    beta = complex(st * ct, st * st)
    m2ib = -2.0j * beta
    e = nu + 1.0
    upper = _truncation_point(e, spec.abs_tol)

    def base(u):
        return np.exp(-e * np.log1p(u * u)) / np.sqrt(u * u + m2ib)

    sigma, _ = _adaptive_gk(base, 0.0, upper, spec)
    sigma *= 2.0
    if not want_derivative:
        return sigma, None

    e2 = nu + 2.0

    def deriv(u):
        uu = u * u
        return uu * np.exp(-e2 * np.log1p(uu)) / np.sqrt(uu + m2ib)

    tail, _ = _adaptive_gk(deriv, 0.0, upper, spec)
    e2i = complex(ct, st)
    e2i *= e2i
    sigma_prime = -(nu + 1.0) * e2i / beta * 2.0 * tail
    return sigma, sigma_prime


def psi_quadrature(nu, theta, spec=DEFAULT_SPEC):
    """psi_nu(theta) from the integral representation; self-validating."""
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"degree must be finite and >= 0, got {nu!r}")
    _check_angle(theta)
    sigma, _ = _sigma_integrals(nu, theta, spec, want_derivative=False)
    phase = _k.phase_factor(nu + 1.0, theta)
    return -2.0j / math.pi * phase * sigma


def psi_pair_quadrature(nu, theta, spec=DEFAULT_SPEC):
    """(psi, psi') from the integral representation."""
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"degree must be finite and >= 0, got {nu!r}")
    _check_angle(theta)
    sigma, sigma_prime = _sigma_integrals(nu, theta, spec, want_derivative=True)
    phase = _k.phase_factor(nu + 1.0, theta)
    psi = -2.0j / math.pi * phase * sigma
    psi_prime = 1j * (nu + 1.0) * psi + (-2.0j / math.pi) * phase * sigma_prime
    return psi, psi_prime


def phase_derivative_quadrature(nu, theta, spec=DEFAULT_SPEC):
    """Im(i(nu+1) + sigma'/sigma): the oracle for the phase derivative."""
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"degree must be finite and >= 0, got {nu!r}")
    _check_angle(theta)
    sigma, sigma_prime = _sigma_integrals(nu, theta, spec, want_derivative=True)
    if sigma == 0:
        raise NumericalError("sigma underflowed; phase derivative undefined")
    return (nu + 1.0) + (sigma_prime / sigma).imag


RECURRENCE_THETA_MIN = 0.05
RECURRENCE_MAX_DEGREE = 100_000


def legendre_recurrence(n, theta):
    """(P_n(cos t), Q_n(cos t)) by upward three-term recurrence, integer n.

    Both solutions oscillate on (-1, 1), so the upward direction is not
    dominance-unstable; the theta floor guards the accuracy loss near 0.
    """
    if n != int(n) or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    n = int(n)
    if n > RECURRENCE_MAX_DEGREE:
        raise DomainError(
            f"recurrence degree capped at {RECURRENCE_MAX_DEGREE} (cost is linear)"
        )
    if not RECURRENCE_THETA_MIN <= theta < math.pi / 2.0:
        raise DomainError(
            f"recurrence requires theta in [{RECURRENCE_THETA_MIN}, pi/2), "
            f"got {theta!r}"
        )
    x = math.cos(theta)
    p_prev, q_prev = 1.0, math.atanh(x)
    if n == 0:
        return p_prev, q_prev
    p_cur, q_cur = x, x * q_prev - 1.0
    for k in range(1, n):
        c1 = (2 * k + 1) * x
        p_cur, p_prev = (c1 * p_cur - k * p_prev) / (k + 1), p_cur
        q_cur, q_prev = (c1 * q_cur - k * q_prev) / (k + 1), q_cur
    return p_cur, q_cur


HYPERGEOMETRIC_MAX_DEGREE = 30.0
_HYPERGEOMETRIC_MAX_TERMS = 10_000


def p_hypergeometric(nu, theta, tol=1e-15):
    """P_nu(cos t) summed as 2F1(-nu, nu+1; 1; sin^2(t/2)); nu <= 30.

    Terminates exactly for integer nu; for real nu the alternating
    growth of the terms destroys binary64 accuracy beyond degree ~30,
    hence the cap.
    """
    if not 0.0 <= nu <= HYPERGEOMETRIC_MAX_DEGREE:
        raise DomainError(
            f"series degree must lie in [0, {HYPERGEOMETRIC_MAX_DEGREE:g}], got {nu!r}"
        )
    _check_angle(theta)
    s = math.sin(0.5 * theta) ** 2
    term = 1.0
    total = 1.0
    for j in range(_HYPERGEOMETRIC_MAX_TERMS):
        term *= (j - nu) * (j + nu + 1.0) / ((j + 1.0) * (j + 1.0)) * s
        if term == 0.0:
            return total
        total += term
        if j > nu and abs(term) <= tol * abs(total):
            return total
    raise NumericalError(
        f"hypergeometric series did not converge in {_HYPERGEOMETRIC_MAX_TERMS} terms"
    )
