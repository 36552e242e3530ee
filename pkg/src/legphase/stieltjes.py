"""Classical cosine-sum approximation of P_nu with its remainder bound.

Serves as the comparison baseline: a sum of M cosines oscillating at
frequencies near nu, cheap to evaluate but useless as theta -> 0, where
the 1/sin^k(theta) weights blow up.  Each result carries the rigorous
remainder bound, so callers can see exactly when that happens.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels as _k
from .errors import DomainError

#: the reciprocal-square expansion of the gamma ratio holds for x > 10
GAMMA_RATIO_MIN_X = 10.0

# coefficients of the 7-term expansion in 1/x^2; all denominators are
# powers of two, so these literals are exact
_GAMMA_RATIO_COEFFS = (
    7426362705.0 / 1099511627776.0,
    -20898423.0 / 8589934592.0,
    180323.0 / 134217728.0,
    -671.0 / 524288.0,
    21.0 / 8192.0,
    -1.0 / 64.0,
)


@dataclass(frozen=True)
class StieltjesResult:
    """Partial-sum value of P_nu(cos theta) and its remainder bound."""

    value: float
    bound: float
    m: int


def gamma_ratio(x):
    """sqrt(x) * Gamma(x+1/4) / Gamma(x+3/4) for x > 10.

    Seven-term expansion in 1/x^2; roughly full binary64 accuracy on its
    stated domain.
    """
    if not x > GAMMA_RATIO_MIN_X:
        raise DomainError(f"gamma_ratio requires x > {GAMMA_RATIO_MIN_X:g}, got {x!r}")
    u = 1.0 / (x * x)
    acc = 0.0
    for c in _GAMMA_RATIO_COEFFS:
        acc = (acc + c) * u
    return 1.0 + acc


def coefficient_step(nu, k, ck):
    """One step of the coefficient recurrence: C_{nu,k+1} from C_{nu,k}."""
    return (k + 0.5) ** 2 / (2.0 * (k + 1) * (nu + k + 1.5)) * ck


def c_coefficients(nu, m):
    """First m cosine-sum coefficients C_{nu,0..m-1}; requires nu > 9.25.

    C_{nu,0} comes from the gamma-ratio expansion at nu + 3/4 (hence the
    degree restriction: below it the expansion route is invalid and the
    call is rejected rather than silently switched to another method).
    """
    if m < 1 or m != int(m):
        raise DomainError(f"term count must be a positive integer, got {m!r}")
    x = nu + 0.75
    if not x > GAMMA_RATIO_MIN_X:
        raise DomainError(
            f"coefficients require nu > {GAMMA_RATIO_MIN_X - 0.75:g}, got nu = {nu!r}"
        )
    out = np.empty(int(m))
    out[0] = gamma_ratio(x) / math.sqrt(x)
    for k in range(int(m) - 1):
        out[k + 1] = coefficient_step(nu, k, out[k])
    return out


def stieltjes_p(nu, theta, m):
    """M-term cosine-sum value of P_nu(cos theta) plus its remainder bound.

    The bound sqrt(2/(pi sin t)) * C_{nu,M} / sin^M(t) is reported even
    when it exceeds the value itself (small theta), which is the signal
    that the approximation is useless there; that is not an error.
    """
    if not 0.0 < theta < math.pi / 2.0:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta!r}")
    m = int(m)
    c = c_coefficients(nu, m + 1)
    value = _k.stieltjes_sum(nu, theta, c[:m])
    st = math.sin(theta)
    bound = math.sqrt(2.0 / (math.pi * st)) * c[m] / st ** m
    return StieltjesResult(value=value, bound=bound, m=m)


def minimizing_term_count(nu, theta, m_max=60):
    """Term count in 1..m_max whose remainder bound is smallest.

    Diagnostic companion to stieltjes_p: for fixed (nu, theta) the bound
    decreases with m until the asymptotic-series minimum and grows
    afterwards; this returns the minimizer.
    """
    if not 0.0 < theta < math.pi / 2.0:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta!r}")
    c = c_coefficients(nu, m_max + 1)
    st = math.sin(theta)
    best_m = 1
    best = math.inf
    weight = 1.0 / st
    for m in range(1, m_max + 1):
        bound = c[m] * weight
        if bound < best:
            best = bound
            best_m = m
        weight /= st
    return best_m
