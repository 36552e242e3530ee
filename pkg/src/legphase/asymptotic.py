"""Degree-independent evaluation of P_nu, Q_nu and the phase derivative.

The central object is the complex solution

    psi_nu(t) = P_nu(cos t) - (2/pi) i Q_nu(cos t)

of Legendre's equation on (0, pi/2), approximated as an oscillatory
exponential exp(i(nu+1)t) times a short sum of nonoscillatory
scaled-Hankel values.  The cost of one evaluation depends on the number
of expansion terms N, never on nu.  The imaginary part of the
logarithmic derivative psi'/psi is the derivative of a nonoscillatory
phase function for the equation, and is obtained here with near full
precision because the oscillatory factor cancels from the ratio.
"""

import math
from dataclasses import dataclass

from ._backend import kernels as _k
from .coeffs import CoefficientSet, coefficients
from .errors import DomainError, NumericalError

#: smallest supported angle; below this there is no independent oracle
#: to validate against (the endpoint sampling used by the benchmark
#: reaches down to exp(-36) ~ 2.3e-16, which must stay evaluable)
THETA_MIN = 1e-16

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class EvaluationPoint:
    """A (degree, angle, expansion order) triple with the validity checks."""

    nu: float
    theta: float
    n: int = 4

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu >= 0.0):
            raise DomainError(f"degree must be finite and >= 0, got {self.nu!r}")
        if not (THETA_MIN <= self.theta < HALF_PI):
            raise DomainError(
                f"theta must lie in [{THETA_MIN:g}, pi/2), got {self.theta!r}"
            )
        if self.n < 0:
            raise DomainError(f"expansion order must be >= 0, got {self.n}")
        if not self.nu + 1.0 > self.n * self.n:
            raise DomainError(
                f"validity requires nu + 1 > N^2; got nu + 1 = {self.nu + 1.0:g} "
                f"with N = {self.n}"
            )


@dataclass(frozen=True)
class PhaseEvaluation:
    """psi, psi', the Legendre pair and the phase derivative at one point."""

    psi: complex
    psi_prime: complex
    p_nu: float
    q_nu: float
    alpha_prime: float


def _check_coeffs(pt, cs):
    if not isinstance(cs, CoefficientSet):
        raise TypeError(f"expected a CoefficientSet, got {type(cs).__name__}")
    if cs.order != pt.n:
        raise DomainError(
            f"coefficient set has order {cs.order}, point requests N = {pt.n}"
        )
    if cs.nu != pt.nu:
        raise DomainError(
            f"coefficient set was built for nu = {cs.nu!r}, point has nu = {pt.nu!r}"
        )


def eval_psi(pt, cs):
    """psi_nu(theta) = P - (2/pi) i Q via the expansion."""
    _check_coeffs(pt, cs)
    return _k.eval_psi(pt.nu, pt.theta, cs.a0, cs.a, cs.b)


def eval_psi_prime(pt, cs):
    """d/dtheta of psi_nu via the differentiated expansion."""
    _check_coeffs(pt, cs)
    return _k.eval_psi_pair(pt.nu, pt.theta, cs.a0, cs.a, cs.b)[1]


def eval_psi_pair(pt, cs):
    """(psi, psi') sharing the scaled-Hankel evaluations."""
    _check_coeffs(pt, cs)
    return _k.eval_psi_pair(pt.nu, pt.theta, cs.a0, cs.a, cs.b)


def legendre_pq(pt, cs):
    """(P_nu(cos theta), Q_nu(cos theta)) extracted from psi."""
    psi = eval_psi(pt, cs)
    return psi.real, -HALF_PI * psi.imag


def phase_derivative(pt, cs):
    """Im(psi'/psi): the derivative of the nonoscillatory phase function."""
    psi, psi_prime = eval_psi_pair(pt, cs)
    if psi == 0 or not (abs(psi.real) + abs(psi.imag)) > 0.0:
        raise NumericalError(
            f"|psi| underflowed at nu={pt.nu!r}, theta={pt.theta!r}; "
            "the phase derivative is undefined there"
        )
    return (psi_prime / psi).imag


def evaluate(pt, cs=None, solve=False):
    """Full PhaseEvaluation; builds coefficients when none are supplied."""
    if cs is None:
        cs = coefficients(pt.n, pt.nu, solve=solve)
    psi, psi_prime = eval_psi_pair(pt, cs)
    if psi == 0:
        raise NumericalError(
            f"|psi| underflowed at nu={pt.nu!r}, theta={pt.theta!r}"
        )
    return PhaseEvaluation(
        psi=psi,
        psi_prime=psi_prime,
        p_nu=psi.real,
        q_nu=-HALF_PI * psi.imag,
        alpha_prime=(psi_prime / psi).imag,
    )
