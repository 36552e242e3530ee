"""Coefficients of the exponential-sum approximation behind the expansion.

The degree-dependent weights a0, a_k, b_k make

    g(t) = a0 exp(-p t) + sum_k a_k exp(-(p+kq) t) + b_k exp(-(p-kq) t)

match the power series of f(t) = (1+t)^(-p) at t = 0 through order 2N,
where p = nu + 1 and q = sqrt(p).  Two routes are provided:

* closed_form: the published rational polynomials in q for N = 2..6,
  evaluated exactly as printed;
* solve: the (2N+1)-point moment system for any N >= 0, solved with the
  O(N^2) Bjorck-Pereyra elimination for primal Vandermonde systems.

The solver always accumulates in double-double arithmetic: the moment
system loses digits rapidly once the node spacing q is small relative to
p, and the smallest weights (|a_N|, |b_N| can be ~1e-8 of the largest)
would otherwise come out with only a few correct digits.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _ddouble as dd
from .errors import DomainError, NumericalError

CLOSED_FORM_ORDERS = (2, 3, 4, 5, 6)

# numerator coefficients (descending powers of q) and denominator multiplier;
# entry value = poly(q) / (den * q^(2N-2))
_CLOSED_A = {
    2: (
        ((1, 0, 3), 2),
        ((1, -2, -6), 6),
        ((1, 2, 3), 12),
    ),
    3: (
        ((7, 0, -23, 0, -60), 18),
        ((6, -3, 26, 12, 60), 24),
        ((3, 0, -35, -24, -60), 60),
        ((2, 15, 50, 36, 60), 360),
    ),
    4: (
        ((115, 0, 59, 0, 1854, 0, 2520), 288),
        ((87, -59, -37, -114, -1914, -360, -2520), 360),
        ((39, 28, 7, 300, 2094, 720, 2520), 720),
        ((11, 63, -77, -630, -2394, -1080, -2520), 2520),
        ((3, 56, 427, 1176, 2814, 1440, 2520), 20160),
    ),
    5: (
        ((359, 0, -20, 0, -1530, 0, -21636, 0, -22680), 900),
        ((2091, -1396, 747, -104, 12654, 12672, 175608, 20160, 181440), 8640),
        ((204, 137, -372, 259, -3654, -6876, -45792, -10080, -45360), 3780),
        ((179, 1068, 403, -2184, 20286, 46656, 195768, 60480, 181440), 40320),
        ((3, 53, 276, 7, -4158, -9036, -26676, -10080, -22680), 22680),
        ((3, 100, 1635, 13160, 58590, 106560, 236088, 100800, 181440), 1814400),
    ),
    6: (
        ((51693, 0, -856, 0, 18721, 0, 1433070, 0, 10994040, 0, 9979200), 129600),
        ((73191, -48926, 22097, -10306, -35192, 1980, -2951028, -1504080,
          -22169520, -1814400, -19958400), 302400),
        ((13053, 8834, -21784, 23242, 5185, 1476, 1617966, 1564560,
          11356920, 1814400, 9979200), 241920),
        ((4839, 28638, 6833, -78966, 69640, -64908, -3811572, -4996080,
          -23621040, -5443200, -19958400), 1088640),
        ((237, 4372, 24104, 13892, -93599, 160200, 2414574, 3612960,
          12445560, 3628800, 9979200), 1814400),
        ((39, 770, 13937, 111430, 166408, -1035540, -6500340, -9939600,
          -26524080, -9072000, -19958400), 19958400),
        ((-3, 198, 2024, 19998, 239041, 1324620, 4548654, 6629040,
          14259960, 5443200, 9979200), 119750400),
    ),
}

_CLOSED_B = {
    2: (
        ((1, 2, -6), 6),
        ((1, -2, 3), 12),
    ),
    3: (
        ((6, 3, 26, -12, 60), 24),
        ((3, 0, -35, 24, -60), 60),
        ((2, -15, 50, -36, 60), 360),
    ),
    4: (
        ((87, 59, -37, 114, -1914, 360, -2520), 360),
        ((39, -28, 7, -300, 2094, -720, 2520), 720),
        ((11, -63, -77, 630, -2394, 1080, -2520), 2520),
        ((3, -56, 427, -1176, 2814, -1440, 2520), 20160),
    ),
    5: (
        ((2091, 1396, 747, 104, 12654, -12672, 175608, -20160, 181440), 8640),
        ((204, -137, -372, -259, -3654, 6876, -45792, 10080, -45360), 3780),
        ((179, -1068, 403, 2184, 20286, -46656, 195768, -60480, 181440), 40320),
        ((3, -53, 276, -7, -4158, 9036, -26676, 10080, -22680), 22680),
        ((3, -100, 1635, -13160, 58590, -106560, 236088, -100800, 181440), 1814400),
    ),
    6: (
        ((73191, 48926, 22097, 10306, -35192, -1980, -2951028, 1504080,
          -22169520, 1814400, -19958400), 302400),
        ((13053, -8834, -21784, -23242, 5185, -1476, 1617966, -1564560,
          11356920, -1814400, 9979200), 241920),
        ((4839, -28638, 6833, 78966, 69640, 64908, -3811572, 4996080,
          -23621040, 5443200, -19958400), 1088640),
        ((237, -4372, 24104, -13892, -93599, -160200, 2414574, -3612960,
          12445560, -3628800, 9979200), 1814400),
        ((39, -770, 13937, -111430, 166408, 1035540, -6500340, 9939600,
          -26524080, 9072000, -19958400), 19958400),
        ((-3, -198, 2024, -19998, 239041, -1324620, 4548654, -6629040,
          14259960, -5443200, 9979200), 119750400),
    ),
}


@dataclass(frozen=True)
class CoefficientSet:
    """Weights of one exponential-sum approximation.

    Invariants (enforced by construction, asserted in the tests):
    a0 + sum(a_k + b_k) = 1 and sum k (a_k - b_k) = 0.
    """

    order: int
    nu: float
    p: float
    q: float
    a0: float
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)
    source: str = "closed-form"

    def as_dict(self):
        return {
            "order": self.order,
            "nu": self.nu,
            "p": self.p,
            "q": self.q,
            "a0": self.a0,
            "a": [float(v) for v in self.a],
            "b": [float(v) for v in self.b],
            "source": self.source,
        }


def _check_validity(n, nu):
    if not math.isfinite(nu):
        raise DomainError(f"degree must be finite, got {nu!r}")
    p = nu + 1.0
    if not p > n * n:
        raise DomainError(
            f"validity requires nu + 1 > N^2; got nu + 1 = {p:g} with N = {n}"
        )
    return p


def _freeze(values):
    arr = np.asarray(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def _horner(coeffs, q):
    acc = 0.0
    for c in coeffs:
        acc = acc * q + c
    return acc


def coeffs_closed_form(n, nu):
    """Published closed-form coefficient set for N in 2..6."""
    if n not in _CLOSED_A:
        raise DomainError(
            f"closed forms exist for N in {CLOSED_FORM_ORDERS}, got N = {n}"
        )
    p = _check_validity(n, nu)
    q = math.sqrt(p)
    scale = q ** (2 * n - 2)
    (a0_num, a0_den) = _CLOSED_A[n][0]
    a0 = _horner(a0_num, q) / (a0_den * scale)
    a = [_horner(num, q) / (den * scale) for num, den in _CLOSED_A[n][1:]]
    b = [_horner(num, q) / (den * scale) for num, den in _CLOSED_B[n]]
    return CoefficientSet(
        order=n, nu=nu, p=p, q=q, a0=a0, a=_freeze(a), b=_freeze(b),
        source="closed-form",
    )


def _dd_moments(p, count):
    """Row-scaled moments (p)_k / p^k = prod_{i<k} (1 + i/p), as double-doubles."""
    out = [(1.0, 0.0)]
    acc = (1.0, 0.0)
    for k in range(1, count):
        acc = dd.mul(acc, dd.add_d(dd.div_d_d(float(k - 1), p), 1.0))
        out.append(acc)
    return out


def coeffs_solve(n, nu):
    """Coefficient set from the (2N+1)x(2N+1) moment system, any N >= 0.

    The system sum_j c_j lambda_j^k = (p)_k (k = 0..2N, rising factorial
    on the right) is row-scaled by p^k so every entry is O(1): nodes
    become 1 + j/q, moments become prod_{i<k}(1 + i/p).  The scaled
    system is solved by the Bjorck-Pereyra primal-Vandermonde elimination
    in double-double arithmetic.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"expansion order must be a nonnegative integer, got {n!r}")
    n = int(n)
    p = _check_validity(n, nu)
    q = math.sqrt(p)
    if n == 0:
        return CoefficientSet(
            order=0, nu=nu, p=p, q=q, a0=1.0,
            a=_freeze([]), b=_freeze([]), source="solved",
        )

    q_dd = dd.sqrt((p, 0.0))
    nodes = [dd.add_d(dd.div((float(j), 0.0), q_dd), 1.0) for j in range(-n, n + 1)]
    for left, right in zip(nodes, nodes[1:]):
        if left[0] == right[0] and left[1] == right[1]:
            raise DomainError("moment-system nodes collide (degree too large)")
    if nodes[0][0] <= 0.0:
        raise DomainError("moment-system nodes must be positive")

    m = 2 * n
    rhs = _dd_moments(p, m + 1)

    for k in range(m):
        xk = nodes[k]
        for i in range(m, k, -1):
            rhs[i] = dd.sub(rhs[i], dd.mul(xk, rhs[i - 1]))
    for k in range(m - 1, -1, -1):
        for i in range(k + 1, m + 1):
            rhs[i] = dd.div(rhs[i], dd.sub(nodes[i], nodes[i - k - 1]))
        for i in range(k, m):
            rhs[i] = dd.sub(rhs[i], rhs[i + 1])

    coeffs = [v[0] + v[1] for v in rhs]
    if not all(math.isfinite(c) for c in coeffs):
        raise NumericalError("moment-system solve produced non-finite coefficients")
    a0 = coeffs[n]
    a = [coeffs[n + k] for k in range(1, n + 1)]
    b = [coeffs[n - k] for k in range(1, n + 1)]
    return CoefficientSet(
        order=n, nu=nu, p=p, q=q, a0=a0, a=_freeze(a), b=_freeze(b),
        source="solved",
    )


def coefficients(n, nu, solve=False):
    """Closed form when available (N in 2..6) unless solve=True forces the system."""
    if not solve and n in _CLOSED_A:
        return coeffs_closed_form(n, nu)
    return coeffs_solve(n, nu)


def moment_residuals(cs, k_max=None):
    """Relative residuals of the row-scaled moment equations for k = 0..k_max.

    Evaluated in double-double so the report reflects the coefficients,
    not the evaluation.
    """
    n = cs.order
    if k_max is None:
        k_max = 2 * n
    q_dd = dd.sqrt((cs.p, 0.0))
    nodes = [dd.add_d(dd.div((float(j), 0.0), q_dd), 1.0) for j in range(-n, n + 1)]
    weights = list(cs.b[::-1]) + [cs.a0] + list(cs.a)
    powers = [(1.0, 0.0)] * len(nodes)
    moments = _dd_moments(cs.p, k_max + 1)
    out = []
    for k in range(k_max + 1):
        acc = (0.0, 0.0)
        for w, pw in zip(weights, powers):
            acc = dd.add(acc, dd.mul_d(pw, float(w)))
        resid = dd.sub(acc, moments[k])
        out.append(abs((resid[0] + resid[1]) / (moments[k][0])))
        powers = [dd.mul(pw, nd) for pw, nd in zip(powers, nodes)]
    return np.asarray(out)
