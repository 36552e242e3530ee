"""Pure-Python evaluation kernels.

This module and the compiled twin ``_kernels_cy`` expose the same
functions; ``legphase._backend`` picks one at import time.  Everything
here is scalar and allocation-free on the hot path so the compiled twin
can mirror it statement by statement.

Numerical layout of the scaled Hankel evaluation:

* ``|z| <= SERIES_RADIUS``: the order-0/1 power series summed in
  double-double arithmetic.  The combination J + iY cancels to roughly
  exp(-2 Im z) of the magnitude of its parts near the imaginary axis, so
  the series, the harmonic numbers, log(z/2) and arg(z) are all carried
  in double-double until the combination has been formed.
* ``|z| > SERIES_RADIUS``: the order-0/1 large-argument expansion in
  plain binary64, truncated at the first term whose magnitude stops
  decreasing (at most ASYM_MAX_TERMS beyond the leading one).

Oscillatory phase factors exp(i*scale*theta) are computed from the
two-product decomposition of scale*theta reduced modulo 2*pi, so the
only phase error left is the rounding of the inputs themselves.
"""

import cmath
import math

from . import _ddouble as dd
from .errors import DomainError

SERIES_RADIUS = 14.0
ASYM_MAX_TERMS = 22

_RADIUS_SQ = SERIES_RADIUS * SERIES_RADIUS
_E_M_IPI4 = complex(0.7071067811865476, -0.7071067811865476)
_E_M_3IPI4 = complex(-0.7071067811865476, -0.7071067811865476)
_INV_TWO_PI = 0.15915494309189535

# term ratios of the large-argument expansions: a_k(n)/a_{k-1}(n) / (8k)
_RATIO0 = tuple(-((2 * k - 1) ** 2) / (8.0 * k) for k in range(1, ASYM_MAX_TERMS + 1))
_RATIO1 = tuple((4.0 - (2 * k - 1) ** 2) / (8.0 * k) for k in range(1, ASYM_MAX_TERMS + 1))


def _require_sector(z):
    x = z.real
    y = z.imag
    if x == 0.0 and y == 0.0:
        raise DomainError("argument must be nonzero")
    if x < 0.0 or y < 0.0 or math.isnan(x) or math.isnan(y):
        raise DomainError(f"argument {z!r} outside the sector 0 <= arg z <= pi/2")
    return x, y


# ---------------------------------------------------------------------------
# power-series branch (double-double)
# ---------------------------------------------------------------------------

def _cadd(a, b):
    return (dd.add(a[0], b[0]), dd.add(a[1], b[1]))


def _csub(a, b):
    return (dd.sub(a[0], b[0]), dd.sub(a[1], b[1]))


def _cmul(a, b):
    re = dd.sub(dd.mul(a[0], b[0]), dd.mul(a[1], b[1]))
    im = dd.add(dd.mul(a[0], b[1]), dd.mul(a[1], b[0]))
    return (re, im)


def _cmul_dd(a, s):
    return (dd.mul(a[0], s), dd.mul(a[1], s))


def _cdiv_d(a, v):
    return (dd.div_d(a[0], v), dd.div_d(a[1], v))


def _cto_complex(a):
    return complex(a[0][0] + a[0][1], a[1][0] + a[1][1])


def _quarter_square(x, y):
    """(z/2)^2 as a complex double-double, exactly from z = x + iy."""
    px = dd.two_prod(x, x)
    py = dd.two_prod(y, y)
    re = dd.div_d(dd.sub(px, py), 4.0)
    im = dd.div_d(dd.mul_d(dd.two_prod(x, y), 2.0), 4.0)
    return (re, im)


def _log_half(x, y):
    """log(z/2) as a complex double-double for z in the closed sector."""
    px = dd.two_prod(x, x)
    py = dd.two_prod(y, y)
    rho2 = dd.div_d(dd.add(px, py), 4.0)  # |z/2|^2
    return (dd.div_d(dd.log(rho2), 2.0), dd.atan2_sector(y, x))


def _series_order0(w):
    """J0 and T0 = sum_{j>=1} (-1)^{j+1} H_j w^j/(j!)^2 for w = (z/2)^2."""
    term = ((1.0, 0.0), (0.0, 0.0))
    j0 = term
    t0 = ((0.0, 0.0), (0.0, 0.0))
    harmonic = (0.0, 0.0)
    j = 0
    while j < 80:
        j += 1
        term = _cdiv_d(_cmul(term, w), -float(j) * float(j))
        j0 = _cadd(j0, term)
        harmonic = dd.add(harmonic, dd.div_d_d(1.0, float(j)))
        t0 = _csub(t0, _cmul_dd(term, harmonic))
        if j > 4 and abs(term[0][0]) + abs(term[1][0]) < 1e-34 * (
            abs(j0[0][0]) + abs(j0[1][0]) + 1.0
        ):
            break
    return j0, t0


def _series_order1(w):
    """S1 with J1 = (z/2) S1, and T1 = sum (H_j + H_{j+1}) (-1)^j w^j/(j!(j+1)!)."""
    term = ((1.0, 0.0), (0.0, 0.0))
    s1 = term
    hj = (0.0, 0.0)
    hj1 = (1.0, 0.0)
    t1 = _cmul_dd(term, dd.add(hj, hj1))
    j = 0
    while j < 80:
        j += 1
        term = _cdiv_d(_cmul(term, w), -float(j) * float(j + 1))
        s1 = _cadd(s1, term)
        hj = dd.add(hj, dd.div_d_d(1.0, float(j)))
        hj1 = dd.add(hj1, dd.div_d_d(1.0, float(j + 1)))
        t1 = _cadd(t1, _cmul_dd(term, dd.add(hj, hj1)))
        if j > 4 and abs(term[0][0]) + abs(term[1][0]) < 1e-34 * (
            abs(s1[0][0]) + abs(s1[1][0]) + 1.0
        ):
            break
    return s1, t1


def _j0y0_dd(x, y):
    w = _quarter_square(x, y)
    j0, t0 = _series_order0(w)
    lg = _log_half(x, y)
    lg = (dd.add(lg[0], dd.EULER), lg[1])
    y0 = _cmul_dd(_cadd(_cmul(lg, j0), t0), dd.TWO_OVER_PI)
    return j0, y0


def _j1y1_dd(x, y):
    w = _quarter_square(x, y)
    s1, t1 = _series_order1(w)
    zh = ((0.5 * x, 0.0), (0.5 * y, 0.0))
    j1 = _cmul(zh, s1)
    lg = _log_half(x, y)
    lg = (dd.add(lg[0], dd.EULER), lg[1])
    den = dd.add(dd.two_prod(x, x), dd.two_prod(y, y))
    inv_z = (dd.div((x, 0.0), den), dd.div((-y, 0.0), den))
    zq = ((0.25 * x, 0.0), (0.25 * y, 0.0))
    y1 = _cmul_dd(
        _csub(_csub(_cmul(lg, j1), inv_z), _cmul(zq, t1)), dd.TWO_OVER_PI
    )
    return j1, y1


def bessel_j0y0(z):
    """(J0(z), Y0(z)) by the defining power series; |z| <= SERIES_RADIUS."""
    x, y = _require_sector(z)
    j0, y0 = _j0y0_dd(x, y)
    return _cto_complex(j0), _cto_complex(y0)


def bessel_j1y1(z):
    """(J1(z), Y1(z)) by the defining power series; |z| <= SERIES_RADIUS."""
    x, y = _require_sector(z)
    j1, y1 = _j1y1_dd(x, y)
    return _cto_complex(j1), _cto_complex(y1)


def _scaled_series_h0(x, y):
    j0, y0 = _j0y0_dd(x, y)
    h0 = _cadd(j0, (dd.neg(y0[1]), y0[0]))  # J0 + i Y0
    return _cto_complex(h0) * cmath.exp(complex(y, -x))


def _scaled_series_h1(x, y):
    j1, y1 = _j1y1_dd(x, y)
    h1 = _cadd(j1, (dd.neg(y1[1]), y1[0]))
    return _cto_complex(h1) * cmath.exp(complex(y, -x))


# ---------------------------------------------------------------------------
# large-argument branch (plain binary64)
# ---------------------------------------------------------------------------

def _scaled_asym(z, ratios, front):
    zinv = 1.0 / z
    term = 1.0 + 0.0j
    total = term
    prev = 1.0
    for r in ratios:
        term *= 1j * r * zinv
        mag = abs(term)
        if mag >= prev:
            break
        total += term
        prev = mag
    return cmath.sqrt(2.0 / (math.pi * z)) * front * total


def scaled_h0(z):
    """S(z) = exp(-iz) H0(z), finite throughout the sector."""
    x, y = _require_sector(z)
    if x * x + y * y <= _RADIUS_SQ:
        return _scaled_series_h0(x, y)
    return _scaled_asym(z, _RATIO0, _E_M_IPI4)


def scaled_h1(z):
    """exp(-iz) H1(z), finite throughout the sector."""
    x, y = _require_sector(z)
    if x * x + y * y <= _RADIUS_SQ:
        return _scaled_series_h1(x, y)
    return _scaled_asym(z, _RATIO1, _E_M_3IPI4)


def s_prime(z):
    """Derivative of scaled_h0: -scaled_h1(z) - i*scaled_h0(z)."""
    return -scaled_h1(z) - 1j * scaled_h0(z)


def scaled_h0_series(z):
    """Series path regardless of |z| (crossover diagnostics)."""
    x, y = _require_sector(z)
    return _scaled_series_h0(x, y)


def scaled_h0_asymptotic(z):
    """Large-argument path regardless of |z| (crossover diagnostics)."""
    _require_sector(z)
    return _scaled_asym(z, _RATIO0, _E_M_IPI4)


def scaled_h1_series(z):
    x, y = _require_sector(z)
    return _scaled_series_h1(x, y)


def scaled_h1_asymptotic(z):
    _require_sector(z)
    return _scaled_asym(z, _RATIO1, _E_M_3IPI4)


# ---------------------------------------------------------------------------
# oscillatory phase factor with compensated argument reduction
# ---------------------------------------------------------------------------

def _reduced_cos_sin(hi, lo):
    n = math.floor(hi * _INV_TWO_PI + 0.5)
    if n != 0.0:
        p1, p2 = dd.two_prod(n, dd.TWO_PI[0])
        p2 += n * dd.TWO_PI[1]
        r = dd.add((hi, lo), (-p1, -p2))
    else:
        r = (hi, lo)
    c = math.cos(r[0])
    s = math.sin(r[0])
    return c - r[1] * s, s + r[1] * c


def phase_factor(scale, theta):
    """exp(i*scale*theta) via compensated reduction of scale*theta mod 2*pi."""
    hi, lo = dd.two_prod(scale, theta)
    c, s = _reduced_cos_sin(hi, lo)
    return complex(c, s)


# ---------------------------------------------------------------------------
# expansion evaluation
# ---------------------------------------------------------------------------

def _node_argument(beta, lam):
    z = beta * lam
    if z.real == 0.0 and z.imag == 0.0:
        raise DomainError(
            f"expansion node argument underflowed to zero (lambda={lam!r})"
        )
    return z

def eval_psi(nu, theta, a0, a, b):
    """Oscillatory-factor times scaled-Hankel sum; coefficient arrays a, b."""
    p = nu + 1.0
    q = math.sqrt(p)
    st = math.sin(theta)
    ct = math.cos(theta)
    beta = complex(st * ct, st * st)
    acc = a0 * scaled_h0(_node_argument(beta, p))
    for k in range(1, len(a) + 1):
        acc += a[k - 1] * scaled_h0(_node_argument(beta, p + k * q))
        acc += b[k - 1] * scaled_h0(_node_argument(beta, p - k * q))
    return phase_factor(p, theta) * acc


def eval_psi_pair(nu, theta, a0, a, b):
    """(psi, psi') sharing the scaled-Hankel evaluations between the two."""
    p = nu + 1.0
    q = math.sqrt(p)
    st = math.sin(theta)
    ct = math.cos(theta)
    beta = complex(st * ct, st * st)

    z = _node_argument(beta, p)
    s0 = scaled_h0(z)
    sp = -scaled_h1(z) - 1j * s0
    acc = a0 * s0
    der = a0 * p * sp
    for k in range(1, len(a) + 1):
        for lam, c in ((p + k * q, a[k - 1]), (p - k * q, b[k - 1])):
            z = _node_argument(beta, lam)
            s0 = scaled_h0(z)
            sp = -scaled_h1(z) - 1j * s0
            acc += c * s0
            der += c * lam * sp
    ph = phase_factor(p, theta)
    e2 = complex(ct, st)
    e2 *= e2
    psi = ph * acc
    psi_prime = 1j * p * psi + ph * e2 * der
    return psi, psi_prime


# ---------------------------------------------------------------------------
# cosine-sum baseline
# ---------------------------------------------------------------------------

def stieltjes_sum(nu, theta, coeffs):
    """sqrt(2/(pi sin t)) * sum_k C_k cos((nu+k+1/2)t - (2k+1)pi/4)/sin^k t."""
    st = math.sin(theta)
    pref = math.sqrt(2.0 / (math.pi * st))
    inv = 1.0 / st
    acc = 0.0
    power = 1.0
    for k, ck in enumerate(coeffs):
        hi, lo = dd.two_prod(nu + (k + 0.5), theta)
        s1, s2 = dd.two_prod(float(2 * k + 1), dd.PI_4[0])
        s2 += (2 * k + 1) * dd.PI_4[1]
        hi, lo = dd.add((hi, lo), (-s1, -s2))
        c, _ = _reduced_cos_sin(hi, lo)
        acc += ck * c * power
        power *= inv
    return pref * acc
