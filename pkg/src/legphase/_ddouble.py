"""Double-double (compensated) arithmetic helpers.

A double-double value is an unevaluated sum hi + lo of two binary64
numbers with |lo| <= ulp(hi)/2, giving roughly 32 significant decimal
digits.  Only the operations the kernels and the coefficient solver
actually need are provided.  Values are plain (hi, lo) tuples.

The error-free transforms (two_sum, two_prod) and the add/mul/div
sequences follow the classic Dekker/Knuth constructions also used by the
QD library.  two_prod uses Dekker splitting because math.fma is not
available on the supported Python versions.
"""

import math

_SPLIT = 134217729.0  # 2**27 + 1

# hi/lo decompositions of constants used by the kernels
PI = (3.141592653589793, 1.2246467991473532e-16)
TWO_PI = (6.283185307179586, 2.4492935982947064e-16)
PI_2 = (1.5707963267948966, 6.123233995736766e-17)
PI_4 = (0.7853981633974483, 3.061616997868383e-17)
LN2 = (0.6931471805599453, 2.3190468138462996e-17)
EULER = (0.5772156649015329, -4.942915152430645e-18)
TWO_OVER_PI = (0.6366197723675814, -3.935735335036497e-17)

_SQRT_HALF = 0.7071067811865476


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    p = a * b
    aa = _SPLIT * a
    ahi = aa - (aa - a)
    alo = a - ahi
    bb = _SPLIT * b
    bhi = bb - (bb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def add(a, b):
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 += t2
    return quick_two_sum(s1, s2)


def add_d(a, b):
    s1, s2 = two_sum(a[0], b)
    s2 += a[1]
    return quick_two_sum(s1, s2)


def neg(a):
    return (-a[0], -a[1])


def sub(a, b):
    return add(a, (-b[0], -b[1]))


def mul(a, b):
    p1, p2 = two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p1, p2)


def mul_d(a, b):
    p1, p2 = two_prod(a[0], b)
    p2 += a[1] * b
    return quick_two_sum(p1, p2)


def mul_d_d(a, b):
    return two_prod(a, b)


def div(a, b):
    q1 = a[0] / b[0]
    r = sub(a, mul_d(b, q1))
    q2 = r[0] / b[0]
    r = sub(r, mul_d(b, q2))
    q3 = r[0] / b[0]
    s, e = quick_two_sum(q1, q2)
    return add((s, e), (q3, 0.0))


def div_d(a, b):
    return div(a, (b, 0.0))


def div_d_d(a, b):
    return div((a, 0.0), (b, 0.0))


def sqrt(a):
    if a[0] == 0.0:
        return (0.0, 0.0)
    h = math.sqrt(a[0])
    p1, p2 = two_prod(h, h)
    r = sub(a, (p1, p2))
    return quick_two_sum(h, r[0] / (2.0 * h))


def log(a):
    """Natural logarithm of a positive double-double."""
    m_unused, e = math.frexp(a[0])
    x = (math.ldexp(a[0], -e), math.ldexp(a[1], -e))  # in [0.5, 1)
    if x[0] < _SQRT_HALF:
        x = mul_d(x, 2.0)
        e -= 1
    # log(x) = 2 atanh(t) with t = (x-1)/(x+1), |t| <= 3-2*sqrt(2)
    t = div(add_d(x, -1.0), add_d(x, 1.0))
    t2 = mul(t, t)
    term = (1.0, 0.0)
    s = (1.0, 0.0)
    k = 1
    while True:
        term = mul(term, t2)
        k += 2
        c = div_d(term, float(k))
        s = add(s, c)
        if abs(c[0]) < 1e-35:
            break
    return add(mul_d(mul(t, s), 2.0), mul_d(LN2, float(e)))


def atan2_sector(y, x):
    """arg(x + iy) for x >= 0, y >= 0, not both zero."""
    if y == 0.0:
        return (0.0, 0.0)
    if x == 0.0:
        return PI_2
    swap = y > x
    t = div_d_d(min(x, y), max(x, y))
    # two angle halvings keep the series short: atan(t) = 2 atan(t/(1+sqrt(1+t^2)))
    for _ in range(2):
        s = sqrt(add_d(mul(t, t), 1.0))
        t = div(t, add_d(s, 1.0))
    t2 = mul(t, t)
    term = t
    s = t
    k = 1
    sign = -1.0
    while True:
        term = mul(term, t2)
        k += 2
        c = div_d(mul_d(term, sign), float(k))
        s = add(s, c)
        sign = -sign
        if abs(c[0]) < 1e-35:
            break
    r = mul_d(s, 4.0)
    if swap:
        r = sub(PI_2, r)
    return r
