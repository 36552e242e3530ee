"""Cylinder functions of orders 0 and 1 on the closed first-quadrant sector.

The exported quantities are the Bessel functions J0, Y0, J1, Y1 for
moderate arguments and the scaled combinations

    scaled_h0(z) = exp(-iz) * (J0(z) + i Y0(z))
    scaled_h1(z) = exp(-iz) * (J1(z) + i Y1(z))

which stay O(|z|^-1/2) throughout the sector 0 <= arg z <= pi/2 and are
therefore safe for |z| (and Im z) up to 1e12 and beyond, where the
unscaled factors would overflow and underflow.
"""

from ._backend import kernels as _k
from .errors import DomainError

#: crossover between the power-series and large-argument evaluations
SERIES_RADIUS = _k.SERIES_RADIUS


def bessel_j0y0(z):
    """(J0(z), Y0(z)) for 0 < |z| <= SERIES_RADIUS in the sector.

    Summed from the defining power series with the principal branch of
    the logarithm; raises DomainError at z = 0 (Y0's log singularity)
    and outside the series radius or the sector.
    """
    z = complex(z)
    if abs(z) > SERIES_RADIUS:
        raise DomainError(
            f"|z| = {abs(z):g} exceeds the series radius {SERIES_RADIUS:g}"
        )
    return _k.bessel_j0y0(z)


def bessel_j1y1(z):
    """(J1(z), Y1(z)); same domain as bessel_j0y0."""
    z = complex(z)
    if abs(z) > SERIES_RADIUS:
        raise DomainError(
            f"|z| = {abs(z):g} exceeds the series radius {SERIES_RADIUS:g}"
        )
    return _k.bessel_j1y1(z)


def scaled_h0(z):
    """exp(-iz) H0(z) for any nonzero z in the closed sector."""
    return _k.scaled_h0(complex(z))


def scaled_h1(z):
    """exp(-iz) H1(z) for any nonzero z in the closed sector."""
    return _k.scaled_h1(complex(z))


def s_prime(z):
    """d/dz of scaled_h0, namely -scaled_h1(z) - i*scaled_h0(z)."""
    return _k.s_prime(complex(z))
