"""Deterministic angle sampling for the benchmark tables.

Two populations on (0, pi/2): a uniform one, and an endpoint-clustered
one obtained by mapping uniform t in (0, 1) through exp(-scale * t),
which probes the singular endpoint theta = 0 down to exp(-scale).
A splitmix64 stream drives everything, so equal seeds give bit-identical
point sets on every platform.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TO_UNIT = 2.0 ** -53


def splitmix64(state):
    """One splitmix64 step: returns (new_state, 64-bit output)."""
    state = (state + _GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return state, z ^ (z >> 31)


def unit_doubles(seed, count):
    """count doubles strictly inside (0, 1) from the splitmix64 stream."""
    state = seed & _MASK64
    out = np.empty(count)
    for i in range(count):
        state, z = splitmix64(state)
        out[i] = ((z >> 11) + 0.5) * _TO_UNIT
    return out


@dataclass(frozen=True)
class SamplePlan:
    """Specification of one deterministic theta sample."""

    seed: int = 1
    n_uniform: int = 500
    n_endpoint: int = 500
    endpoint_scale: float = 36.0

    def __post_init__(self):
        if self.n_uniform < 0 or self.n_endpoint < 0:
            raise DomainError("sample counts must be nonnegative")
        if not self.endpoint_scale > 0.0:
            raise DomainError("endpoint_scale must be positive")


def theta_samples(plan):
    """The plan's angles: n_uniform uniform points on (0, pi/2) followed
    by n_endpoint points exp(-endpoint_scale * t), t uniform on (0, 1)."""
    u = unit_doubles(plan.seed, plan.n_uniform + plan.n_endpoint)
    thetas = np.empty(plan.n_uniform + plan.n_endpoint)
    thetas[: plan.n_uniform] = u[: plan.n_uniform] * (math.pi / 2.0)
    thetas[plan.n_uniform:] = np.exp(-plan.endpoint_scale * u[plan.n_uniform:])
    return thetas
