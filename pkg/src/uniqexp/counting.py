"""Subdivision, expansion counts b(k), cascade step functions, Fourier probe.

The subdivision operator built from the indicator sequence of the digits,

    (S g)_k = sum_i c_{k - n i} g_i,

maps delta to the counts of expansions: (S^j delta)_k = b(k) for k < n^j.
The same iterates give the cascade approximations f_j of the refinable
measure on [0, 1]: f_j has height b(k) on [k n^-j, (k+1) n^-j).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .collision import decide_unique
from .config import DEFAULT
from .cutset import has_cut_set
from .errors import DeciderDisagreement, PreconditionError, ResourceCapError

ABSOLUTELY_CONTINUOUS = "absolutely_continuous"
PURELY_SINGULAR = "purely_singular"


@dataclass(frozen=True)
class IndicatorSequence:
    base: int
    taps: tuple[int, ...]  # exponents i with c_i = 1

    @classmethod
    def of(cls, ds):
        return cls(ds.base, ds.digits)

    @property
    def support(self):
        return (0, self.taps[-1])

    def total(self):
        return len(self.taps)


def _dtype_for(bound):
    return np.int64 if bound < 2**62 else object


def subdivision_step(c: IndicatorSequence, g, limit=None) -> list[int]:
    """Apply S once to a sequence supported on [0, len(g)).

    With ``limit`` the result is cut to indices < limit.
    """
    g = list(g)
    if not g:
        return []
    n = c.base
    length = n * (len(g) - 1) + c.taps[-1] + 1
    dtype = _dtype_for(max(abs(x) for x in g) * len(c.taps))
    src = np.array(g, dtype=dtype)
    out = np.zeros(length, dtype=dtype)
    for a in c.taps:
        out[a : a + n * len(g) : n] += src
    if limit is not None:
        out = out[:limit]
    return [int(x) for x in out]


def _check_cap(cells, config):
    if cells > config.cell_cap:
        raise ResourceCapError(f"requested {cells} cells", config.cell_cap)


@dataclass(frozen=True)
class BSequence:
    base: int
    level: int
    values: tuple[int, ...]

    def rows(self):
        return [(k, v) for k, v in enumerate(self.values)]


def b_sequence(ds, j: int, config=DEFAULT) -> BSequence:
    """b(0), ..., b(n^j - 1) by j subdivision steps from delta."""
    if not ds.has_zero():
        raise PreconditionError("smallest digit must be 0")
    if j < 0:
        raise PreconditionError(f"level must be >= 0, got {j}")
    n = ds.base
    _check_cap(n**j, config)
    c = IndicatorSequence.of(ds)
    g = [1]
    for step in range(1, j + 1):
        # entries below n^step only depend on entries below n^(step-1)
        g = subdivision_step(c, g, limit=n**step)
    g = g + [0] * (n**j - len(g))
    return BSequence(n, j, tuple(g))


def subdivision_power(ds, j: int, config=DEFAULT) -> list[int]:
    """Untruncated S^j delta: entry k counts digit strings of length j with value k."""
    c = IndicatorSequence.of(ds)
    length = ds.max_digit * (ds.base**j - 1) // (ds.base - 1) + 1
    _check_cap(length, config)
    g = [1]
    for _ in range(j):
        g = subdivision_step(c, g)
    return g


@dataclass(frozen=True)
class CascadeFunction:
    base: int
    level: int
    heights: tuple[int, ...]

    def left_endpoints(self):
        q = self.base**self.level
        return [Fraction(k, q) for k in range(len(self.heights))]

    def rows(self):
        return list(zip(self.left_endpoints(), self.heights))


def cascade(ds, j: int, config=DEFAULT) -> CascadeFunction:
    """Step function f_j = T^j chi_[0,1] restricted to [0, 1]."""
    bs = b_sequence(ds, j, config)
    return CascadeFunction(ds.base, j, bs.values)


@dataclass(frozen=True)
class FourierEstimate:
    frequency: int
    depth: int
    value: complex

    def row(self):
        return (self.frequency, self.value.real, self.value.imag, abs(self.value))


def mask(ds, numerator, denominator):
    """Normalized mask (1/m) sum_a e^{-2 pi i a t} at t = numerator/denominator.

    Phases are reduced mod 1 in exact arithmetic before going to floats.
    """
    acc = 0j
    for a in ds.digits:
        r = (a * numerator) % denominator
        acc += cmath.exp(-2j * cmath.pi * (r / denominator))
    return acc / ds.size


def fourier_probe(ds, m: int, depth: int) -> FourierEstimate:
    """Approximate the Fourier transform of the refinable measure at integer m.

    Product of the mask at m n^-1, ..., m n^-depth; the neglected tail factor
    tends to 1 as depth grows.
    """
    if depth < 1:
        raise PreconditionError(f"depth must be >= 1, got {depth}")
    value = 1 + 0j
    q = 1
    for _ in range(depth):
        q *= ds.base
        value *= mask(ds, m, q)
    return FourierEstimate(m, depth, value)


def fourier_sweep(ds, m_values, depth):
    return [fourier_probe(ds, m, depth) for m in m_values]


def classify_refinable(ds) -> str:
    """Absolutely continuous iff expansions are unique; both deciders must agree."""
    if ds.size != ds.base:
        raise PreconditionError(f"need exactly base={ds.base} digits, got {ds.size}")
    cut = has_cut_set(ds)
    carry = decide_unique(ds)
    if cut.unique != carry.unique:
        raise DeciderDisagreement(
            f"{ds}: cut-set says unique={cut.unique}, carry automaton says {carry.unique}"
        )
    return ABSOLUTELY_CONTINUOUS if cut.unique else PURELY_SINGULAR
