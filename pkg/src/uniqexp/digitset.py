"""Digit systems: a base n >= 2 together with a finite set of nonnegative digits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import (
    BaseTooSmallError,
    DuplicateDigitError,
    EmptyDigitsError,
    InputError,
    NegativeDigitError,
)


def gcd_all(values):
    """gcd of an iterable; the gcd of nothing (or of only zeros) is 1."""
    g = reduce(gcd, (abs(v) for v in values), 0)
    return g or 1


@dataclass(frozen=True)
class DigitSystem:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        _check(self.base, self.digits)
        if any(a >= b for a, b in zip(self.digits, self.digits[1:])):
            raise InputError("digits must be strictly increasing")

    @property
    def size(self):
        return len(self.digits)

    @property
    def max_digit(self):
        return self.digits[-1]

    def has_zero(self):
        return self.digits[0] == 0

    def to_json(self):
        return {"base": self.base, "digits": list(self.digits)}

    @classmethod
    def from_json(cls, obj):
        return validate(obj["base"], obj["digits"])

    def __str__(self):
        return f"{{{self.base}, [{', '.join(map(str, self.digits))}]}}"


def _check(base, digits):
    if isinstance(base, bool) or not isinstance(base, int):
        raise InputError(f"base must be an integer, got {base!r}")
    if base < 2:
        raise BaseTooSmallError(f"base must be >= 2, got {base}")
    if not digits:
        raise EmptyDigitsError("digit list is empty")
    for a in digits:
        if isinstance(a, bool) or not isinstance(a, int):
            raise InputError(f"digits must be integers, got {a!r}")
        if a < 0:
            raise NegativeDigitError(f"negative digit {a}")


def validate(base, digits) -> DigitSystem:
    """Check raw input and return a DigitSystem with sorted digits."""
    digits = list(digits)
    _check(base, digits)
    dup = [a for a, c in Counter(digits).items() if c > 1]
    if dup:
        raise DuplicateDigitError(f"duplicate digit {min(dup)}")
    return DigitSystem(base, tuple(sorted(digits)))


@dataclass(frozen=True)
class NormalizationRecord:
    shift: int
    scale: int
    core: DigitSystem

    def to_json(self):
        return {"shift": self.shift, "scale": self.scale, "core": self.core.to_json()}


def normalize(ds: DigitSystem) -> NormalizationRecord:
    """Shift the smallest digit to 0 and divide out the gcd of the rest.

    Digit ``a`` maps to ``(a - shift) // scale``.
    """
    shift = ds.digits[0]
    shifted = [a - shift for a in ds.digits]
    scale = gcd_all(shifted[1:])
    core = DigitSystem(ds.base, tuple(a // scale for a in shifted))
    return NormalizationRecord(shift, scale, core)


@dataclass(frozen=True)
class ResidueProfile:
    residues: tuple[int, ...]
    distinct: bool
    irreducible: bool


def is_irreducible(ds: DigitSystem):
    a1 = ds.digits[0]
    return gcd_all([a - a1 for a in ds.digits[1:]] + [ds.base]) == 1


def residue_profile(ds: DigitSystem) -> ResidueProfile:
    residues = tuple(a % ds.base for a in ds.digits)
    return ResidueProfile(
        residues=residues,
        distinct=len(set(residues)) == len(residues),
        irreducible=is_irreducible(ds),
    )


def composite_family(n1: int, n2: int) -> DigitSystem:
    """Digits {u*n1*n + v : 0 <= u < n2, 0 <= v < n1} in base n = n1*n2.

    Irreducible, not a complete residue system, yet with unique expansions.
    """
    if n1 < 2 or n2 < 2:
        raise BaseTooSmallError(f"both factors must be >= 2, got {n1}, {n2}")
    n = n1 * n2
    digits = sorted(u * n1 * n + v for u in range(n2) for v in range(n1))
    return DigitSystem(n, tuple(digits))
