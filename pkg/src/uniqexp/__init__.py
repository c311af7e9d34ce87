"""Uniqueness of non-standard n-ary expansions and freeness of affine semigroups.

Every decision comes with a certificate that can be re-checked independently:
cut sets of mask roots on the n-ary tree, two-expansion collision witnesses,
and semigroup relations between compositions of affine maps.
"""

__version__ = "0.1.0"

from .errors import (
    BaseTooSmallError,
    DeciderDisagreement,
    DuplicateDigitError,
    EmptyDigitsError,
    InputError,
    NegativeDigitError,
    PreconditionError,
    ResourceCapError,
)
from .digitset import DigitSystem, NormalizationRecord, ResidueProfile
from .digitset import composite_family, normalize, residue_profile, validate
from .polynomial import IntPolynomial, cyclotomic, digit_polynomial
from .cutset import has_cut_set, mask_tree_roots, verify_cut_certificate
from .collision import count_expansions, decide_unique, decide_weak_unique
from .counting import b_sequence, cascade, classify_refinable, fourier_probe
from .affine import AffineMap, FunctionSystem, decide_free, prime_fast_path, verify_relation

__all__ = [
    "__version__",
    "AffineMap",
    "BaseTooSmallError",
    "DeciderDisagreement",
    "DigitSystem",
    "DuplicateDigitError",
    "EmptyDigitsError",
    "FunctionSystem",
    "InputError",
    "IntPolynomial",
    "NegativeDigitError",
    "NormalizationRecord",
    "PreconditionError",
    "ResidueProfile",
    "ResourceCapError",
    "b_sequence",
    "cascade",
    "classify_refinable",
    "composite_family",
    "count_expansions",
    "cyclotomic",
    "decide_free",
    "decide_unique",
    "decide_weak_unique",
    "digit_polynomial",
    "fourier_probe",
    "has_cut_set",
    "mask_tree_roots",
    "normalize",
    "prime_fast_path",
    "residue_profile",
    "validate",
    "verify_cut_certificate",
    "verify_relation",
]
