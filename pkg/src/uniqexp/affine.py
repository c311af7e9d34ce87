"""Freeness of semigroups generated by affine maps x -> n x + a of one slope n.

Words are tuples of 1-based map indices, leftmost letter = outermost map, so
the word (u_1, ..., u_p) composes to n^p x + (a_{u_1} + a_{u_2} n + ... ).
A relation is a pair of distinct words with the same composite.

Freeness is decided through the digit system formed by the offsets: after
shifting the smallest offset to 0 and dividing by the gcd (both conjugations
preserve relations), the maps are free iff the digits have unique expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import isprime

from .collision import decide_unique
from .config import DEFAULT
from .cutset import has_cut_set
from .digitset import DigitSystem, gcd_all, residue_profile
from .errors import DeciderDisagreement, InputError, PreconditionError, ResourceCapError


@dataclass(frozen=True)
class AffineMap:
    slope: int
    offset: int

    def __post_init__(self):
        if self.slope < 2:
            raise InputError(f"slope must be >= 2, got {self.slope}")

    def __call__(self, x):
        return self.slope * x + self.offset

    def after(self, inner):
        """self o inner."""
        return AffineMap(self.slope * inner.slope, self.slope * inner.offset + self.offset)

    def to_json(self):
        return {"slope": self.slope, "offset": self.offset}

    def __str__(self):
        if self.offset == 0:
            return f"{self.slope}x"
        sign = "+" if self.offset > 0 else "-"
        return f"{self.slope}x{sign}{abs(self.offset)}"


@dataclass(frozen=True)
class FunctionSystem:
    maps: tuple[AffineMap, ...]
    seeds: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.maps:
            raise InputError("function system has no maps")
        if len({f.slope for f in self.maps}) != 1:
            raise InputError("all maps must share one slope")
        offsets = [f.offset for f in self.maps]
        if len(set(offsets)) != len(offsets):
            raise InputError("offsets must be pairwise distinct")

    @classmethod
    def of(cls, slope, offsets, seeds=None):
        maps = tuple(AffineMap(slope, a) for a in offsets)
        return cls(maps, None if seeds is None else tuple(seeds))

    @property
    def slope(self):
        return self.maps[0].slope

    @property
    def offsets(self):
        return tuple(f.offset for f in self.maps)

    def to_json(self):
        out = {"slope": self.slope, "offsets": list(self.offsets)}
        if self.seeds is not None:
            out["seeds"] = list(self.seeds)
        return out

    @classmethod
    def from_json(cls, obj):
        return cls.of(obj["slope"], obj["offsets"], obj.get("seeds"))


def compose(fs: FunctionSystem, word) -> AffineMap:
    if not word:
        raise InputError("empty word")
    m = len(fs.maps)
    result = None
    for u in word:
        if not 1 <= u <= m:
            raise InputError(f"letter {u} out of range 1..{m}")
        f = fs.maps[u - 1]
        result = f if result is None else result.after(f)
    return result


@dataclass(frozen=True)
class RelationCertificate:
    left: tuple[int, ...]
    right: tuple[int, ...]
    composite: AffineMap

    def to_json(self):
        return {
            "type": "relation",
            "left": list(self.left),
            "right": list(self.right),
            "composite": self.composite.to_json(),
        }

    @classmethod
    def from_json(cls, obj):
        c = obj["composite"]
        return cls(tuple(obj["left"]), tuple(obj["right"]), AffineMap(c["slope"], c["offset"]))


def verify_relation(fs: FunctionSystem, cert: RelationCertificate) -> bool:
    try:
        left, right = tuple(cert.left), tuple(cert.right)
        if left == right:
            return False
        lhs, rhs = compose(fs, left), compose(fs, right)
        return lhs == rhs and (cert.composite is None or cert.composite == lhs)
    except (InputError, TypeError):
        return False


@dataclass(frozen=True)
class OffsetNormalization:
    shift: int
    scale: int
    core: DigitSystem
    letters: tuple[int, ...]  # letters[i] = map index of core digit i

    def to_json(self):
        return {"shift": self.shift, "scale": self.scale, "core": self.core.to_json()}


def normalize_offsets(fs: FunctionSystem) -> OffsetNormalization:
    offsets = fs.offsets
    shift = min(offsets)
    scale = gcd_all(a - shift for a in offsets)
    order = sorted(range(len(offsets)), key=lambda i: offsets[i])
    core = DigitSystem(fs.slope, tuple((offsets[i] - shift) // scale for i in order))
    return OffsetNormalization(shift, scale, core, tuple(i + 1 for i in order))


@dataclass(frozen=True)
class FreenessDecision:
    free: bool
    normalization: OffsetNormalization
    certificate: RelationCertificate | None = None
    cut_certificate: object = None


def _relation_from_witness(fs, norm, witness):
    letter = dict(zip(norm.core.digits, norm.letters))
    short, long_ = witness.expansion_a, witness.expansion_b
    if len(short) > len(long_):
        short, long_ = long_, short
    left = tuple(letter[d] for d in long_)
    right = tuple(letter[d] for d in short) + (letter[0],) * (len(long_) - len(short))
    cert = RelationCertificate(left, right, compose(fs, left))
    if not verify_relation(fs, cert):
        raise DeciderDisagreement(f"relation built from {witness} does not hold")
    return cert


def decide_free(fs: FunctionSystem, config=DEFAULT) -> FreenessDecision:
    """Decide whether the maps freely generate their semigroup.

    More maps than the slope always admit a relation; the certificate comes
    from the same carry automaton that decides the other cases.
    """
    norm = normalize_offsets(fs)
    m, n = len(fs.maps), fs.slope
    carry = decide_unique(norm.core, config)
    if m > n and carry.unique:
        raise DeciderDisagreement(f"{m} maps of slope {n} reported free")
    if not carry.unique:
        cert = _relation_from_witness(fs, norm, carry.witness)
        return FreenessDecision(False, norm, certificate=cert)
    cut = None
    if m == n:
        decision = has_cut_set(norm.core)
        if not decision.unique:
            raise DeciderDisagreement(f"{norm.core}: carry automaton unique, no cut set")
        cut = decision.certificate
    return FreenessDecision(True, norm, cut_certificate=cut)


def prime_fast_path(fs: FunctionSystem) -> bool:
    """For prime slope p and p maps: free iff normalized offsets are distinct mod p."""
    p = fs.slope
    if not isprime(p):
        raise PreconditionError(f"slope {p} is not prime")
    if len(fs.maps) != p:
        raise PreconditionError(f"need exactly {p} maps, got {len(fs.maps)}")
    return residue_profile(normalize_offsets(fs).core).distinct


def search_relation_words(fs: FunctionSystem, max_words=10**6):
    """Brute-force shortest relation by enumerating words of each length.

    Returns a RelationCertificate, or None if the maps are free (one map, or
    no collision possible). Raises ResourceCapError once more than
    ``max_words`` words would be enumerated at one length.
    """
    m = len(fs.maps)
    if m == 1:
        return None
    length = 1
    while True:
        if m**length > max_words:
            raise ResourceCapError(f"word search reached length {length}", max_words)
        seen = {}
        for word in product(range(1, m + 1), repeat=length):
            f = compose(fs, word)
            if f.offset in seen:
                return RelationCertificate(seen[f.offset], word, f)
            seen[f.offset] = word
        length += 1


@dataclass(frozen=True)
class DensityReport:
    limit_T: int
    orbit_count: int
    density: Fraction
    samples: tuple[tuple[int, Fraction], ...]

    def to_json(self):
        return {
            "limit_T": self.limit_T,
            "orbit_count": self.orbit_count,
            "density": str(self.density),
            "density_float": float(self.density),
            "samples": [{"T": t, "density": str(d)} for t, d in self.samples],
            "note": "finite truncation of the upper density",
        }

    def rows(self):
        return [(t, d, float(d)) for t, d in self.samples]


def orbit_density(fs: FunctionSystem, limit_T: int) -> DensityReport:
    """Fraction of {0, ..., T} reached from the seeds under the maps.

    Offsets and seeds must be nonnegative; then every image is >= its argument,
    so the closure computed inside the window is exact there and also exact
    on every shorter window.
    """
    if not fs.seeds:
        raise PreconditionError("orbit density needs a nonempty seed set")
    if limit_T < 0:
        raise PreconditionError(f"limit_T must be >= 0, got {limit_T}")
    if any(s < 0 for s in fs.seeds) or any(a < 0 for a in fs.offsets):
        raise PreconditionError("seeds and offsets must be nonnegative")
    hit = bytearray(limit_T + 1)
    stack = [s for s in fs.seeds if s <= limit_T]
    for s in stack:
        hit[s] = 1
    while stack:
        x = stack.pop()
        for f in fs.maps:
            y = f(x)
            if y <= limit_T and not hit[y]:
                hit[y] = 1
                stack.append(y)
    checkpoints = []
    t = fs.slope - 1
    while t < limit_T:
        checkpoints.append(t)
        t = t * fs.slope + fs.slope - 1
    checkpoints.append(limit_T)
    samples, count, prev = [], 0, 0
    for t in checkpoints:
        count += sum(hit[prev : t + 1])
        prev = t + 1
        samples.append((t, Fraction(count, t + 1)))
    return DensityReport(limit_T, count, Fraction(count, limit_T + 1), tuple(samples))
