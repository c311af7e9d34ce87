"""Exact uniqueness oracle: a carry automaton plus direct expansion counting.

Two digit strings alpha, beta (least significant first, padded with 0 to a
common length) have the same value iff the carries

    s_0 = 0,   s_{i+1} = (s_i + alpha_i - beta_i) / n

are all integers and the last one is 0. Every carry satisfies
|s| <= max_digit / (n - 1), so the search space is finite. A shortest pair of
distinct equal-value strings differs in position 0 (a common lowest digit
could be stripped), hence the first transition is required to use a != b.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .config import DEFAULT
from .digitset import DigitSystem
from .errors import PreconditionError, ResourceCapError


def evaluate(expansion, base):
    """Value of a least-significant-first digit tuple (Horner)."""
    acc = 0
    for d in reversed(expansion):
        acc = acc * base + d
    return acc


def _strip(expansion):
    e = list(expansion)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


@dataclass(frozen=True)
class CollisionWitness:
    number: int
    expansion_a: tuple[int, ...]
    expansion_b: tuple[int, ...]

    def to_json(self):
        return {
            "type": "collision",
            "number": self.number,
            "expansions": [list(self.expansion_a), list(self.expansion_b)],
        }

    @classmethod
    def from_json(cls, obj):
        if obj.get("type") != "collision":
            raise ValueError("not a collision witness")
        a, b = obj["expansions"]
        return cls(int(obj["number"]), tuple(a), tuple(b))


@dataclass(frozen=True)
class UniquenessDecision:
    unique: bool
    witness: CollisionWitness | None = None
    states_explored: int = 0


def decide_unique(ds: DigitSystem, config=DEFAULT) -> UniquenessDecision:
    """Breadth-first search of the carry automaton for a return to carry 0.

    The witness found is of minimal padded length; among those, the first in
    order of (carry discovery, lexicographic digit pair).
    """
    if not ds.has_zero():
        raise PreconditionError("smallest digit must be 0")
    n, digits = ds.base, ds.digits
    bound = ds.max_digit / (n - 1)
    # digit pairs grouped by a - b mod n, each group in lexicographic order
    by_residue = {}
    for a in digits:
        for b in digits:
            by_residue.setdefault((a - b) % n, []).append((a, b))

    parent = {}
    queue = deque()
    for a, b in by_residue.get(0, []):
        if a == b:
            continue
        s = (a - b) // n
        if s not in parent:
            parent[s] = (None, a, b)
            queue.append(s)

    explored = 0
    while queue:
        s = queue.popleft()
        explored += 1
        if explored > config.state_cap:
            raise ResourceCapError("carry automaton exceeded its state budget", config.state_cap)
        for a, b in by_residue.get((-s) % n, []):
            t = (s + a - b) // n
            assert abs(t) <= bound
            if t == 0:
                return UniquenessDecision(False, _witness(ds, _trace(parent, s) + [(a, b)]), explored)
            if t not in parent:
                parent[t] = (s, a, b)
                queue.append(t)
    return UniquenessDecision(True, None, explored)


def _trace(parent, s):
    pairs = []
    while s is not None:
        prev, a, b = parent[s]
        pairs.append((a, b))
        s = prev
    return pairs[::-1]


def _witness(ds, pairs):
    alpha = _strip(a for a, _ in pairs)
    beta = _strip(b for _, b in pairs)
    number = evaluate(alpha, ds.base)
    # shorter expansion first; equal lengths ordered lexicographically
    first, second = sorted((alpha, beta), key=lambda e: (len(e), e))
    return CollisionWitness(number, first, second)


def verify_collision_witness(ds: DigitSystem, w: CollisionWitness) -> bool:
    """Both tuples are valid expansions of the stated number and differ."""
    try:
        digits = set(ds.digits)
        for e in (w.expansion_a, w.expansion_b):
            if not e or e[-1] == 0 or any(d not in digits for d in e):
                return False
            if evaluate(e, ds.base) != w.number:
                return False
        return tuple(w.expansion_a) != tuple(w.expansion_b)
    except TypeError:
        return False


def count_expansions(ds: DigitSystem, k: int) -> int:
    """Number b(k) of expansions of k (b(0) = 1 for the empty expansion).

    Uses b(k) = sum of b((k - a) / n) over digits a = k mod n, evaluated level
    by level: the arguments at each level form a small window, so huge k cost
    only O(log k) levels.
    """
    n, digits = ds.base, ds.digits
    levels = [{k}]
    while True:
        nxt = {(x - a) // n for x in levels[-1] if x > 0 for a in digits if (x - a) % n == 0 and x >= a}
        if not nxt:
            break
        levels.append(nxt)
    values = {}
    for level in reversed(levels):
        for x in level:
            if x < 0:
                values[x] = 0
            elif x == 0:
                values[x] = 1
            else:
                values[x] = sum(values[(x - a) // n] for a in digits if (x - a) % n == 0 and x >= a)
    return values[k]


def decide_weak_unique(ds: DigitSystem, config=DEFAULT) -> UniquenessDecision:
    """Weak uniqueness of an all-positive digit set via its shifted copy.

    Two equal-length strings over A have equal value iff the strings over
    B = {0, a_2 - a_1, ...} do, so the decision is that of B.
    """
    if ds.has_zero():
        raise PreconditionError("digit 0 present; use decide_unique")
    a1 = ds.digits[0]
    shifted = DigitSystem(ds.base, tuple(a - a1 for a in ds.digits))
    return decide_unique(shifted, config)
