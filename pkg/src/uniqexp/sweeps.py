"""Exhaustive sweeps comparing the cut-set and carry-automaton deciders."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .collision import decide_unique
from .cutset import has_cut_set
from .digitset import DigitSystem


def systems_with_zero(base, max_digit, size=None):
    """All digit systems {0 = a_1 < ... < a_size <= max_digit} (size defaults to base)."""
    size = base if size is None else size
    for rest in combinations(range(1, max_digit + 1), size - 1):
        yield DigitSystem(base, (0,) + rest)


@dataclass
class SweepResult:
    checked: int = 0
    unique: int = 0
    disagreements: list = field(default_factory=list)

    def merge(self, other):
        self.checked += other.checked
        self.unique += other.unique
        self.disagreements.extend(other.disagreements)
        return self

    def to_json(self):
        return {
            "checked": self.checked,
            "unique": self.unique,
            "disagreements": [ds.to_json() for ds in self.disagreements],
        }


def _sweep_one_base(args):
    base, max_digit = args
    res = SweepResult()
    for ds in systems_with_zero(base, max_digit):
        cut = has_cut_set(ds).unique
        carry = decide_unique(ds).unique
        res.checked += 1
        res.unique += carry
        if cut != carry:
            res.disagreements.append(ds)
    return res


def agreement_sweep(bases, max_digit, jobs=1) -> SweepResult:
    """Run both deciders on every n-digit system with digits <= max_digit."""
    work = [(b, max_digit) for b in bases]
    total = SweepResult()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(_sweep_one_base, work):
                total.merge(r)
    else:
        for w in work:
            total.merge(_sweep_one_base(w))
    return total
