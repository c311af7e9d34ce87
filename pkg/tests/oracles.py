"""Brute-force reference implementations, independent of the package code paths."""

from itertools import product

from sympy import primefactors, totient


def strings_by_value(base, digits, length):
    """Map value -> list of digit strings (LSF, padded to ``length``)."""
    out = {}
    for s in product(digits, repeat=length):
        v = sum(d * base**i for i, d in enumerate(s))
        out.setdefault(v, []).append(s)
    return out


def strip(s):
    s = list(s)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


def brute_collision(base, digits, length):
    """Some number with two distinct expansions of length <= ``length`` (needs 0 in digits)."""
    for v, strings in sorted(strings_by_value(base, digits, length).items()):
        distinct = {strip(s) for s in strings}
        if len(distinct) > 1:
            return v
    return None


def brute_count(base, digits, k):
    """Number of expansions of k (with the empty tuple for k = 0)."""
    if k == 0:
        return 1
    count = 0
    length = 1
    while base ** (length - 1) <= k:
        for s in product(digits, repeat=length):
            if s[-1] != 0 and sum(d * base**i for i, d in enumerate(s)) == k:
                count += 1
        length += 1
    return count


def brute_admissible(degree, base):
    rad = set(primefactors(base))
    bound = 2 * degree * degree + 2
    return [
        d for d in range(2, bound + 1)
        if set(primefactors(d)) <= rad and totient(d) <= degree
    ]


def brute_closure(maps, seeds, limit):
    """Naive fixpoint iteration of the orbit inside [0, limit]."""
    orbit = {s for s in seeds if s <= limit}
    while True:
        new = {a * x + b for x in orbit for a, b in maps} - orbit
        new = {y for y in new if 0 <= y <= limit}
        if not new:
            return orbit
        orbit |= new
