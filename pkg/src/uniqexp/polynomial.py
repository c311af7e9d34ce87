"""Dense integer polynomials, cyclotomic polynomials and exact root-of-unity tests.

A polynomial c_0 + c_1 z + ... + c_d z^d is stored as the tuple (c_0, ..., c_d)
of Python ints with c_d != 0; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, totient


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def divmod_exact(self, divisor):
        """Long division over the integers.

        Returns (quotient, remainder) when every step divides exactly, else None.
        With a monic divisor this always succeeds.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coefficients)
        d = divisor.coefficients
        dd, lead = len(d) - 1, d[-1]
        if len(rem) <= dd:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                return None
            quot[i - dd] = q
            for j in range(dd + 1):
                rem[i - dd + j] -= q * d[j]
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dd]))

    def to_json(self):
        return list(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for e, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def digit_polynomial(ds) -> IntPolynomial:
    """Indicator polynomial sum_{a in digits} z^a."""
    c = [0] * (ds.max_digit + 1)
    for a in ds.digits:
        c[a] = 1
    return IntPolynomial(tuple(c))


def _divisors(d):
    return [e for e in range(1, d + 1) if d % e == 0]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """Phi_d, from z^d - 1 divided by Phi_e for every proper divisor e of d."""
    if d < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {d}")
    p = IntPolynomial.monomial(d) - IntPolynomial((1,))
    for e in _divisors(d)[:-1]:
        p, r = p.divmod_exact(cyclotomic(e))
        assert r.is_zero()
    return p


def divides(p: IntPolynomial, q: IntPolynomial) -> bool:
    """True iff q = p * r for an integer polynomial r."""
    if p.is_zero():
        raise ZeroDivisionError("the zero polynomial divides nothing")
    res = q.divmod_exact(p)
    return res is not None and res[1].is_zero()


def vanishes_at_order(p: IntPolynomial, d: int) -> bool:
    """True iff p vanishes at the primitive d-th roots of unity (Phi_d | p)."""
    return divides(cyclotomic(d), p)


def admissible_orders(p: IntPolynomial, base: int) -> list[int]:
    """Orders d > 1 with rad(d) | base and phi(d) <= deg p, ascending.

    Roots of unity sitting at tree vertices k/base^j have orders of this form,
    and Phi_d | p forces phi(d) <= deg p.
    """
    deg = p.degree
    primes = sorted(factorint(base))
    found = set()
    frontier = [1]
    # phi never decreases when d is multiplied by a prime, so pruning is exact
    while frontier:
        nxt = []
        for d in frontier:
            for q in primes:
                e = d * q
                if e not in found and int(totient(e)) <= deg:
                    found.add(e)
                    nxt.append(e)
        frontier = nxt
    return sorted(found)
