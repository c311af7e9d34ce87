"""Mask roots on the n-ary tree and cut-set certificates of uniqueness.

The tree's level-j vertices are the rationals k/n^j with 0 < k < n^j and
n not dividing k. A path is written by its digits d_0, d_1, ... (d_0 != 0);
its level-j vertex has numerator d_0 + d_1 n + ... + d_{j-1} n^{j-1}, and the
ancestor of (k, j) at level i is (k mod n^i, i).

A set of vertices is a cut set when every infinite path meets it exactly
once. Expansions in the digit system are unique iff some cut set consists of
roots of the digit polynomial (evaluated at e^{-2 pi i k/n^j}).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .polynomial import admissible_orders, digit_polynomial, vanishes_at_order


@dataclass(frozen=True, order=True)
class TreeVertex:
    level: int
    numerator: int

    def order(self, base):
        """Multiplicative order of the root of unity e^{-2 pi i k/base^level}."""
        q = base**self.level
        return q // gcd(self.numerator, q)

    def is_valid(self, base):
        return (
            self.level >= 1
            and 0 < self.numerator < base**self.level
            and self.numerator % base != 0
        )

    def ancestor(self, base, level):
        return TreeVertex(level, self.numerator % base**level)

    def to_json(self):
        return {"num": self.numerator, "level": self.level}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["level"]), int(obj["num"]))


@dataclass(frozen=True)
class RootSet:
    vertices: tuple[TreeVertex, ...]
    orders: tuple[int, ...]
    max_level: int

    def __contains__(self, v):
        return v in self._lookup

    @property
    def _lookup(self):
        # frozen dataclass: cache on first use
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.vertices)
            object.__setattr__(self, "_set", s)
            return s


@dataclass(frozen=True)
class CutCertificate:
    vertices: tuple[TreeVertex, ...]
    depth: int

    def to_json(self):
        return {
            "type": "cutset",
            "depth": self.depth,
            "vertices": [v.to_json() for v in self.vertices],
        }

    @classmethod
    def from_json(cls, obj):
        if obj.get("type") != "cutset":
            raise ValueError("not a cutset certificate")
        return cls(tuple(TreeVertex.from_json(v) for v in obj["vertices"]), int(obj["depth"]))


@dataclass(frozen=True)
class UncutPath:
    digits: tuple[int, ...]

    def vertices(self, base):
        out, k = [], 0
        for j, d in enumerate(self.digits):
            k += d * base**j
            out.append(TreeVertex(j + 1, k))
        return out

    def to_json(self):
        return {"type": "uncut_path", "digits": list(self.digits)}

    @classmethod
    def from_json(cls, obj):
        if obj.get("type") != "uncut_path":
            raise ValueError("not an uncut path")
        return cls(tuple(int(d) for d in obj["digits"]))


@dataclass(frozen=True)
class CutDecision:
    unique: bool
    roots: RootSet
    certificate: CutCertificate | None = None
    uncut_path: UncutPath | None = None


def _vertices_of_order(base, d):
    j, q = 1, base
    while q % d:
        j += 1
        q *= base
    step = q // d
    return [TreeVertex(j, m * step) for m in range(1, d) if gcd(m, d) == 1]


def mask_tree_roots(ds) -> RootSet:
    """All tree vertices at which the digit polynomial vanishes."""
    if not ds.has_zero():
        raise PreconditionError("smallest digit must be 0")
    p = digit_polynomial(ds)
    orders, vertices = [], []
    for d in admissible_orders(p, ds.base):
        if vanishes_at_order(p, d):
            orders.append(d)
            vertices.extend(_vertices_of_order(ds.base, d))
    vertices.sort()
    max_level = max((v.level for v in vertices), default=0)
    return RootSet(tuple(vertices), tuple(orders), max_level)


def has_cut_set(ds) -> CutDecision:
    """Search for a cut set of mask roots; return it or a root-avoiding path.

    Paths are explored depth-first with digits in increasing order, stopping
    at the first root met. Roots live at levels <= J = max root level, so a
    path that reaches depth J without meeting one avoids roots forever.
    """
    if not ds.has_zero():
        raise PreconditionError("smallest digit must be 0")
    if ds.size != ds.base:
        raise PreconditionError(
            f"cut-set criterion needs exactly base={ds.base} digits, got {ds.size}"
        )
    n = ds.base
    roots = mask_tree_roots(ds)
    if not roots.vertices:
        return CutDecision(False, roots, uncut_path=UncutPath((1,)))

    depth = roots.max_level
    hits = []

    def walk(k, j, path):
        # (k, j) is the current vertex, already known not to be a root
        if j == depth:
            return path
        for d in range(n):
            child = TreeVertex(j + 1, k + d * n**j)
            if child in roots:
                hits.append(child)
                continue
            found = walk(child.numerator, j + 1, path + (d,))
            if found is not None:
                return found
        return None

    for d0 in range(1, n):
        v = TreeVertex(1, d0)
        if v in roots:
            hits.append(v)
            continue
        found = walk(d0, 1, (d0,))
        if found is not None:
            return CutDecision(False, roots, uncut_path=UncutPath(found))
    cert = CutCertificate(tuple(sorted(hits)), max(v.level for v in hits))
    return CutDecision(True, roots, certificate=cert)


def _is_root(ds, poly, v):
    return v.is_valid(ds.base) and vanishes_at_order(poly, v.order(ds.base))


def verify_cut_certificate(ds, cert: CutCertificate) -> bool:
    """Independent check: roots, antichain, and coverage of every path."""
    try:
        n = ds.base
        verts = list(cert.vertices)
        depth = int(cert.depth)
        if not verts or depth < 1 or len(set(verts)) != len(verts):
            return False
        if any(v.level > depth for v in verts):
            return False
        poly = digit_polynomial(ds)
        if not all(_is_root(ds, poly, v) for v in verts):
            return False
        members = set(verts)
        for v in verts:
            for i in range(1, v.level):
                if v.ancestor(n, i) in members:
                    return False
        # every path of length depth must meet the set
        stack = [TreeVertex(1, d) for d in range(1, n)]
        while stack:
            v = stack.pop()
            if v in members:
                continue
            if v.level == depth:
                return False
            stack.extend(
                TreeVertex(v.level + 1, v.numerator + d * n**v.level) for d in range(n)
            )
        return True
    except (TypeError, ValueError, AttributeError):
        return False


def verify_uncut_path(ds, path: UncutPath) -> bool:
    """Check that the path is long enough and avoids mask roots throughout."""
    n = ds.base
    if not path.digits or path.digits[0] == 0 or any(not 0 <= d < n for d in path.digits):
        return False
    roots = mask_tree_roots(ds)
    if len(path.digits) < max(roots.max_level, 1):
        return False
    poly = digit_polynomial(ds)
    return not any(_is_root(ds, poly, v) for v in path.vertices(n))
