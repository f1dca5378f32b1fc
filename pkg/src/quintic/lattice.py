"""Picard lattice of the plane blown up in four points.

The lattice is Z*h + Z*e1 + ... + Z*e4 with h^2 = 1, ei^2 = -1 and all
mixed products zero.  A divisor class ``a*h - b1*e1 - ... - b4*e4`` is
stored (and serialized) as the coefficient vector ``[a, b1, b2, b3, b4]``,
so ``b_i`` is the multiplicity at the i-th blown-up point.  The canonical
class -3h + e1 + e2 + e3 + e4 is therefore stored as ``[-3, -1, -1, -1, -1]``.

The sublattice orthogonal to the canonical class carries the root system
A4 (20 roots); its Weyl group is S5, generated by the four reflections in
the simple roots e1-e2, e2-e3, e3-e4 and h-e1-e2-e3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "DivClass",
    "H",
    "E",
    "ZERO",
    "K",
    "exceptional",
    "line_through",
    "delta",
    "canonical_class",
    "intersect",
    "simple_roots",
    "enumerate_roots",
    "is_root",
    "reflect",
    "weyl_orbit",
    "is_weyl_stable",
    "WeylElement",
    "weyl_group_elements",
    "minus_one_classes",
]

# Enumeration box for negative classes.  Any class D with D^2 >= -2 and
# |D.K| <= 2 has |a| <= 3 and |b_i| <= 3: Cauchy-Schwarz against -K on the
# rank-one part and negative definiteness on K-perp bound the coefficients.
# Results are asserted to lie strictly inside the box.
_BOX_BOUND = 3


@dataclass(frozen=True, slots=True)
class DivClass:
    """Divisor class a*h - b1*e1 - ... - b4*e4, stored as (a, b1..b4)."""

    coeffs: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.coeffs) != 5:
            raise ValueError("DivClass needs exactly 5 coefficients")

    def __add__(self, other: "DivClass") -> "DivClass":
        return DivClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return DivClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivClass":
        return DivClass(tuple(-x for x in self.coeffs))

    def __mul__(self, n: int) -> "DivClass":
        return DivClass(tuple(n * x for x in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: "DivClass") -> int:
        a = self.coeffs
        b = other.coeffs
        return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3] - a[4] * b[4]

    def square(self) -> int:
        return self.dot(self)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "DivClass":
        data = list(data)
        if len(data) != 5 or not all(isinstance(x, int) for x in data):
            raise ValueError(f"expected 5 integers, got {data!r}")
        return cls(tuple(data))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DivClass{self.coeffs}"


H = DivClass((1, 0, 0, 0, 0))
ZERO = DivClass((0, 0, 0, 0, 0))

# e_i = 0*h - (-1)*e_i, i.e. multiplicity -1 at the i-th point.
E = {i: DivClass(tuple(-1 if j == i else 0 for j in range(5))) for i in (1, 2, 3, 4)}

K = DivClass((-3, -1, -1, -1, -1))


def canonical_class() -> DivClass:
    """The canonical class -3h + e1 + e2 + e3 + e4."""
    return K


def exceptional(i: int) -> DivClass:
    """The class e_i of the exceptional divisor over the i-th point."""
    return E[i]


def line_through(*points: int) -> DivClass:
    """Class of a line with multiplicity one at each listed point.

    ``line_through()`` is h, ``line_through(i)`` is h - e_i (the pencil of
    lines through x_i), ``line_through(i, j)`` is h - e_i - e_j.
    """
    d = H
    for i in points:
        d = d - E[i]
    return d


def delta(*indices: int) -> DivClass:
    """Root classes written Delta in the singular-type table.

    ``delta(i, j)`` is e_i - e_j and ``delta(i, j, l)`` is h - e_i - e_j - e_l.
    """
    if len(indices) == 2:
        i, j = indices
        return E[i] - E[j]
    if len(indices) == 3:
        i, j, l = indices
        return H - E[i] - E[j] - E[l]
    raise ValueError("delta takes two or three point indices")


def intersect(d1: DivClass, d2: DivClass) -> int:
    """Intersection number of two divisor classes."""
    return d1.dot(d2)


def is_root(d: DivClass) -> bool:
    return d.square() == -2 and d.dot(K) == 0


def simple_roots() -> tuple[DivClass, DivClass, DivClass, DivClass]:
    """Simple roots e1-e2, e2-e3, e3-e4, h-e1-e2-e3 of the A4 system."""
    return (delta(1, 2), delta(2, 3), delta(3, 4), delta(1, 2, 3))


def _coefficient_box():
    rng = range(-_BOX_BOUND, _BOX_BOUND + 1)
    for coeffs in itertools.product(rng, repeat=5):
        yield DivClass(coeffs)


def enumerate_roots() -> frozenset[DivClass]:
    """All 20 roots: classes D with D^2 = -2 and D.K = 0."""
    roots = frozenset(d for d in _coefficient_box() if is_root(d))
    assert all(max(abs(c) for c in r.coeffs) < _BOX_BOUND for r in roots)
    return roots


def minus_one_classes() -> frozenset[DivClass]:
    """The 10 classes with D^2 = D.K = -1: the e_i and the h - e_i - e_j."""
    found = frozenset(
        d for d in _coefficient_box() if d.square() == -1 and d.dot(K) == -1
    )
    assert all(max(abs(c) for c in d.coeffs) < _BOX_BOUND for d in found)
    return found


def reflect(root: DivClass, d: DivClass) -> DivClass:
    """Reflection of d in the hyperplane orthogonal to a (-2)-root.

    Since root^2 = -2 the reflection formula collapses to d + (d.root)*root;
    it is an involution, preserves the intersection form and fixes K.
    """
    if not is_root(root):
        raise ValueError(f"{root!r} is not a root")
    return d + d.dot(root) * root


def weyl_orbit(seed: Iterable[DivClass]) -> frozenset[DivClass]:
    """Closure of a set of classes under the four simple reflections."""
    gens = simple_roots()
    orbit = set(seed)
    frontier = list(orbit)
    while frontier:
        d = frontier.pop()
        for r in gens:
            image = d + d.dot(r) * r
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return frozenset(orbit)


def is_weyl_stable(classes: Iterable[DivClass]) -> bool:
    """True iff every simple reflection permutes the given set of classes."""
    s = frozenset(classes)
    for r in simple_roots():
        if frozenset(d + d.dot(r) * r for d in s) != s:
            return False
    return True


_BASIS = (H, E[1], E[2], E[3], E[4])


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Weyl group element as a word in simple-root indices (1..4)."""

    word: tuple[int, ...] = ()

    def apply(self, d: DivClass) -> DivClass:
        gens = simple_roots()
        for i in reversed(self.word):
            r = gens[i - 1]
            d = d + d.dot(r) * r
        return d

    def action_key(self) -> tuple:
        """Images of the basis classes; equal keys mean equal actions."""
        return tuple(self.apply(b).coeffs for b in _BASIS)

    def then(self, other: "WeylElement") -> "WeylElement":
        """Composite acting as self after other."""
        return WeylElement(self.word + other.word)


def weyl_group_elements() -> dict[tuple, WeylElement]:
    """All distinct Weyl actions on Pic, keyed by action on the basis.

    Breadth-first closure of the identity under the simple reflections;
    the result has 120 elements (the symmetric group S5).
    """
    identity = WeylElement()
    seen = {identity.action_key(): identity}
    frontier = [identity]
    while frontier:
        w = frontier.pop()
        for i in (1, 2, 3, 4):
            nxt = WeylElement((i,) + w.word)
            key = nxt.action_key()
            if key not in seen:
                seen[key] = nxt
                frontier.append(nxt)
    return seen
