"""Riemann-Roch and the Euler pairing on numerical K-classes.

A numerical class is a triple (rank, c1, ch2) where c1 lives in the Picard
lattice and ch2 is a half-integer multiple of the point class.  With the
Todd class 1 - K/2 + pt (forced by chi(O) = 1 and K^2 = 5) the pairing

    chi(x, y) = integral of ch(x)^dual . ch(y) . Td

is an exact integer for all classes handled here.  Hilbert polynomials are
taken with respect to -K; all arithmetic is integer or Fraction, never
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import E, H, K, ZERO, DivClass

__all__ = [
    "KClass",
    "HilbPoly",
    "line_bundle_class",
    "structure_class",
    "point_class",
    "f_tilde_class",
    "p_class",
    "chi_line",
    "euler_pair",
    "twist",
    "hilbert_poly",
    "verify_chi_identities",
    "poly_gt",
    "ChernSummary",
    "normal_bundle_cherns",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class KClass:
    """Numerical K-theory class (rank, c1, ch2) with ch2 in (1/2)Z.

    The group is generated by line-bundle classes (1, D, D^2/2) and the
    point class (0, 0, 1), so 2*ch2 and c1^2 always have the same parity;
    the constructor rejects triples outside that lattice.
    """

    rank: int
    c1: DivClass
    ch2: Fraction

    def __post_init__(self):
        ch2 = Fraction(self.ch2)
        if ch2.denominator not in (1, 2):
            raise ValueError(f"ch2 must be a half-integer, got {ch2}")
        if (2 * ch2 - self.c1.square()) % 2 != 0:
            raise ValueError(
                f"({self.rank}, {self.c1!r}, {ch2}) is not a class of an object"
            )
        object.__setattr__(self, "ch2", ch2)

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.rank + other.rank, self.c1 + other.c1, self.ch2 + other.ch2)

    def __sub__(self, other: "KClass") -> "KClass":
        return KClass(self.rank - other.rank, self.c1 - other.c1, self.ch2 - other.ch2)

    def __neg__(self) -> "KClass":
        return KClass(-self.rank, -self.c1, -self.ch2)

    def __mul__(self, n: int) -> "KClass":
        return KClass(n * self.rank, n * self.c1, n * self.ch2)

    __rmul__ = __mul__

    def int_vector(self) -> tuple[int, ...]:
        """(rank, c1 coefficients, 2*ch2) as a 7-tuple of integers."""
        doubled = 2 * self.ch2
        assert doubled.denominator == 1
        return (self.rank, *self.c1.coeffs, doubled.numerator)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "c1": self.c1.to_json(),
            "ch2": [self.ch2.numerator, self.ch2.denominator],
        }

    @classmethod
    def from_json(cls, data: dict) -> "KClass":
        num, den = data["ch2"]
        return cls(data["rank"], DivClass.from_json(data["c1"]), Fraction(num, den))


def line_bundle_class(d: DivClass) -> KClass:
    """Class of O(D): (1, D, D^2/2)."""
    return KClass(1, d, Fraction(d.square(), 2))


def structure_class() -> KClass:
    return line_bundle_class(ZERO)


def point_class() -> KClass:
    """Class of the structure sheaf of a point."""
    return KClass(0, ZERO, Fraction(1))


def f_tilde_class() -> KClass:
    """Class of the rank-2 extension of O(h) by O(-K-h): (2, -K, 1/2)."""
    return line_bundle_class(-K - H) + line_bundle_class(H)


def p_class() -> KClass:
    """Class of the rank-5 bundle O(h) + sum of O(e_i-K-h): (5, -3K, 5/2)."""
    cls = line_bundle_class(H)
    for i in (1, 2, 3, 4):
        cls = cls + line_bundle_class(E[i] - K - H)
    return cls


def chi_line(d: DivClass) -> int:
    """Euler characteristic of O(D): (D^2 - D.K)/2 + 1."""
    num = d.square() - d.dot(K)
    if num % 2 != 0:
        raise ArithmeticError(f"parity violation in chi({d!r})")
    return num // 2 + 1


def euler_pair(x: KClass, y: KClass) -> int:
    """Euler pairing chi(x, y) by Hirzebruch-Riemann-Roch.

    Expanding ch(x)^dual . ch(y) . (1 - K/2 + pt) in degrees gives

        rk(x) ch2(y) + rk(y) ch2(x) - c1(x).c1(y)
        - (rk(x) c1(y) - rk(y) c1(x)).K/2 + rk(x) rk(y).
    """
    deg2 = x.rank * y.ch2 + y.rank * x.ch2 - x.c1.dot(y.c1)
    deg1 = (x.rank * y.c1 - y.rank * x.c1).dot(K)
    total = deg2 - Fraction(deg1, 2) + x.rank * y.rank
    assert total.denominator == 1
    return total.numerator


def twist(x: KClass, d: DivClass) -> KClass:
    """Tensor by O(D): multiply Chern characters."""
    return KClass(
        x.rank,
        x.c1 + x.rank * d,
        x.ch2 + x.c1.dot(d) + Fraction(x.rank * d.square(), 2),
    )


@dataclass(frozen=True)
class HilbPoly:
    """Polynomial c2*t^2 + c1*t + c0 with exact rational coefficients."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c2", "c1", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __call__(self, t) -> Fraction:
        return self.c2 * t * t + self.c1 * t + self.c0

    def __sub__(self, other: "HilbPoly") -> "HilbPoly":
        return HilbPoly(self.c2 - other.c2, self.c1 - other.c1, self.c0 - other.c0)

    def __mul__(self, n) -> "HilbPoly":
        n = Fraction(n)
        return HilbPoly(n * self.c2, n * self.c1, n * self.c0)

    __rmul__ = __mul__

    def shift(self, a: int) -> "HilbPoly":
        """The polynomial t -> p(t + a)."""
        return HilbPoly(
            self.c2,
            2 * self.c2 * a + self.c1,
            self.c2 * a * a + self.c1 * a + self.c0,
        )

    def to_json(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in (self.c2, self.c1, self.c0)]


def hilbert_poly(c: KClass) -> HilbPoly:
    """Hilbert polynomial t -> chi(c twisted by -tK)."""
    chi0 = euler_pair(structure_class(), c)
    lead = Fraction(5 * c.rank, 2)
    return HilbPoly(lead, lead - c.c1.dot(K), Fraction(chi0))


def poly_gt(p: HilbPoly, q: HilbPoly) -> bool:
    """True iff p(t) > q(t) for all large t (top-down coefficient order)."""
    diff = p - q
    for c in (diff.c2, diff.c1, diff.c0):
        if c != 0:
            return c > 0
    return False


def verify_chi_identities(g: KClass) -> bool:
    """Both pairing identities expressing chi(F,-) and chi(P,-) through
    chi(O,-), chi(O,-(K)) and the point class."""
    o = structure_class()
    pt = point_class()
    g_k = twist(g, K)
    lhs_f = euler_pair(f_tilde_class(), g)
    rhs_f = euler_pair(o, g) + euler_pair(o, g_k) - 2 * euler_pair(pt, g)
    lhs_p = euler_pair(p_class(), g)
    rhs_p = 2 * euler_pair(o, g) + 3 * euler_pair(o, g_k) - 5 * euler_pair(pt, g)
    return lhs_f == rhs_f and lhs_p == rhs_p


# ---------------------------------------------------------------------------
# Chern numbers of the anticanonical embedding in P^5.
#
# Classes live in the three-dimensional ring with basis {1, HP, pt} where HP
# is the hyperplane class of the degree-5 embedding: HP.HP = 5 pt, HP.pt = 0.


@dataclass(frozen=True)
class _HClass:
    one: Fraction
    hp: Fraction
    pt: Fraction

    def __add__(self, other):
        return _HClass(self.one + other.one, self.hp + other.hp, self.pt + other.pt)

    def __sub__(self, other):
        return _HClass(self.one - other.one, self.hp - other.hp, self.pt - other.pt)

    def __mul__(self, other):
        if isinstance(other, _HClass):
            return _HClass(
                self.one * other.one,
                self.one * other.hp + self.hp * other.one,
                self.one * other.pt + self.pt * other.one + 5 * self.hp * other.hp,
            )
        n = Fraction(other)
        return _HClass(n * self.one, n * self.hp, n * self.pt)

    __rmul__ = __mul__

    def integral(self) -> int:
        assert self.pt.denominator == 1
        return self.pt.numerator


def _h(one=0, hp=0, pt=0) -> _HClass:
    return _HClass(Fraction(one), Fraction(hp), Fraction(pt))


@dataclass(frozen=True)
class ChernSummary:
    c2_tangent: int
    c2_normal: int
    c2_fprime: int
    h_fprime: HilbPoly


def normal_bundle_cherns() -> ChernSummary:
    """Chern-number bookkeeping for the surface inside P^5.

    c(T_P5 | X) = (1+HP)^6 truncated in degree 2 and c2(T_X) is fixed by
    Noether's identity chi(O) = (K^2 + c2)/12.  Whitney's formula on
    T_P5|X = T_X + N yields c2(N), and on the rank-2 cokernel F' of
    N(-2) -> O^5 it yields c2(F'); surface Riemann-Roch then gives the
    Hilbert polynomial of F'.
    """
    hp = _h(hp=1)
    c2_tx = 12 * 1 - 5  # Noether with chi(O) = 1, K^2 = 5
    c2_p5_restr = (15 * hp * hp).integral()  # degree-2 term of (1+HP)^6
    c1_tx = hp  # anticanonical embedding: c1(T_X) = -K = HP
    c1_n = 5 * hp  # c1(N) = c1(T_P5|X) - c1(T_X) = 6HP - HP
    c2_n = c2_p5_restr - c2_tx - (c1_tx * c1_n).integral()
    # twist N(-2): rank 3, c2(E(L)) = c2(E) + 2 c1(E).c1(L) + 3 c1(L)^2
    c1_nm2 = c1_n + 3 * (-2) * hp
    c2_nm2 = c2_n + 2 * (c1_n * (-2 * hp)).integral() + 3 * ((-2 * hp) * (-2 * hp)).integral()
    # Whitney on 0 -> N(-2) -> O^5 -> F' -> 0
    c1_fp = _h() - c1_nm2
    c2_fp = -c2_nm2 - (c1_nm2 * c1_fp).integral()
    # surface Riemann-Roch for rank 2 with c1(F') = -K
    c1_sq = (c1_fp * c1_fp).integral()
    c1_dot_k = (c1_fp * (-1 * hp)).integral()
    const = Fraction(c1_sq - 2 * c2_fp - c1_dot_k, 2) + 2 * Fraction(5 + c2_tx, 12)
    h_fp = HilbPoly(Fraction(5), Fraction(5 - c1_dot_k), const)
    return ChernSummary(
        c2_tangent=c2_tx, c2_normal=c2_n, c2_fprime=c2_fp, h_fprime=h_fp
    )
