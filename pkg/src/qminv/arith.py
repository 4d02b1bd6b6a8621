"""Number-theoretic and elliptic-torsion primitives.

Divisor enumeration and the divisor sum sigma_{-1}(w) = sum_{m|w} 1/m are
the kernel of every positive-degree invariant.  The rest of the module
fixes the bookkeeping of a query: the Euler pairing on an elliptic curve,
the integer system that transports the quasimap degree w into the
base-direction Chern components of the associated sheaf, and torsion
subgroup orders E[n] = n^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """Raised for arguments outside an operation's domain (e.g. w = 0)."""


class NormalizationError(ValueError):
    """Raised when the degree-vector system is singular or non-integral."""


def divisors(w: int) -> list[int]:
    """All positive divisors of w in increasing order.

    w = 0 is rejected: degree-zero queries are handled by the constant-map
    formula and never reach divisor machinery.
    """
    if w < 1:
        raise DomainError(f"divisors requires w >= 1, got {w}")
    small, large = [], []
    d = 1
    while d * d <= w:
        if w % d == 0:
            small.append(d)
            if d != w // d:
                large.append(w // d)
        d += 1
    return small + large[::-1]


def sigma_minus_one(w: int) -> Fraction:
    """sum_{m | w} 1/m as an exact rational."""
    return sum((Fraction(1, m) for m in divisors(w)), Fraction(0))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def torsion_order(n: int) -> int:
    """Order of the n-torsion subgroup of an elliptic curve: n^2."""
    if n < 1:
        raise DomainError(f"torsion_order requires n >= 1, got {n}")
    return n * n


@dataclass(frozen=True)
class ChernClass:
    """(rank, degree) component pair of an even cohomology class on E."""

    rank: int
    deg: int

    def __add__(self, other: "ChernClass") -> "ChernClass":
        return ChernClass(self.rank + other.rank, self.deg + other.deg)

    def __sub__(self, other: "ChernClass") -> "ChernClass":
        return ChernClass(self.rank - other.rank, self.deg - other.deg)

    def __rmul__(self, n: int) -> "ChernClass":
        return ChernClass(n * self.rank, n * self.deg)

    def is_zero(self) -> bool:
        return self.rank == 0 and self.deg == 0


def chi_pairing_elliptic(v: ChernClass, u: ChernClass) -> int:
    """Euler pairing chi(v.u) on a genus-1 curve.

    The Todd correction vanishes in genus 1, leaving
    chi = rk(v)*deg(u) + deg(v)*rk(u).
    """
    return v.rank * u.deg + v.deg * u.rank


@dataclass(frozen=True)
class BaseDegrees:
    """Base-direction Chern data of the sheaf attached to a quasisection.

    c1 is the first-Chern component along the base curve (its residue
    mod r is the gerbe degree the query must match); ch2 is the second
    character component.
    """

    c1: int
    ch2: int


def solve_base_degrees(r: int, a: int, w: int, u: ChernClass) -> BaseDegrees:
    """Solve the 2x2 integer system pinning the base-direction degrees.

        c1 * deg(u) + ch2 * rk(u) = 0
        c1 * a      - ch2 * r     = w

    The normalisation class u must make the system nonsingular with an
    integer solution; both equations are re-verified before returning.
    For u = (1, 0) the solution is (w, 0).
    """
    det = u.deg * (-r) - u.rank * a
    if det == 0:
        raise NormalizationError(
            f"degree system is singular for u=({u.rank},{u.deg}), (r,a)=({r},{a})"
        )
    c1_num = -u.rank * w
    ch2_num = u.deg * w
    if c1_num % det or ch2_num % det:
        raise NormalizationError(
            f"degree system has no integer solution for w={w}, "
            f"u=({u.rank},{u.deg}), (r,a)=({r},{a})"
        )
    c1, ch2 = c1_num // det, ch2_num // det
    if c1 * u.deg + ch2 * u.rank != 0 or c1 * a - ch2 * r != w:
        raise NormalizationError("degree solution failed re-substitution")
    return BaseDegrees(c1, ch2)


def canonical_u_choice(r: int, a: int) -> ChernClass:
    """A normalisation class with chi pairing 1 against (r, a).

    Takes rk(u) to be the inverse of a mod r; the degree component is then
    forced.  Only defined for gcd(r, a) = 1.
    """
    if math.gcd(r, a) != 1:
        raise DomainError(f"no unit normalisation: gcd({r},{a}) != 1")
    u1 = pow(a, -1, r)
    u2 = (1 - a * u1) // r
    return ChernClass(u1, u2)


@dataclass(frozen=True)
class InvariantQuery:
    """A validated invariant request.

    r      rank (>= 2)
    d      degree on the base curve; only its residue mod r enters
    a      degree on the elliptic curve, in [0, r), coprime to r
    w      quasimap degree (>= 0)
    g      genus of the base curve (>= 2)
    u_choice  universal-family normalisation; must pair to 1 against
              (r, a).  Defaults to (1, 0) when a = 1; for other a the
              caller must supply it (``canonical_u_choice`` builds one).
    """

    r: int
    d: int
    a: int
    w: int
    g: int
    u_choice: ChernClass | None = None

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"rank must be >= 2, got {self.r}")
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if self.w < 0:
            raise ValueError(f"quasimap degree must be >= 0, got {self.w}")
        if not 0 <= self.a < self.r:
            raise ValueError(f"a must lie in [0, {self.r}), got {self.a}")
        if math.gcd(self.r, self.a) != 1:
            raise ValueError(f"gcd(r, a) must be 1, got ({self.r}, {self.a})")
        if self.u_choice is None:
            if self.a != 1:
                raise ValueError(
                    "u_choice is required when a != 1; "
                    "canonical_u_choice(r, a) constructs a valid one"
                )
            object.__setattr__(self, "u_choice", ChernClass(1, 0))
        if chi_pairing_elliptic(ChernClass(self.r, self.a), self.u_choice) != 1:
            raise ValueError(
                f"u_choice=({self.u_choice.rank},{self.u_choice.deg}) does not "
                f"pair to 1 against ({self.r},{self.a})"
            )

    def base_degrees(self) -> BaseDegrees:
        return solve_base_degrees(self.r, self.a, self.w, self.u_choice)
