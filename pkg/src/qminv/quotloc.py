"""Wall-crossing components over Quot schemes on an elliptic curve.

For a quasimap degree w >= 1 the wall locus splits into one component per
divisor m of w, each a Quot scheme of quotients of the unique stable
bundle of rank r and degree a.  This module enumerates those components,
computes their dimensions, stabilizer orders and slice Euler
characteristics (the rank-0 quotient case by brute-force torus
localization over all fixed-locus decompositions), and extracts each
component's z-residue contribution.

Two quotient classes are fully analysed: u = (0, k), where the slice
Euler characteristic is r*k and the stabilizer has order r^2 k^2, and
u = (r-1, k), where the slice is a projective space of dimension
dim - 1 = r(k-a) + a - 1 and the stabilizer has order dim^2.  Components
outside these classes are never presented silently: strict mode rejects
them, permissive mode applies the conjectural dim^2 fallback and flags
the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .arith import ChernClass, DomainError, InvariantQuery, NormalizationError, divisors
from .exactalg import EquivCoeff, ZLaurent, laurent_residue


class InvalidComponentError(ValueError):
    """Raised when a quotient class yields a negative dimension."""


class UnsupportedComponentError(ValueError):
    """Raised in strict mode for quotient ranks outside {0, r-1}."""


class DegenerateQuotientError(ValueError):
    """Raised for the zero quotient class (0, 0)."""


def quot_dimension(r: int, a: int, u: ChernClass) -> int:
    """Dimension r*deg(u) - a*rk(u) of the Quot component of class u.

    This bilinear form reproduces both analysed cases: r(k-a)+a for
    u = (r-1, k) and r*k for u = (0, k).
    """
    dim = r * u.deg - a * u.rank
    if dim < 0:
        raise InvalidComponentError(
            f"quotient class ({u.rank},{u.deg}) has negative dimension {dim}"
        )
    return dim


def stabilizer_order(r: int, a: int, u: ChernClass, strict: bool = True) -> int:
    """Order of the finite subgroup fixing the slice of the Quot scheme.

    dim^2 for u = (r-1, k); r^2 k^2 for u = (0, k).  Other quotient ranks
    raise in strict mode; permissive mode falls back to dim^2, which the
    caller must flag as conjectural.
    """
    dim = quot_dimension(r, a, u)
    if u.rank == 0:
        if u.deg < 1:
            raise DegenerateQuotientError("zero quotient class has no finite stabilizer")
        return r * r * u.deg * u.deg
    if u.rank == r - 1:
        return dim * dim
    if strict:
        raise UnsupportedComponentError(
            f"stabilizer not established for quotient rank {u.rank} "
            f"(analysed ranks: 0 and {r - 1})"
        )
    return dim * dim


@dataclass(frozen=True)
class FixedLocusDecomposition:
    """One ordered r-part decomposition of a rank-0 quotient class.

    The contribution is zero as soon as two parts are nonzero (the locus
    then carries a free translation action); a single nonzero part (0, k)
    contributes the Euler characteristic k of the projective slice.
    """

    parts: tuple[ChernClass, ...]
    euler_contribution: int


def fixed_locus_decompositions(r: int, u: ChernClass) -> Iterator[FixedLocusDecomposition]:
    """All ordered decompositions u_1 + ... + u_r = u into classes (0, k_i >= 0)."""
    if u.rank != 0:
        raise ValueError(f"fixed-locus enumeration needs a rank-0 class, got rank {u.rank}")
    k = u.deg
    if k < 1:
        raise DegenerateQuotientError("quotient degree must be >= 1")
    for bars in combinations(range(k + r - 1), r - 1):
        degs = []
        prev = -1
        for b in bars:
            degs.append(b - prev - 1)
            prev = b
        degs.append(k + r - 2 - prev)
        parts = tuple(ChernClass(0, ki) for ki in degs)
        nonzero = [p for p in parts if not p.is_zero()]
        contribution = nonzero[0].deg if len(nonzero) == 1 else 0
        yield FixedLocusDecomposition(parts, contribution)


def slice_euler_bruteforce(r: int, u: ChernClass) -> int:
    """Euler characteristic of the fixed-determinant slice for u = (0, k).

    Sums the contributions of every fixed-locus decomposition and checks
    the total against the closed value r*k before returning it.
    """
    total = 0
    for decomposition in fixed_locus_decompositions(r, u):
        total += decomposition.euler_contribution
    if total != r * u.deg:
        raise RuntimeError(
            f"fixed-locus enumeration for (r,k)=({r},{u.deg}) gave {total}, "
            f"expected {r * u.deg}"
        )
    return total


def projective_slice_euler(r: int, a: int, u: ChernClass) -> Fraction:
    """Euler characteristic of the quotient stack slice for u = (r-1, k).

    The slice is a projective space of dimension dim - 1 with Euler
    characteristic dim, divided by a stabilizer of order dim^2: the result
    is exactly 1/dim.
    """
    if u.rank != r - 1:
        raise UnsupportedComponentError(
            f"projective slice analysis needs quotient rank {r - 1}, got {u.rank}"
        )
    dim = quot_dimension(r, a, u)
    return Fraction(dim, stabilizer_order(r, a, u))


def normal_bundle_inverse_expansion(m: int, dim: int) -> ZLaurent:
    """Inverse equivariant Euler class of a component's virtual normal bundle.

    The z-expansion starts 1 + (-m z)^{-1} c_1 + ..., where the first
    Chern class of the twisted Hom complex is dim * (omega - t); terms at
    z^-2 and below are discarded (the base is a curve, so they cannot
    contribute to any degree).
    """
    if m < 1:
        raise DomainError(f"divisor must be >= 1, got {m}")
    if dim < 0:
        raise InvalidComponentError(f"dimension must be >= 0, got {dim}")
    terms = {0: EquivCoeff.one()}
    if dim:
        c1 = (EquivCoeff.omega() - EquivCoeff.t()).scale(dim)
        terms[-1] = c1.scale(Fraction(-1, m))
    return ZLaurent(terms)


@dataclass(frozen=True)
class WallComponent:
    """One divisor's Quot-scheme component of the wall locus.

    twist is the unique integer h with h*r - c1/m in [0, r-1]; the
    quotient class is h*(r, a) - (c1/m, ch2/m).  dim equals w/m for every
    component.  conjectural marks permissive-mode fallback data.
    """

    divisor: int
    twist: int
    quotient_class: ChernClass
    dim: int
    stab_order: int
    slice_euler: int
    supported: bool
    conjectural: bool


def wall_components(query: InvariantQuery, strict: bool = True) -> list[WallComponent]:
    """Enumerate the wall components of a degree-w >= 1 query, one per m | w."""
    if query.w < 1:
        raise DomainError("wall components exist only for quasimap degree w >= 1")
    bd = query.base_degrees()
    r, a = query.r, query.a
    components = []
    for m in divisors(query.w):
        if bd.c1 % m or bd.ch2 % m:
            raise NormalizationError(
                f"base degrees ({bd.c1},{bd.ch2}) are not divisible by m={m}"
            )
        x1, x2 = bd.c1 // m, bd.ch2 // m
        h = -(-x1 // r)
        assert 0 <= h * r - x1 <= r - 1  # h is the unique such integer
        u_m = ChernClass(h * r - x1, h * a - x2)
        dim = quot_dimension(r, a, u_m)
        if dim < 1:
            raise InvalidComponentError(
                f"component m={m} has dimension {dim}; expected >= 1 for w >= 1"
            )
        supported = u_m.rank in (0, r - 1)
        if supported:
            stab = stabilizer_order(r, a, u_m)
            if u_m.rank == 0:
                euler = slice_euler_bruteforce(r, u_m)
            else:
                euler = dim
        elif strict:
            raise UnsupportedComponentError(
                f"component m={m} has quotient rank {u_m.rank} outside the "
                f"analysed classes {{0, {r - 1}}}; rerun permissively to apply "
                "the conjectural fallback"
            )
        else:
            stab = dim * dim
            euler = dim
        components.append(
            WallComponent(
                divisor=m,
                twist=h,
                quotient_class=u_m,
                dim=dim,
                stab_order=stab,
                slice_euler=euler,
                supported=supported,
                conjectural=not supported,
            )
        )
    return components


def component_residue_degree(
    component: WallComponent, genus: int, strict: bool = True
) -> Fraction:
    """Degree of a component's z-residue, as the coefficient of t.

    The component's virtual class is point-supported along the base
    curve, so only the t-linear part of the residue survives the product;
    taking degree then pairs in the (2g-2) factor and the orbifold Euler
    ratio slice_euler / stab_order.  For both analysed classes the result
    collapses to (2g-2)/m.
    """
    if strict and not component.supported:
        raise UnsupportedComponentError(
            f"component m={component.divisor} is outside the analysed classes"
        )
    residue = laurent_residue(
        normal_bundle_inverse_expansion(component.divisor, component.dim)
    )
    euler_ratio = Fraction(component.slice_euler, component.stab_order)
    return residue.t_coeff(1) * (2 * genus - 2) * euler_ratio
