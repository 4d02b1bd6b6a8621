"""Exact scalar, power-series and graded-coefficient arithmetic.

Everything in this package is computed over exact rationals; no floating
point is used anywhere.  Three small coefficient rings live here:

* ``QSeries`` -- truncated formal power series in ``q`` over ``Fraction``,
  used for the generating-series identities.
* ``EquivCoeff`` -- elements ``s(t) + o(t)*omega`` of the graded ring
  ``Q[t]{1, omega}`` with ``omega**2 = 0``, where ``omega`` stands for the
  first Chern class of the canonical bundle of the base curve and ``t`` is
  the equivariant weight of the scaling torus.  Integrating out ``omega``
  against the base curve is an explicit, separate operation.
* ``ZLaurent`` -- finite Laurent tails in the localisation variable ``z``
  with ``EquivCoeff`` coefficients; the residue is the ``z**-1`` entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# The universal scalar: exact, always reduced, positive denominator.
Rational = Fraction

# Invariants live in t-degree <= 1; degree 2 only appears in vanishing
# arguments, so the default cap keeps one spare slot.
DEFAULT_T_CAP = 2

# Powers of z below this never contribute: the wall-crossing base is a
# curve, so anything past z**-2 dies against the point class.
DEFAULT_MIN_Z_EXPONENT = -2


class InvalidTruncationError(ValueError):
    """Raised when a series operation is asked for truncation order 0."""


def _as_fraction_tuple(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class QSeries:
    """A power series in q truncated at a fixed order N >= 1.

    ``coeffs[w]`` is the coefficient of ``q**w``; the tuple has length
    ``N + 1``.  Binary operations on mismatched orders truncate to the
    smaller order; below the truncation every operation is exact.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = _as_fraction_tuple(self.coeffs)
        if len(coeffs) < 2:
            raise InvalidTruncationError("truncation order must be >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls((Fraction(1),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, w: int) -> Fraction:
        if not 0 <= w <= self.order:
            raise IndexError(f"exponent {w} outside truncation 0..{self.order}")
        return self.coeffs[w]

    def truncate(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(self.coeffs[: order + 1])

    def _common_order(self, other: "QSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "QSeries") -> "QSeries":
        n = self._common_order(other)
        return QSeries(tuple(self.coeffs[w] + other.coeffs[w] for w in range(n + 1)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = self._common_order(other)
        return QSeries(tuple(self.coeffs[w] - other.coeffs[w] for w in range(n + 1)))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ci = self.coeffs[i]
            if not ci:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return QSeries(tuple(out))

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(tuple(c * coeff for coeff in self.coeffs))

    def negate_variable(self) -> "QSeries":
        """Substitute q -> -q, flipping the sign of odd coefficients."""
        return QSeries(
            tuple(-c if w % 2 else c for w, c in enumerate(self.coeffs))
        )

    def exp(self) -> "QSeries":
        """Finite Taylor exponential; requires zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp is only defined for series with zero constant term")
        n = self.order
        out = QSeries.one(n)
        power = QSeries.one(n)
        for k in range(1, n + 1):
            power = power * self
            out = out + power.scale(Fraction(1, math.factorial(k)))
        return out

    def __str__(self) -> str:
        parts = []
        for w, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if w == 0:
                parts.append(str(c))
            elif w == 1:
                parts.append(f"({c})*q")
            else:
                parts.append(f"({c})*q^{w}")
        return " + ".join(parts) if parts else "0"


def series_log_product(order: int) -> QSeries:
    """log of the Euler product prod_{k>=1} (1 - q**k), truncated at q**order.

    Expanded termwise: log(1 - q**k) = -sum_j q**(k*j) / j, so the
    coefficient of q**w is -sum_{m | w} 1/m.  The constant term is 0.
    """
    if order < 1:
        raise InvalidTruncationError("truncation order must be >= 1")
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        for j in range(1, order // k + 1):
            coeffs[k * j] -= Fraction(1, j)
    return QSeries(tuple(coeffs))


def series_negate_variable(s: QSeries) -> QSeries:
    return s.negate_variable()


def _as_tpoly(value, cap: int) -> tuple[Fraction, ...]:
    if isinstance(value, (int, Fraction)):
        poly = (Fraction(value),)
    else:
        poly = _as_fraction_tuple(value)
    poly = poly[: cap + 1]
    return poly + (Fraction(0),) * (cap + 1 - len(poly))


def _tpoly_mul(a, b, cap: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (cap + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), cap + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return tuple(out)


@dataclass(frozen=True)
class EquivCoeff:
    """Element ``scalar(t) + omega_part(t) * omega`` with ``omega**2 = 0``.

    There is no slot for ``omega**2``, so nilpotence holds by construction.
    t-polynomials are truncated at ``t_cap`` (a genuine quotient ring, so
    ring laws survive truncation exactly).
    """

    scalar: tuple[Fraction, ...] = (Fraction(0),)
    omega_part: tuple[Fraction, ...] = (Fraction(0),)
    t_cap: int = DEFAULT_T_CAP

    def __post_init__(self):
        object.__setattr__(self, "scalar", _as_tpoly(self.scalar, self.t_cap))
        object.__setattr__(self, "omega_part", _as_tpoly(self.omega_part, self.t_cap))

    @classmethod
    def zero(cls, t_cap: int = DEFAULT_T_CAP) -> "EquivCoeff":
        return cls((), (), t_cap)

    @classmethod
    def one(cls, t_cap: int = DEFAULT_T_CAP) -> "EquivCoeff":
        return cls((Fraction(1),), (), t_cap)

    @classmethod
    def from_scalar(cls, value, t_cap: int = DEFAULT_T_CAP) -> "EquivCoeff":
        return cls((Fraction(value),), (), t_cap)

    @classmethod
    def t(cls, t_cap: int = DEFAULT_T_CAP) -> "EquivCoeff":
        return cls((Fraction(0), Fraction(1)), (), t_cap)

    @classmethod
    def omega(cls, t_cap: int = DEFAULT_T_CAP) -> "EquivCoeff":
        return cls((), (Fraction(1),), t_cap)

    def _common_cap(self, other: "EquivCoeff") -> int:
        return min(self.t_cap, other.t_cap)

    def __add__(self, other: "EquivCoeff") -> "EquivCoeff":
        cap = self._common_cap(other)
        return EquivCoeff(
            tuple(a + b for a, b in zip(self.scalar, other.scalar)),
            tuple(a + b for a, b in zip(self.omega_part, other.omega_part)),
            cap,
        )

    def __sub__(self, other: "EquivCoeff") -> "EquivCoeff":
        return self + (-other)

    def __neg__(self) -> "EquivCoeff":
        return EquivCoeff(
            tuple(-c for c in self.scalar),
            tuple(-c for c in self.omega_part),
            self.t_cap,
        )

    def __mul__(self, other: "EquivCoeff") -> "EquivCoeff":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        cap = self._common_cap(other)
        scalar = _tpoly_mul(self.scalar, other.scalar, cap)
        omega = tuple(
            x + y
            for x, y in zip(
                _tpoly_mul(self.scalar, other.omega_part, cap),
                _tpoly_mul(self.omega_part, other.scalar, cap),
            )
        )
        return EquivCoeff(scalar, omega, cap)

    def __rmul__(self, other) -> "EquivCoeff":
        return self.scale(other)

    def scale(self, c) -> "EquivCoeff":
        c = Fraction(c)
        return EquivCoeff(
            tuple(c * v for v in self.scalar),
            tuple(c * v for v in self.omega_part),
            self.t_cap,
        )

    def is_zero(self) -> bool:
        return not any(self.scalar) and not any(self.omega_part)

    def t_coeff(self, k: int) -> Fraction:
        """Coefficient of t**k in the scalar part."""
        return self.scalar[k] if k <= self.t_cap else Fraction(0)

    def omega_coeff(self, k: int) -> Fraction:
        """Coefficient of t**k * omega."""
        return self.omega_part[k] if k <= self.t_cap else Fraction(0)

    def integrate_omega(self, genus: int) -> "EquivCoeff":
        """Pair the omega part against the base curve: int omega = 2g - 2.

        Returns a pure scalar (the omega slot of the result is zero); the
        scalar part of the input does not survive integration.
        """
        factor = Fraction(2 * genus - 2)
        return EquivCoeff(tuple(factor * c for c in self.omega_part), (), self.t_cap)

    def __str__(self) -> str:
        def poly(coeffs):
            terms = []
            for k, c in enumerate(coeffs):
                if c == 0:
                    continue
                if k == 0:
                    terms.append(str(c))
                elif k == 1:
                    terms.append(f"({c})*t")
                else:
                    terms.append(f"({c})*t^{k}")
            return " + ".join(terms) if terms else "0"

        s, o = poly(self.scalar), poly(self.omega_part)
        if o == "0":
            return s
        return f"{s} + [{o}]*omega"


class ZLaurent:
    """Finite Laurent tail in z over ``EquivCoeff``.

    Exponents below ``min_exponent`` are discarded on construction (they
    cannot contribute to any degree computation here); zero coefficients
    are dropped.  The residue is the coefficient of ``z**-1``.
    """

    __slots__ = ("_terms", "min_exponent")

    def __init__(self, terms, min_exponent: int = DEFAULT_MIN_Z_EXPONENT):
        clean = {}
        for exponent, coeff in dict(terms).items():
            if exponent < min_exponent or coeff.is_zero():
                continue
            clean[int(exponent)] = coeff
        self._terms = dict(sorted(clean.items()))
        self.min_exponent = min_exponent

    def items(self):
        return self._terms.items()

    def exponents(self) -> list[int]:
        return list(self._terms)

    def coefficient(self, exponent: int) -> EquivCoeff:
        return self._terms.get(exponent, EquivCoeff.zero())

    def residue(self) -> EquivCoeff:
        return self.coefficient(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        inner = ", ".join(f"z^{e}: {c}" for e, c in self._terms.items())
        return f"ZLaurent({{{inner}}})"


def laurent_residue(f: ZLaurent) -> EquivCoeff:
    """Coefficient of z**-1; the zero element if there is no simple pole."""
    return f.residue()
