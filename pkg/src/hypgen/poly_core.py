"""Real polynomials as indexed zero sets and dense coefficient arrays.

Zeros are stored sorted ascending; repeated entries encode multiplicity.
The index convention is that ``zero_at(1)`` is the smallest positive zero,
``zero_at(0)`` the largest negative one, and the valid indices run from
``-neg_count`` (exclusive) to ``pos_count`` (inclusive).

Coefficient arithmetic stays exact (``fractions.Fraction``) whenever every
zero is rational, because the downstream coefficient recurrence amplifies
rounding; a single float zero puts the whole object on the float path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, EmptyInput, ZeroAtOrigin

# Relative threshold for trailing-coefficient trim on the float path.
DEGREE_EPS = 1e-12


def _coerce(value):
    """Normalize one zero entry to Fraction (exact) or float."""
    if isinstance(value, bool):
        raise DomainError(f"not a number: {value!r}")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad rational string {value!r}") from exc
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"zero must be finite, got {value!r}")
        return value
    raise DomainError(f"unsupported zero type: {type(value).__name__}")


def _operand(coeff, t):
    """Cast an exact coefficient down to float when mixed with float/complex."""
    if isinstance(t, (float, complex)) and isinstance(coeff, Fraction):
        return float(coeff)
    return coeff


@dataclass(frozen=True)
class IndexedZeroSet:
    """A hyperbolic polynomial stored as its sorted real zeros."""

    zeros: tuple

    @property
    def neg_count(self) -> int:
        return sum(1 for z in self.zeros if z < 0)

    @property
    def pos_count(self) -> int:
        return sum(1 for z in self.zeros if z > 0)

    @property
    def total(self) -> int:
        return len(self.zeros)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(z, Fraction) for z in self.zeros)

    def zero_at(self, k: int):
        """Zero with signed index k, -neg_count < k <= pos_count.

        Index 1 is the smallest positive zero, index 0 the largest
        negative one (when it exists), counting multiplicity.
        """
        if not -self.neg_count < k <= self.pos_count:
            raise DomainError(
                f"index {k} outside ({-self.neg_count}, {self.pos_count}]"
            )
        return self.zeros[self.neg_count - 1 + k]


def make_zero_set(zeros) -> IndexedZeroSet:
    """Build an IndexedZeroSet from a list of reals (or 'p/q' strings)."""
    entries = [_coerce(z) for z in zeros]
    if not entries:
        raise EmptyInput("zero list is empty")
    if any(z == 0 for z in entries):
        raise ZeroAtOrigin("zero at the origin is not allowed")
    if any(isinstance(z, float) for z in entries):
        entries = [float(z) for z in entries]
    return IndexedZeroSet(tuple(sorted(entries)))


@dataclass(frozen=True)
class DensePoly:
    """Dense coefficients, index = power of the variable."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, t):
        """Horner evaluation; exact when both sides are rational."""
        acc = _operand(self.coeffs[-1], t)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * t + _operand(c, t)
        return acc

    def derivative(self) -> "DensePoly":
        if self.degree == 0:
            zero = self.coeffs[0] * 0
            return DensePoly((zero,))
        return DensePoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))


def trim_coeffs(coeffs) -> tuple:
    """Drop trailing coefficients: exact zeros, or |c| <= DEGREE_EPS*max on floats."""
    coeffs = list(coeffs)
    if any(isinstance(c, float) for c in coeffs):
        scale = max((abs(c) for c in coeffs), default=0.0)
        cut = DEGREE_EPS * scale
        while len(coeffs) > 1 and abs(coeffs[-1]) <= cut:
            coeffs.pop()
    else:
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
    return tuple(coeffs)


def make_dense(coeffs) -> DensePoly:
    if not list(coeffs):
        raise EmptyInput("coefficient list is empty")
    return DensePoly(trim_coeffs(coeffs))


def expand(zs: IndexedZeroSet) -> DensePoly:
    """Monic dense coefficients of the product of (t - zero)."""
    one = Fraction(1) if zs.is_exact else 1.0
    coeffs = [one]
    for z in zs.zeros:
        # multiply the current polynomial by (t - z)
        nxt = [-z * coeffs[0]]
        for k in range(1, len(coeffs)):
            nxt.append(coeffs[k - 1] - z * coeffs[k])
        nxt.append(coeffs[-1])
        coeffs = nxt
    return DensePoly(tuple(coeffs))


def eval_at(poly, t):
    """Value of a zero set (product form) or dense polynomial at t."""
    if isinstance(poly, IndexedZeroSet):
        acc = 1
        for z in poly.zeros:
            acc = acc * (t - _operand(z, t))
        return acc
    return poly.eval(t)


def count_pos(zs: IndexedZeroSet, x) -> int:
    """Number of zeros in (0, x], counting multiplicity."""
    if x <= 0:
        raise DomainError(f"count_pos needs x > 0, got {x}")
    return sum(1 for z in zs.zeros if 0 < z <= x)


def count_neg(zs: IndexedZeroSet, x) -> int:
    """Number of zeros in [x, 0), counting multiplicity."""
    if x >= 0:
        raise DomainError(f"count_neg needs x < 0, got {x}")
    return sum(1 for z in zs.zeros if x <= z < 0)


@dataclass(frozen=True)
class GeneratorSpec:
    """The triple (P, Q, r) defining the generating function 1/(P + z t^r Q)."""

    P: IndexedZeroSet
    Q: IndexedZeroSet
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or isinstance(self.r, bool) or self.r < 2:
            raise DomainError(f"r must be an integer >= 2, got {self.r!r}")

    @property
    def is_exact(self) -> bool:
        return self.P.is_exact and self.Q.is_exact

    @property
    def sign_exponent(self) -> int:
        """(-1)**(pos zeros of P - pos zeros of Q), as +/-1."""
        return -1 if (self.P.pos_count - self.Q.pos_count) % 2 else 1

    @property
    def tau1(self) -> float:
        return float(self.P.zero_at(1))

    @property
    def tau2(self) -> float:
        return float(self.P.zero_at(2))


def make_spec(p_zeros, q_zeros, r: int) -> GeneratorSpec:
    return GeneratorSpec(make_zero_set(p_zeros), make_zero_set(q_zeros), r)
