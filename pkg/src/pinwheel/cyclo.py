"""Exact scalar arithmetic: numbers in Q(zeta_r) and points on roots-of-unity rays.

Magnitudes are `fractions.Fraction` throughout and zeta stays symbolic,
reduced modulo the r-th cyclotomic polynomial, so every value has a single
canonical coefficient tuple and equality of values is equality of tuples.
No floating point is used anywhere.  All types are immutable and all
functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "CycloNum",
    "YPoint",
    "cyclotomic_polynomial",
    "delta",
    "hyperplane_eval",
    "on_hyperplane",
]


def _exact_polydiv(num: list[int], den: list[int]) -> list[int]:
    # Long division in Z[x]; the remainder must vanish.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        q, rem = divmod(num[shift + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("non-exact polynomial division")
        out[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
    if any(num):
        raise ArithmeticError("nonzero remainder in exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (ascending degree) of the r-th cyclotomic polynomial.

    Computed by exact division of x^r - 1 by the product of the cyclotomic
    polynomials of the proper divisors of r.  Monic with integer coefficients.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r!r}")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly = _exact_polydiv(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _degree(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


def _reduce(coeffs: list[Fraction], r: int) -> tuple[Fraction, ...]:
    mod = cyclotomic_polynomial(r)
    deg = len(mod) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j, m in enumerate(mod):
                work[i - deg + j] -= c * m
    work = work[:deg]
    work += [Fraction(0)] * (deg - len(work))
    return tuple(work)


def _int_pair(q: Fraction) -> list[str]:
    return [str(q.numerator), str(q.denominator)]


def _pair_to_fraction(pair) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class CycloNum:
    """Element of Q(zeta_r) in canonical form.

    Stored as the remainder modulo the r-th cyclotomic polynomial in the
    power basis 1, zeta, ..., zeta^(phi(r)-1), so two values are equal
    exactly when their coefficient tuples are equal.
    """

    r: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r!r}")
        want = _degree(self.r)
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != want:
            raise ValueError(f"need {want} coefficients for r={self.r}, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def zero(r: int) -> "CycloNum":
        return CycloNum(r, (Fraction(0),) * _degree(r))

    @staticmethod
    def from_rational(value, r: int) -> "CycloNum":
        coeffs = [Fraction(value)] + [Fraction(0)] * (_degree(r) - 1)
        return CycloNum(r, tuple(coeffs))

    @staticmethod
    def from_term(magnitude, exp: int, r: int) -> "CycloNum":
        """Canonical form of magnitude * zeta^exp (exp may be any integer)."""
        e = exp % r
        raw = [Fraction(0)] * (e + 1)
        raw[e] = Fraction(magnitude)
        return CycloNum(r, _reduce(raw, r))

    def _check_same_field(self, other: "CycloNum") -> None:
        if not isinstance(other, CycloNum):
            raise TypeError(f"expected CycloNum, got {type(other).__name__}")
        if self.r != other.r:
            raise ValueError(f"mismatched roots of unity: r={self.r} vs r={other.r}")

    def __add__(self, other: "CycloNum") -> "CycloNum":
        self._check_same_field(other)
        return CycloNum(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        self._check_same_field(other)
        return CycloNum(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.r, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycloNum") -> "CycloNum":
        self._check_same_field(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum(self.r, _reduce(prod, self.r))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational(self) -> Fraction | None:
        """The value as a rational number, or None if it is irrational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [_int_pair(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: Mapping) -> "CycloNum":
        return CycloNum(int(data["r"]), tuple(_pair_to_fraction(p) for p in data["coeffs"]))


@dataclass(frozen=True)
class YPoint:
    """Point of Y^n: per coordinate a nonnegative magnitude and a branch in Z_r.

    Zero magnitudes are stored with branch 0 (the branch rays meet at the
    origin), so equality of points is structural.
    """

    r: int
    coords: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r!r}")
        norm = []
        for mag, branch in self.coords:
            mag = Fraction(mag)
            if mag < 0:
                raise ValueError(f"magnitude must be nonnegative, got {mag}")
            norm.append((mag, branch % self.r if mag else 0))
        object.__setattr__(self, "coords", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.coords)

    def magnitude(self, i: int) -> Fraction:
        """Magnitude of coordinate i (1-based)."""
        return self.coords[i - 1][0]

    def branch(self, i: int) -> int:
        """Branch of coordinate i (1-based)."""
        return self.coords[i - 1][1]

    def magnitudes(self) -> tuple[Fraction, ...]:
        return tuple(mag for mag, _ in self.coords)

    def to_json(self) -> dict:
        return {
            "coords": [
                {"mag": _int_pair(mag), "branch": branch} for mag, branch in self.coords
            ]
        }

    @staticmethod
    def from_json(data: Mapping, r: int) -> "YPoint":
        coords = tuple(
            (_pair_to_fraction(c["mag"]), int(c["branch"])) for c in data["coords"]
        )
        return YPoint(r, coords)


def delta(n: int, k: int) -> int:
    """The descending partial sum n + (n-1) + ... + (n-k+1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n!r}")
    if k < 0 or k > n:
        raise ValueError(f"k must lie in [0, {n}], got {k!r}")
    return k * n - k * (k - 1) // 2


def _checked_elements(point: YPoint, elements: Iterable[int]) -> tuple[int, ...]:
    elems = tuple(sorted(elements))
    if len(set(elems)) != len(elems):
        raise ValueError(f"repeated elements in subset {elems}")
    for i in elems:
        if not 1 <= i <= point.n:
            raise ValueError(f"element {i} out of range 1..{point.n}")
    return elems


def hyperplane_eval(point: YPoint, elements: Iterable[int], decoration: Mapping[int, int]) -> CycloNum:
    """Exact value of sum over i in the subset of zeta^{decoration(i)} * x_i."""
    elems = _checked_elements(point, elements)
    total = CycloNum.zero(point.r)
    for i in elems:
        if i not in decoration:
            raise ValueError(f"decoration undefined on element {i}")
        mag, branch = point.coords[i - 1]
        total = total + CycloNum.from_term(mag, decoration[i] + branch, point.r)
    return total


def on_hyperplane(point: YPoint, elements: Iterable[int], decoration: Mapping[int, int]) -> bool:
    """Whether the decorated-subset sum equals the bound for its size, exactly."""
    elems = _checked_elements(point, elements)
    value = hyperplane_eval(point, elems, decoration).as_rational()
    return value is not None and value == delta(point.n, len(elems))
