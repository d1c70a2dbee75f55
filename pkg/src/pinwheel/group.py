"""The group S(r, n) of generalized permutation matrices.

Elements are n x n matrices with exactly one nonzero entry in each row and
column, every nonzero entry an r-th root of unity.  An element is encoded by
columns: column b holds zeta^exp_of_col[b] in row row_of_col[b].  Rows,
columns and coordinates are 1-based everywhere in the public interface.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .cyclo import YPoint

__all__ = [
    "GenPerm",
    "identity",
    "generator",
    "multiply",
    "inverse",
    "act_on_tuple",
    "generate_subgroup",
    "enumerate_group",
    "group_order",
]


@dataclass(frozen=True)
class GenPerm:
    """A generalized permutation matrix: permutation plus per-column exponents."""

    r: int
    n: int
    row_of_col: tuple[int, ...]
    exp_of_col: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n!r}")
        rows = tuple(self.row_of_col)
        exps = tuple(e % self.r for e in self.exp_of_col)
        if len(rows) != self.n or len(exps) != self.n:
            raise ValueError(f"need {self.n} columns, got {len(rows)} rows / {len(exps)} exponents")
        if sorted(rows) != list(range(1, self.n + 1)):
            raise ValueError(f"row_of_col is not a permutation of 1..{self.n}: {rows}")
        object.__setattr__(self, "row_of_col", rows)
        object.__setattr__(self, "exp_of_col", exps)

    def row_of(self, col: int) -> int:
        return self.row_of_col[col - 1]

    def exp_of(self, col: int) -> int:
        return self.exp_of_col[col - 1]

    @cached_property
    def _col_of_row(self) -> tuple[int, ...]:
        out = [0] * self.n
        for col, row in enumerate(self.row_of_col, start=1):
            out[row - 1] = col
        return tuple(out)

    def col_of_row(self, row: int) -> int:
        return self._col_of_row[row - 1]

    def __mul__(self, other: "GenPerm") -> "GenPerm":
        return multiply(self, other)

    def inverse(self) -> "GenPerm":
        return inverse(self)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.row_of_col, self.exp_of_col)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "cols": [
                {"col": c, "row": self.row_of(c), "exp": self.exp_of(c)}
                for c in range(1, self.n + 1)
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "GenPerm":
        r, n = int(data["r"]), int(data["n"])
        rows, exps = [0] * n, [0] * n
        seen = set()
        for entry in data["cols"]:
            c = int(entry["col"])
            if not 1 <= c <= n or c in seen:
                raise ValueError(f"bad or repeated column index {c}")
            seen.add(c)
            rows[c - 1] = int(entry["row"])
            exps[c - 1] = int(entry["exp"])
        if len(seen) != n:
            raise ValueError(f"expected {n} columns, got {len(seen)}")
        return GenPerm(r, n, tuple(rows), tuple(exps))


def _check_compatible(a: GenPerm, b: GenPerm) -> None:
    if a.r != b.r or a.n != b.n:
        raise ValueError(f"mismatched groups: S({a.r},{a.n}) vs S({b.r},{b.n})")


def identity(r: int, n: int) -> GenPerm:
    return GenPerm(r, n, tuple(range(1, n + 1)), (0,) * n)


def generator(r: int, n: int, i: int) -> GenPerm:
    """Standard generator s_i: s_0 scales column 1 by zeta, s_i swaps columns i, i+1."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator index must lie in 0..{n - 1}, got {i!r}")
    if i == 0:
        return GenPerm(r, n, tuple(range(1, n + 1)), (1,) + (0,) * (n - 1))
    rows = list(range(1, n + 1))
    rows[i - 1], rows[i] = rows[i], rows[i - 1]
    return GenPerm(r, n, tuple(rows), (0,) * n)


def multiply(a: GenPerm, b: GenPerm) -> GenPerm:
    """Matrix product a * b."""
    _check_compatible(a, b)
    rows = tuple(a.row_of(b.row_of(c)) for c in range(1, a.n + 1))
    exps = tuple(
        (a.exp_of(b.row_of(c)) + b.exp_of(c)) % a.r for c in range(1, a.n + 1)
    )
    return GenPerm(a.r, a.n, rows, exps)


def inverse(a: GenPerm) -> GenPerm:
    rows = a._col_of_row
    exps = tuple((-a.exp_of(rows[c - 1])) % a.r for c in range(1, a.n + 1))
    return GenPerm(a.r, a.n, rows, exps)


def act_on_tuple(x: YPoint, a: GenPerm) -> YPoint:
    """Right action on coordinate tuples: row vector times matrix.

    Coordinate b of the result is x_{row_of_col[b]} with its branch advanced
    by exp_of_col[b]; magnitudes are permuted, branches shifted.
    """
    if x.r != a.r:
        raise ValueError(f"mismatched r: point has {x.r}, matrix has {a.r}")
    if x.n != a.n:
        raise ValueError(f"dimension mismatch: point has {x.n} coordinates, matrix is {a.n} x {a.n}")
    coords = []
    for b in range(1, a.n + 1):
        mag, branch = x.coords[a.row_of(b) - 1]
        coords.append((mag, branch + a.exp_of(b)))
    return YPoint(x.r, tuple(coords))


def group_order(r: int, n: int) -> int:
    return r**n * math.factorial(n)


@lru_cache(maxsize=None)
def _subgroup_closure(r: int, n: int, gens: frozenset[int]) -> frozenset[GenPerm]:
    seeds = [generator(r, n, i) for i in sorted(gens)]
    elements = {identity(r, n)}
    frontier = list(elements)
    while frontier:
        new = []
        for g in frontier:
            for s in seeds:
                h = multiply(g, s)
                if h not in elements:
                    elements.add(h)
                    new.append(h)
        frontier = new
    return frozenset(elements)


def generate_subgroup(r: int, n: int, gens: Iterable[int]) -> frozenset[GenPerm]:
    """Closure of the listed standard generators under multiplication."""
    gens = frozenset(gens)
    for i in gens:
        if not 0 <= i <= n - 1:
            raise ValueError(f"generator index must lie in 0..{n - 1}, got {i!r}")
    return _subgroup_closure(r, n, gens)


@lru_cache(maxsize=None)
def enumerate_group(r: int, n: int) -> tuple[GenPerm, ...]:
    """All elements of S(r, n), lexicographic on (row word, exponent word)."""
    out = []
    for rows in itertools.permutations(range(1, n + 1)):
        for exps in itertools.product(range(r), repeat=n):
            out.append(GenPerm(r, n, rows, exps))
    return tuple(out)
