"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pinwheel import Chain, GenPerm


SMALL_RN = [(2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 2)]


def random_genperm(r: int, n: int, rng: random.Random) -> GenPerm:
    rows = list(range(1, n + 1))
    rng.shuffle(rows)
    exps = tuple(rng.randrange(r) for _ in range(n))
    return GenPerm(r, n, tuple(rows), exps)


@st.composite
def genperms(draw, r: int | None = None, n: int | None = None):
    r = r if r is not None else draw(st.integers(min_value=2, max_value=5))
    n = n if n is not None else draw(st.integers(min_value=0, max_value=4))
    rows = draw(st.permutations(list(range(1, n + 1))))
    exps = draw(st.lists(st.integers(0, r - 1), min_size=n, max_size=n))
    return GenPerm(r, n, tuple(rows), tuple(exps))


@st.composite
def chains_over(draw, r: int | None = None, n: int | None = None):
    r = r if r is not None else draw(st.integers(min_value=2, max_value=4))
    n = n if n is not None else draw(st.integers(min_value=0, max_value=4))
    order = draw(st.permutations(list(range(1, n + 1))))
    k = draw(st.integers(min_value=0, max_value=n))
    cuts = sorted(draw(st.sets(st.integers(1, n), min_size=0, max_size=k))) if n else []
    sets = tuple(tuple(sorted(order[:cut])) for cut in cuts)
    top = sets[-1] if sets else ()
    dec = tuple((i, draw(st.integers(0, r - 1))) for i in top)
    return Chain(r, n, sets, dec)


class DenseMatrix:
    """Independent oracle: a generalized permutation matrix held densely.

    Entries are None (zero) or an exponent in Z_r; multiplication follows
    the plain matrix product.
    """

    def __init__(self, r: int, entries: list[list[int | None]]):
        self.r = r
        self.entries = entries

    @classmethod
    def from_genperm(cls, g: GenPerm) -> "DenseMatrix":
        entries: list[list[int | None]] = [[None] * g.n for _ in range(g.n)]
        for col in range(1, g.n + 1):
            entries[g.row_of(col) - 1][col - 1] = g.exp_of(col)
        return cls(g.r, entries)

    def __mul__(self, other: "DenseMatrix") -> "DenseMatrix":
        n = len(self.entries)
        out: list[list[int | None]] = [[None] * n for _ in range(n)]
        for a in range(n):
            for c in range(n):
                for b in range(n):
                    left, right = self.entries[a][b], other.entries[b][c]
                    if left is not None and right is not None:
                        assert out[a][c] is None, "two nonzero terms in a product entry"
                        out[a][c] = (left + right) % self.r
        return DenseMatrix(self.r, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DenseMatrix) and (self.r, self.entries) == (other.r, other.entries)


def brute_force_in_complex(x) -> bool:
    """All-subsets oracle for membership in the complex."""
    from pinwheel import delta

    n = x.n
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            if sum(x.magnitude(i) for i in subset) > delta(n, size):
                return False
    return True


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
