"""Decorated nested chains, the index set shared by strata, cosets and faces.

A chain is a strictly nested list of nonempty subsets of {1,..,n} together
with a branch decoration on the largest set.  Chains are canonical: sets are
stored sorted, the decoration is stored as sorted (element, exponent) pairs,
and validation happens at construction, so any Chain in existence is valid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .group import GenPerm

__all__ = [
    "Chain",
    "make_chain",
    "enumerate_chains",
    "refines",
    "chain_dimension",
    "act_on_chain",
    "maximal_refinements",
    "coarsenings",
]


@dataclass(frozen=True)
class Chain:
    r: int
    n: int
    sets: tuple[tuple[int, ...], ...]
    decoration: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n!r}")
        sets = tuple(tuple(sorted(s)) for s in self.sets)
        prev: frozenset[int] = frozenset()
        for s in sets:
            cur = frozenset(s)
            if len(cur) != len(s):
                raise ValueError(f"repeated element in subset {s}")
            if not cur:
                raise ValueError("chain sets must be nonempty")
            if not cur > prev:
                raise ValueError(f"sets must be strictly nested, got {sets}")
            for i in s:
                if not 1 <= i <= self.n:
                    raise ValueError(f"element {i} out of range 1..{self.n}")
            prev = cur
        top = sets[-1] if sets else ()
        dec = tuple(sorted((int(i), int(e) % self.r) for i, e in self.decoration))
        if tuple(i for i, _ in dec) != top:
            raise ValueError(
                f"decoration domain {tuple(i for i, _ in dec)} must equal the largest set {top}"
            )
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "decoration", dec)

    @property
    def length(self) -> int:
        return len(self.sets)

    @property
    def top(self) -> tuple[int, ...]:
        return self.sets[-1] if self.sets else ()

    def decoration_map(self) -> dict[int, int]:
        return dict(self.decoration)

    def segments(self) -> tuple[tuple[int, ...], ...]:
        """The successive differences I_1, I_2 - I_1, ..., each sorted."""
        out = []
        prev: frozenset[int] = frozenset()
        for s in self.sets:
            cur = frozenset(s)
            out.append(tuple(sorted(cur - prev)))
            prev = cur
        return tuple(out)

    def complement(self) -> tuple[int, ...]:
        """Elements of {1,..,n} not in the largest set, sorted."""
        top = frozenset(self.top)
        return tuple(i for i in range(1, self.n + 1) if i not in top)

    def sort_key(self):
        return (self.length, self.sets, self.decoration)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "sets": [list(s) for s in self.sets],
            "decoration": {str(i): e for i, e in self.decoration},
        }

    @staticmethod
    def from_json(data: Mapping) -> "Chain":
        dec = {int(i): int(e) for i, e in data["decoration"].items()}
        return make_chain(int(data["r"]), int(data["n"]), data["sets"], dec)


def make_chain(
    r: int,
    n: int,
    sets: Iterable[Iterable[int]],
    decoration: Mapping[int, int] | Iterable[tuple[int, int]] = (),
) -> Chain:
    """Build a chain from loose pieces; sets may arrive in any order."""
    normalized = sorted((tuple(sorted(s)) for s in sets), key=lambda s: (len(s), s))
    if isinstance(decoration, Mapping):
        dec: Iterable[tuple[int, int]] = decoration.items()
    else:
        dec = decoration
    return Chain(r, n, tuple(normalized), tuple(dec))


@lru_cache(maxsize=None)
def _set_chains(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    subsets = []
    for size in range(1, n + 1):
        subsets.extend(itertools.combinations(range(1, n + 1), size))

    out: list[tuple[tuple[int, ...], ...]] = [()]

    def extend(prefix: tuple[tuple[int, ...], ...], last: frozenset[int]) -> None:
        for s in subsets:
            if len(s) > len(last) and last < frozenset(s):
                longer = prefix + (s,)
                out.append(longer)
                extend(longer, frozenset(s))

    extend((), frozenset())
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_chains(r: int, n: int) -> tuple[Chain, ...]:
    """Every chain for the given (r, n), deduplicated, in deterministic order.

    Ordered by length ascending, then lexicographically on the set list and
    the decoration.
    """
    if r < 2 or n < 0:
        raise ValueError(f"need r >= 2 and n >= 0, got r={r!r}, n={n!r}")
    chains = []
    for sets in _set_chains(n):
        top = sets[-1] if sets else ()
        for exps in itertools.product(range(r), repeat=len(top)):
            chains.append(Chain(r, n, sets, tuple(zip(top, exps))))
    chains.sort(key=Chain.sort_key)
    return tuple(chains)


def refines(fine: Chain, coarse: Chain) -> bool:
    """Whether every set of `coarse` occurs in `fine` with matching decoration."""
    if (fine.r, fine.n) != (coarse.r, coarse.n):
        raise ValueError("chains live over different (r, n)")
    if not set(coarse.sets) <= set(fine.sets):
        return False
    dec = fine.decoration_map()
    return all(dec[i] == e for i, e in coarse.decoration)


def chain_dimension(c: Chain) -> int:
    return c.n - c.length


def act_on_chain(c: Chain, a: GenPerm) -> Chain:
    """Image of a chain under the right action of a group element.

    Sets map through the support of the matrix rows; the decoration of an
    image element drops the exponent of the matrix entry that carried it.
    """
    if (c.r, c.n) != (a.r, a.n):
        raise ValueError("chain and matrix live over different (r, n)")
    sets = tuple(tuple(sorted(a.col_of_row(i) for i in s)) for s in c.sets)
    dec = []
    for i, e in c.decoration:
        col = a.col_of_row(i)
        dec.append((col, (e - a.exp_of(col)) % c.r))
    return Chain(c.r, c.n, sets, tuple(dec))


def maximal_refinements(c: Chain) -> tuple[Chain, ...]:
    """All maximal chains refining c.

    Orders each nesting gap in every possible way and extends beyond the
    largest set by every ordering and decoration of the leftover elements.
    """
    segments = c.segments()
    tail = c.complement()
    dec = c.decoration_map()
    out = []
    for seg_orders in itertools.product(*(itertools.permutations(s) for s in segments)):
        prefix = tuple(itertools.chain.from_iterable(seg_orders))
        for tail_order in itertools.permutations(tail):
            order = prefix + tail_order
            sets = tuple(tuple(sorted(order[: j + 1])) for j in range(c.n))
            for tail_exps in itertools.product(range(c.r), repeat=len(tail)):
                full = dict(dec)
                full.update(zip(tail_order, tail_exps))
                out.append(Chain(c.r, c.n, sets, tuple(full.items())))
    return tuple(out)


def coarsenings(c: Chain) -> Iterator[Chain]:
    """All chains obtained by deleting a subset of c's sets (including c itself).

    These are exactly the chains that c refines.
    """
    dec = c.decoration_map()
    for keep_mask in itertools.product((True, False), repeat=c.length):
        kept = tuple(s for s, keep in zip(c.sets, keep_mask) if keep)
        top = kept[-1] if kept else ()
        yield Chain(c.r, c.n, kept, tuple((i, dec[i]) for i in top))
