"""Right cosets of standard-generator subgroups, and their chain dictionary.

A handle stores the generating indices together with one canonical
representative; the coset itself is the subgroup closure of the generators
multiplied on the right by the representative.  Chains and handles determine
each other: the chain's set sizes fix the row blocks, the sets fix which
columns each block hits, and the decoration fixes the column exponents.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .chains import Chain, make_chain, refines
from .group import GenPerm, generate_subgroup, multiply

__all__ = [
    "TCosetHandle",
    "t_coset",
    "chain_to_coset",
    "coset_to_chain",
    "coset_elements",
    "coset_subset",
    "CosetFactor",
    "coset_block_decomposition",
    "block_product_elements",
    "act_on_coset",
]


@dataclass(frozen=True)
class TCosetHandle:
    """(generators, canonical representative) naming one right coset.

    Build handles through `t_coset`, `chain_to_coset` or `from_json`; those
    canonicalize the representative, so equal cosets compare equal.
    """

    gens: frozenset[int]
    rep: GenPerm

    def __post_init__(self) -> None:
        gens = frozenset(self.gens)
        for i in gens:
            if not 0 <= i <= self.rep.n - 1:
                raise ValueError(f"generator index {i} out of range 0..{self.rep.n - 1}")
        object.__setattr__(self, "gens", gens)

    @property
    def r(self) -> int:
        return self.rep.r

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def dimension(self) -> int:
        return len(self.gens)

    def to_json(self) -> dict:
        return {"gens": sorted(self.gens), "rep": self.rep.to_json()}

    @staticmethod
    def from_json(data: Mapping) -> "TCosetHandle":
        return t_coset(data["gens"], GenPerm.from_json(data["rep"]))


def _block_sizes(gens: frozenset[int], n: int) -> tuple[int, ...]:
    # |I_1| < |I_2| < ... read off the missing generators.
    return tuple(sorted(n - j for j in range(n) if j not in gens))


def _chain_from_parts(gens: frozenset[int], rep: GenPerm) -> Chain:
    sizes = _block_sizes(gens, rep.n)
    sets = tuple(
        tuple(sorted(c for c in range(1, rep.n + 1) if rep.row_of(c) > rep.n - size))
        for size in sizes
    )
    top = sets[-1] if sets else ()
    dec = tuple((i, (-rep.exp_of(i)) % rep.r) for i in top)
    return Chain(rep.r, rep.n, sets, dec)


def _canonical_rep(c: Chain) -> GenPerm:
    rows = [0] * c.n
    exps = [0] * c.n
    dec = c.decoration_map()
    blocks = list(c.segments()) + [c.complement()]
    row = c.n
    for block in blocks:
        # Bottom-up within the block, columns in increasing order.
        for col in block:
            rows[col - 1] = row
            row -= 1
            exps[col - 1] = (-dec.get(col, 0)) % c.r
    return GenPerm(c.r, c.n, tuple(rows), tuple(exps))


def chain_to_coset(c: Chain) -> TCosetHandle:
    """The coset whose row blocks and column exponents realize the chain."""
    sizes = {len(s) for s in c.sets}
    gens = frozenset(i for i in range(c.n) if c.n - i not in sizes)
    return TCosetHandle(gens, _canonical_rep(c))


def coset_to_chain(h: TCosetHandle) -> Chain:
    """Read the chain back off a handle; inverse of `chain_to_coset`."""
    return _chain_from_parts(h.gens, h.rep)


def t_coset(gens: Iterable[int], rep: GenPerm) -> TCosetHandle:
    """Handle for the coset of the given generators through `rep`.

    Any representative works; it is replaced by the canonical one.
    """
    raw = TCosetHandle(frozenset(gens), rep)
    return TCosetHandle(raw.gens, _canonical_rep(_chain_from_parts(raw.gens, rep)))


def coset_elements(h: TCosetHandle) -> frozenset[GenPerm]:
    return frozenset(multiply(g, h.rep) for g in generate_subgroup(h.r, h.n, h.gens))


def coset_subset(a: TCosetHandle, b: TCosetHandle) -> bool:
    """Containment of cosets, decided two ways that must agree.

    Chain refinement is compared against brute-force element inclusion; a
    disagreement would be a bug and raises.
    """
    if (a.r, a.n) != (b.r, b.n):
        raise ValueError("cosets live in different groups")
    by_chains = refines(coset_to_chain(a), coset_to_chain(b))
    by_elements = coset_elements(a) <= coset_elements(b)
    if by_chains != by_elements:
        raise RuntimeError(
            f"containment disagreement: refinement says {by_chains}, elements say {by_elements}"
        )
    return by_elements


@dataclass(frozen=True)
class CosetFactor:
    """One block of the block-diagonal decomposition of a coset.

    `kind` is "reflection" for the top block (a full S(r, size)) and
    "symmetric" for the lower blocks (a symmetric group translated by a
    fixed diagonal of exponents).  `block` is 0 for the top block, else the
    1-based index of the chain set that produced it.
    """

    kind: str
    block: int
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    size: int
    translation: GenPerm | None

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "block": self.block,
            "rows": list(self.rows),
            "columns": list(self.columns),
            "size": self.size,
        }
        if self.translation is not None:
            data["translation"] = self.translation.to_json()
        return data


def coset_block_decomposition(c: Chain) -> tuple[CosetFactor, ...]:
    """Factors of the coset, top row block first, then lower blocks downward."""
    segments = c.segments()
    dec = c.decoration_map()
    tail = c.complement()
    factors = []
    row_hi = 0

    def add(kind: str, block: int, cols: Sequence[int]) -> None:
        nonlocal row_hi
        rows = tuple(range(row_hi + 1, row_hi + 1 + len(cols)))
        row_hi += len(cols)
        translation = None
        if kind == "symmetric":
            m = len(cols)
            exps = tuple((-dec[col]) % c.r for col in cols)
            translation = GenPerm(c.r, m, tuple(range(1, m + 1)), exps)
        factors.append(CosetFactor(kind, block, rows, tuple(cols), len(cols), translation))

    add("reflection", 0, tail)
    for j in range(c.length, 0, -1):
        add("symmetric", j, segments[j - 1])
    return tuple(factors)


def block_product_elements(c: Chain) -> frozenset[GenPerm]:
    """Reassemble the coset from its factors through the block embedding."""
    from .group import enumerate_group

    factors = coset_block_decomposition(c)
    choices = []
    for f in factors:
        if f.kind == "reflection":
            choices.append(tuple(enumerate_group(c.r, f.size)))
        else:
            perms = []
            for rows in itertools.permutations(range(1, f.size + 1)):
                p = GenPerm(c.r, f.size, rows, (0,) * f.size)
                perms.append(multiply(p, f.translation))
            choices.append(tuple(perms))
    out = set()
    for picks in itertools.product(*choices):
        rows = [0] * c.n
        exps = [0] * c.n
        for f, local in zip(factors, picks):
            for idx, col in enumerate(f.columns, start=1):
                rows[col - 1] = f.rows[0] - 1 + local.row_of(idx)
                exps[col - 1] = local.exp_of(idx)
        out.add(GenPerm(c.r, c.n, tuple(rows), tuple(exps)))
    return frozenset(out)


def act_on_coset(h: TCosetHandle, b: GenPerm) -> TCosetHandle:
    """Right action: same generators, representative multiplied by b."""
    if (h.r, h.n) != (b.r, b.n):
        raise ValueError("coset and matrix live in different groups")
    return t_coset(h.gens, multiply(h.rep, b))


def coset_size(c: Chain) -> int:
    """Size of the coset predicted by the factor arithmetic."""
    m = len(c.complement())
    size = c.r**m * math.factorial(m)
    for seg in c.segments():
        size *= math.factorial(len(seg))
    return size
