"""The permutohedral complex: vertices, faces, exact membership and dimension.

The complex lives in Y^n (one root-of-unity ray bundle per coordinate) and is
cut out by bounding every subset sum of magnitudes.  Faces are intersections
with decorated-subset hyperplanes and are indexed by chains.  All tests here
are exact rational or cyclotomic comparisons.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .chains import Chain, act_on_chain, enumerate_chains, maximal_refinements
from .cyclo import YPoint, delta, hyperplane_eval, on_hyperplane
from .group import GenPerm, act_on_tuple, group_order

__all__ = [
    "DecoratedSubset",
    "DeltaFace",
    "delta",
    "YPoint",
    "chain_layers",
    "vertex_of_maximal_chain",
    "chain_to_face_vertices",
    "enumerate_vertices",
    "vertex_chain_map",
    "point_in_complex",
    "face_membership",
    "face_membership_product_form",
    "shifted_permutohedron_contains",
    "hyperplanes_to_chain",
    "face_nonempty_oracle",
    "face_dimension_bruteforce",
    "FaceFactor",
    "face_product_decomposition",
    "act_on_face",
    "hasse_dot",
    "random_ypoints",
]


@dataclass(frozen=True)
class DecoratedSubset:
    """A nonempty subset of {1,..,n} with a branch exponent on each element."""

    elements: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("decorated subset must be nonempty")
        if list(elems) != sorted(set(elems)):
            raise ValueError(f"elements must be sorted and distinct, got {elems}")
        if len(self.exps) != len(elems):
            raise ValueError("decoration must cover exactly the elements")
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @staticmethod
    def from_mapping(decoration: Mapping[int, int]) -> "DecoratedSubset":
        elems = tuple(sorted(decoration))
        return DecoratedSubset(elems, tuple(decoration[i] for i in elems))

    def mapping(self) -> dict[int, int]:
        return dict(zip(self.elements, self.exps))


def chain_layers(c: Chain) -> tuple[DecoratedSubset, ...]:
    """The decorated subsets (I_j, decoration restricted to I_j) of a chain."""
    dec = c.decoration_map()
    return tuple(
        DecoratedSubset(s, tuple(dec[i] for i in s)) for s in c.sets
    )


def vertex_of_maximal_chain(c: Chain) -> YPoint:
    """The one point of a maximal chain's face.

    The element added at step j carries magnitude n + 1 - j on the branch
    opposite to its decoration.
    """
    if c.length != c.n:
        raise ValueError(f"chain has length {c.length}, need a maximal chain of length {c.n}")
    dec = c.decoration_map()
    coords: list[tuple[Fraction, int]] = [(Fraction(0), 0)] * c.n
    for j, seg in enumerate(c.segments(), start=1):
        (i,) = seg
        coords[i - 1] = (Fraction(c.n + 1 - j), (-dec[i]) % c.r)
    return YPoint(c.r, tuple(coords))


def chain_to_face_vertices(c: Chain) -> frozenset[YPoint]:
    """Vertices of the face: one per maximal refinement of the chain."""
    return frozenset(vertex_of_maximal_chain(m) for m in maximal_refinements(c))


@dataclass(frozen=True)
class DeltaFace:
    """A face of the complex: its chain plus the derived vertex set."""

    chain: Chain
    vertices: frozenset[YPoint]

    @staticmethod
    def from_chain(c: Chain) -> "DeltaFace":
        return DeltaFace(c, chain_to_face_vertices(c))

    @property
    def dimension(self) -> int:
        return self.chain.n - self.chain.length

    def to_json(self) -> dict:
        return {
            "chain": self.chain.to_json(),
            "vertices": [v.to_json() for v in sorted(self.vertices, key=lambda p: p.coords)],
        }


@lru_cache(maxsize=None)
def enumerate_vertices(r: int, n: int) -> tuple[YPoint, ...]:
    """All vertices of the complex, ordered by their maximal chains."""
    return tuple(
        vertex_of_maximal_chain(c)
        for c in enumerate_chains(r, n)
        if c.length == n
    )


@lru_cache(maxsize=None)
def vertex_chain_map(r: int, n: int) -> dict[YPoint, Chain]:
    out: dict[YPoint, Chain] = {}
    for c in enumerate_chains(r, n):
        if c.length == n:
            out[vertex_of_maximal_chain(c)] = c
    return out


def point_in_complex(x: YPoint) -> bool:
    """Whether every subset of magnitudes sums below its size bound.

    The binding subset of each size is the one with the largest magnitudes,
    so checking descending prefix sums covers all subsets.
    """
    total = Fraction(0)
    for size, mag in enumerate(sorted(x.magnitudes(), reverse=True), start=1):
        total += mag
        if total > delta(x.n, size):
            return False
    return True


def _check_point_chain(x: YPoint, c: Chain) -> None:
    if x.r != c.r or x.n != c.n:
        raise ValueError("point and chain live over different (r, n)")


def face_membership(x: YPoint, c: Chain) -> bool:
    """Membership in the face: complex membership, pinned branches, tight sums."""
    _check_point_chain(x, c)
    if not point_in_complex(x):
        return False
    for i, a in c.decoration:
        mag, branch = x.coords[i - 1]
        if mag and branch != (-a) % c.r:
            return False
    for s in c.sets:
        if sum(x.coords[i - 1][0] for i in s) != delta(c.n, len(s)):
            return False
    return True


def shifted_permutohedron_contains(xs: Sequence[Fraction], gamma) -> bool:
    """Whether a real point lies in the permutohedron shifted by gamma.

    Proper subsets are bounded, the full sum is pinned; as in
    `point_in_complex`, descending prefixes stand in for all subsets.
    """
    m = len(xs)
    gamma = Fraction(gamma)
    ordered = sorted((Fraction(v) for v in xs), reverse=True)
    total = Fraction(0)
    for size, v in enumerate(ordered, start=1):
        total += v
        if size < m and total > delta(m, size) + size * gamma:
            return False
    return total == delta(m, m) + m * gamma


def face_membership_product_form(x: YPoint, c: Chain) -> bool:
    """Factor-by-factor membership test, equivalent to `face_membership`.

    The leftover coordinates must lie in the smaller complex, decorated
    coordinates keep their pinned branches, and each nesting gap's magnitudes
    must lie in a shifted permutohedron.
    """
    _check_point_chain(x, c)
    tail = c.complement()
    sub = YPoint(c.r, tuple(x.coords[i - 1] for i in tail))
    if not point_in_complex(sub):
        return False
    for i, a in c.decoration:
        mag, branch = x.coords[i - 1]
        if mag and branch != (-a) % c.r:
            return False
    for j, seg in enumerate(c.segments(), start=1):
        gamma = c.n - len(c.sets[j - 1])
        if not shifted_permutohedron_contains([x.coords[i - 1][0] for i in seg], gamma):
            return False
    return True


def hyperplanes_to_chain(r: int, n: int, subsets: Sequence[DecoratedSubset]) -> Chain | None:
    """Assemble a chain from decorated subsets, or None when they cannot nest.

    Succeeds exactly when the sets are totally ordered by strict inclusion
    and all decorations agree where they overlap; the chain keeps the largest
    set's decoration.
    """
    if len(set(subsets)) != len(subsets):
        raise ValueError("duplicate decorated subsets")
    ordered = sorted(subsets, key=lambda s: (len(s.elements), s.elements, s.exps))
    for prev, cur in zip(ordered, ordered[1:]):
        if not set(prev.elements) < set(cur.elements):
            return None
    top = ordered[-1].mapping() if ordered else {}
    for s in ordered[:-1]:
        if any(top[i] % r != e % r for i, e in s.mapping().items()):
            return None
    sets = tuple(s.elements for s in ordered)
    return Chain(r, n, sets, tuple(sorted((i, e % r) for i, e in top.items())))


def face_nonempty_oracle(
    r: int, n: int, subsets: Sequence[DecoratedSubset], max_vertices: int = 2000
) -> bool:
    """Whether some vertex of the complex satisfies every listed hyperplane.

    Exhaustive scan with exact cyclotomic evaluation; independent of the
    combinatorial nesting test.
    """
    order = group_order(r, n)
    if order > max_vertices:
        raise ValueError(
            f"instance has {order} vertices, above the max_vertices cap of {max_vertices}"
        )
    for v in enumerate_vertices(r, n):
        if all(on_hyperplane(v, s.elements, s.mapping()) for s in subsets):
            return True
    return False


def _affine_rank(vectors: Sequence[tuple[int, ...]]) -> int:
    if not vectors:
        return 0
    base = vectors[0]
    basis: list[list[Fraction]] = []
    for vec in vectors[1:]:
        row = [Fraction(a - b) for a, b in zip(vec, base)]
        for piv in basis:
            lead = next(i for i, v in enumerate(piv) if v)
            if row[lead]:
                factor = row[lead] / piv[lead]
                row = [a - factor * b for a, b in zip(row, piv)]
        if any(row):
            basis.append(row)
    return len(basis)


def face_dimension_bruteforce(c: Chain) -> int:
    """Dimension of the face measured from the vertices of its polytopal cells.

    Cell vertices permute each nesting gap's magnitude range and place a
    greedy descending prefix on any ordered subset of the leftover
    coordinates (unplaced coordinates sit at the origin of their ray bundle
    and so belong to every branch assignment).  Grouping by branch
    assignment, the answer is the largest affine rank over the groups.
    """
    segments = c.segments()
    tail = c.complement()
    m = len(tail)
    dec = c.decoration_map()

    points: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []
    for seg_orders in itertools.product(*(itertools.permutations(s) for s in segments)):
        mags = [0] * c.n
        pos = 1
        for seg in seg_orders:
            for i in seg:
                mags[i - 1] = c.n + 1 - pos
                pos += 1
        for t in range(m + 1):
            for placed in itertools.permutations(tail, t):
                pmags = list(mags)
                for step, i in enumerate(placed):
                    pmags[i - 1] = m - step
                for branches in itertools.product(range(c.r), repeat=t):
                    points.append((tuple(pmags), tuple(zip(placed, branches))))

    octants: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for key in itertools.product(range(c.r), repeat=m):
        wanted = dict(zip(tail, key))
        group = octants.setdefault(key, set())
        for mags, placed in points:
            if all(wanted[i] == b for i, b in placed):
                group.add(mags)

    best = 0
    ranks: dict[frozenset[tuple[int, ...]], int] = {}
    for group in octants.values():
        frozen = frozenset(group)
        if frozen not in ranks:
            ranks[frozen] = _affine_rank(sorted(frozen))
        best = max(best, ranks[frozen])
    return best


@dataclass(frozen=True)
class FaceFactor:
    """One factor of a face: the leftover complex or a shifted permutohedron.

    `kind` is "complex" (block 0, the coordinates outside the largest set) or
    "permutohedron" (block j >= 1, one nesting gap, shifted by the count of
    elements outside that set and rotated onto the decorated branches).
    """

    kind: str
    block: int
    elements: tuple[int, ...]
    size: int
    shift: int | None = None
    branch_exps: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        data: dict = {
            "kind": self.kind,
            "block": self.block,
            "elements": list(self.elements),
            "size": self.size,
        }
        if self.shift is not None:
            data["shift"] = self.shift
        if self.branch_exps is not None:
            data["branch_exps"] = {str(i): e for i, e in self.branch_exps}
        return data


def face_product_decomposition(c: Chain) -> tuple[FaceFactor, ...]:
    """Factor list of the face: leftover complex first, then one per gap."""
    dec = c.decoration_map()
    tail = c.complement()
    factors = [FaceFactor("complex", 0, tail, len(tail))]
    for j, seg in enumerate(c.segments(), start=1):
        gamma = c.n - len(c.sets[j - 1])
        exps = tuple((i, (-dec[i]) % c.r) for i in seg)
        factors.append(FaceFactor("permutohedron", j, seg, len(seg), gamma, exps))
    return tuple(factors)


def act_on_face(c: Chain, a: GenPerm, check: bool = True) -> Chain:
    """Image chain of a face under the action, with a vertex-set cross-check."""
    image = act_on_chain(c, a)
    if check:
        moved = frozenset(act_on_tuple(v, a) for v in chain_to_face_vertices(c))
        if moved != chain_to_face_vertices(image):
            raise RuntimeError("action moved the vertex set off the image face")
    return image


def hasse_dot(r: int, n: int) -> str:
    """DOT digraph of the covering relations of the refinement poset.

    Nodes carry chain JSON labels; each edge joins a chain to a chain
    obtained by deleting one of its sets (one dimension up).
    """
    chains = enumerate_chains(r, n)
    index = {c: i for i, c in enumerate(chains)}
    lines = ["digraph refinement {"]
    for i, c in enumerate(chains):
        label = json.dumps(c.to_json(), separators=(",", ":")).replace('"', '\\"')
        lines.append(f'  c{i} [label="{label}"];')
    for i, c in enumerate(chains):
        dec = c.decoration_map()
        for drop in range(c.length):
            kept = tuple(s for j, s in enumerate(c.sets) if j != drop)
            top = kept[-1] if kept else ()
            parent = Chain(c.r, c.n, kept, tuple((e, dec[e]) for e in top))
            lines.append(f"  c{i} -> c{index[parent]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def random_ypoints(r: int, n: int, count: int, seed: int) -> list[YPoint]:
    """Seeded sample of points: small-denominator magnitudes in [0, n]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coords = []
        for _ in range(n):
            den = rng.choice((1, 2, 3, 4))
            coords.append((Fraction(rng.randint(0, n * den), den), rng.randrange(r)))
        out.append(YPoint(r, tuple(coords)))
    return out
