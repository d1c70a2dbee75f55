"""Boundary strata as pinwheel dual graphs.

A stratum is recorded by its generic topological type: the spoke length k
and, for each spoke component from outermost to innermost, the light orbit
members (orbit index, branch exponent) sitting on the distinguished spoke.
The remaining orbits live on the central component with all their members.
The full r-fold symmetric graph is derived from this data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .chains import Chain, refines
from .group import GenPerm

__all__ = [
    "PinwheelStratum",
    "chain_to_stratum",
    "stratum_to_chain",
    "contract_spoke_edges",
    "stratum_includes",
    "StratumFactor",
    "stratum_product_factors",
    "base_stratum",
    "act_on_zero_dim_stratum",
    "dual_graph_dot",
]


@dataclass(frozen=True)
class PinwheelStratum:
    """Dual graph of a stratum: spoke assignment of light orbits.

    spoke[j-1] lists the (orbit, exponent) light points on the j-th component
    of the distinguished spoke, outermost first.  Every spoke component must
    carry at least one light point; orbits appear at most once.
    """

    r: int
    n: int
    spoke: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n!r}")
        seen: set[int] = set()
        norm = []
        for comp in self.spoke:
            comp = tuple(sorted((int(i), int(e) % self.r) for i, e in comp))
            if not comp:
                raise ValueError("every spoke component must carry a light point")
            for i, _ in comp:
                if not 1 <= i <= self.n:
                    raise ValueError(f"orbit index {i} out of range 1..{self.n}")
                if i in seen:
                    raise ValueError(f"orbit {i} assigned to more than one component")
                seen.add(i)
            norm.append(comp)
        object.__setattr__(self, "spoke", tuple(norm))

    @property
    def k(self) -> int:
        return len(self.spoke)

    def central_orbits(self) -> tuple[int, ...]:
        assigned = {i for comp in self.spoke for i, _ in comp}
        return tuple(i for i in range(1, self.n + 1) if i not in assigned)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "k": self.k,
            "spoke": [
                [{"orbit": i, "exp": e} for i, e in comp] for comp in self.spoke
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "PinwheelStratum":
        spoke = tuple(
            tuple((int(p["orbit"]), int(p["exp"])) for p in comp)
            for comp in data["spoke"]
        )
        s = PinwheelStratum(int(data["r"]), int(data["n"]), spoke)
        if s.k != int(data["k"]):
            raise ValueError(f"stated spoke length {data['k']} differs from {s.k}")
        return s


def chain_to_stratum(c: Chain) -> PinwheelStratum:
    """Spoke component j carries the decorated members of the j-th nesting gap."""
    dec = c.decoration_map()
    spoke = tuple(
        tuple((i, dec[i]) for i in seg) for seg in c.segments()
    )
    return PinwheelStratum(c.r, c.n, spoke)


def stratum_to_chain(s: PinwheelStratum) -> Chain:
    """Read the chain back: set j indexes the orbits on the outermost j components."""
    sets = []
    acc: list[int] = []
    dec: dict[int, int] = {}
    for comp in s.spoke:
        for i, e in comp:
            acc.append(i)
            dec[i] = e
        sets.append(tuple(sorted(acc)))
    return Chain(s.r, s.n, tuple(sets), tuple(sorted(dec.items())))


def contract_spoke_edges(s: PinwheelStratum, edges: Iterable[int]) -> PinwheelStratum:
    """Contract the listed spoke edge orbits, simultaneously on all r spokes.

    Edge j joins spoke component j to component j+1, with component k+1 the
    center; contracting edge j merges component j's light points inward, and
    contracting edge k returns its orbits (as full orbits) to the center.
    """
    edge_set = set(edges)
    for e in edge_set:
        if not 1 <= e <= s.k:
            raise ValueError(f"edge index {e} out of range 1..{s.k}")
    merged: list[list[tuple[int, int]]] = []
    carry: list[tuple[int, int]] = []
    for j, comp in enumerate(s.spoke, start=1):
        carry.extend(comp)
        if j not in edge_set:
            merged.append(carry)
            carry = []
        # when j is contracted the points ride inward; past the last
        # component they dissolve into the center
    return PinwheelStratum(s.r, s.n, tuple(tuple(comp) for comp in merged))


def stratum_includes(s: PinwheelStratum, t: PinwheelStratum) -> bool:
    """Whether t arises from s by contracting spoke edges.

    Searched over all edge subsets and cross-checked against chain
    refinement; a disagreement would be a bug and raises.
    """
    if (s.r, s.n) != (t.r, t.n):
        raise ValueError("strata live over different (r, n)")
    by_contraction = any(
        contract_spoke_edges(s, edges) == t
        for size in range(s.k + 1)
        for edges in itertools.combinations(range(1, s.k + 1), size)
    )
    by_chains = refines(stratum_to_chain(s), stratum_to_chain(t))
    if by_contraction != by_chains:
        raise RuntimeError(
            f"inclusion disagreement: contraction says {by_contraction}, refinement says {by_chains}"
        )
    return by_contraction


@dataclass(frozen=True)
class StratumFactor:
    """One factor of a stratum: the central piece or one spoke component.

    `kind` is "pinwheel" for the central factor (same moduli type with fewer
    orbits) and "losev-manin" for each spoke component's chain-of-lines
    factor.  `block` is 0 for the central factor, else the component index.
    """

    kind: str
    block: int
    size: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "block": self.block, "size": self.size}


def stratum_product_factors(c: Chain) -> tuple[StratumFactor, ...]:
    """Central factor first, then one factor per spoke component outward-in."""
    factors = [StratumFactor("pinwheel", 0, len(c.complement()))]
    for j, seg in enumerate(c.segments(), start=1):
        factors.append(StratumFactor("losev-manin", j, len(seg)))
    return tuple(factors)


def base_stratum(r: int, n: int) -> PinwheelStratum:
    """The distinguished vertex stratum: orbit j sits on component n + 1 - j."""
    spoke = tuple(((n + 1 - j, 0),) for j in range(1, n + 1))
    return PinwheelStratum(r, n, spoke)


def act_on_zero_dim_stratum(s: PinwheelStratum, a: GenPerm) -> PinwheelStratum:
    """Right action on a vertex stratum by relabeling the light points.

    The new first orbit members sit where the acted tuple dictates: orbit b
    takes over the spoke position of orbit row_of_col[b], with its exponent
    reduced by the matrix exponent.
    """
    if (s.r, s.n) != (a.r, a.n):
        raise ValueError("stratum and matrix live over different (r, n)")
    if s.k != s.n:
        raise ValueError(f"need a zero-dimensional stratum, got spoke length {s.k} < {s.n}")
    position: dict[int, int] = {}
    exponent: dict[int, int] = {}
    for j, comp in enumerate(s.spoke, start=1):
        ((i, e),) = comp
        position[i] = j
        exponent[i] = e
    spoke: list[tuple[tuple[int, int], ...]] = [()] * s.n
    for b in range(1, s.n + 1):
        i = a.row_of(b)
        spoke[position[i] - 1] = ((b, (exponent[i] - a.exp_of(b)) % s.r),)
    return PinwheelStratum(s.r, s.n, tuple(spoke))


def dual_graph_dot(s: PinwheelStratum) -> str:
    """DOT rendering of the full r-fold dual graph with half-edge labels."""
    lines = ["graph dualgraph {", "  node [shape=circle];"]
    central = [f"z_{i}^{l}" for i in s.central_orbits() for l in range(s.r)]
    central_label = " ".join(["x^+", "x^-"] + central)
    lines.append(f'  center [label="{central_label}"];')
    for l in range(s.r):
        for j, comp in enumerate(s.spoke, start=1):
            marks = [f"z_{i}^{(e + l) % s.r}" for i, e in comp]
            if j == 1:
                marks.insert(0, f"y^{l}")
            label = " ".join(marks)
            lines.append(f'  c_{l}_{j} [label="C^{l}_{j}: {label}"];')
        for j in range(1, s.k):
            lines.append(f"  c_{l}_{j} -- c_{l}_{j + 1};")
        if s.k:
            lines.append(f"  c_{l}_{s.k} -- center;")
    lines.append("}")
    return "\n".join(lines) + "\n"
