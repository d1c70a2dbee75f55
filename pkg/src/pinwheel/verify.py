"""Cross-validation suites for the three-way correspondence.

Each suite exhaustively checks one family of claims at desk scale and
returns a structured report: object counts per dimension plus a list of
violation strings (expected empty).  Instances above the configured caps
are refused unless the caps are raised explicitly.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence, TypeVar

from .chains import Chain, act_on_chain, coarsenings, enumerate_chains
from .cosets import (
    act_on_coset,
    chain_to_coset,
    coset_block_decomposition,
    coset_elements,
    coset_size,
    coset_to_chain,
)
from .cyclo import YPoint, on_hyperplane
from .faces import (
    DecoratedSubset,
    chain_to_face_vertices,
    enumerate_vertices,
    face_dimension_bruteforce,
    face_product_decomposition,
    hyperplanes_to_chain,
    vertex_of_maximal_chain,
)
from .group import GenPerm, act_on_tuple, enumerate_group, group_order, multiply
from .strata import (
    act_on_zero_dim_stratum,
    chain_to_stratum,
    contract_spoke_edges,
    stratum_product_factors,
    stratum_to_chain,
)

__all__ = [
    "CapExceeded",
    "VerifyConfig",
    "Report",
    "verify_threeway",
    "verify_equivariance",
    "verify_products",
    "verify_nonemptiness",
    "verify_all",
    "SUITES",
]

T = TypeVar("T")
U = TypeVar("U")


class CapExceeded(ValueError):
    """An instance is larger than a configured size cap allows."""


@dataclass(frozen=True)
class VerifyConfig:
    """Size caps for the suites; raise them to verify beyond desk scale."""

    max_group_order: int = 2000
    max_families: int = 60000
    threads: int = 1


DEFAULT_CONFIG = VerifyConfig()


@dataclass
class Report:
    suite: str
    r: int
    n: int
    counts_by_dim: list[int]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "r": self.r,
            "n": self.n,
            "counts_by_dim": self.counts_by_dim,
            "violations": list(self.violations),
        }


def _check_order_cap(r: int, n: int, config: VerifyConfig) -> None:
    order = group_order(r, n)
    if order > config.max_group_order:
        raise CapExceeded(
            f"group order {order} for (r={r}, n={n}) exceeds max_group_order={config.max_group_order}"
        )


def _counts_by_dim(chains: Sequence[Chain], n: int) -> list[int]:
    counts = [0] * (n + 1)
    for c in chains:
        counts[c.n - c.length] += 1
    return counts


def _pmap(fn: Callable[[T], U], items: Sequence[T], threads: int) -> list[U]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _relation_via_memberships(owned: dict[int, frozenset]) -> frozenset[tuple[int, int]]:
    # Invert "object index -> items" to "item -> object indices", then a
    # coset/face is contained in another exactly when every one of its items
    # is; intersecting the member sets avoids the quadratic pair scan.
    members: dict[object, set[int]] = {}
    for idx, items in owned.items():
        for item in items:
            members.setdefault(item, set()).add(idx)
    pairs = set()
    for idx, items in owned.items():
        common: set[int] | None = None
        for item in items:
            common = members[item] if common is None else common & members[item]
            if not common:
                break
        for other in common or ():
            pairs.add((idx, other))
    return frozenset(pairs)


def verify_threeway(r: int, n: int, config: VerifyConfig = DEFAULT_CONFIG) -> Report:
    """Roundtrips, dimension agreement, and the four-way inclusion equivalence."""
    _check_order_cap(r, n, config)
    chains = enumerate_chains(r, n)
    index = {c: i for i, c in enumerate(chains)}
    report = Report("threeway", r, n, _counts_by_dim(chains, n))
    fail = report.violations.append

    strata = {}
    for c in chains:
        h = chain_to_coset(c)
        if coset_to_chain(h) != c:
            fail(f"coset roundtrip broke on {c.to_json()}")
        s = chain_to_stratum(c)
        strata[index[c]] = s
        if stratum_to_chain(s) != c:
            fail(f"stratum roundtrip broke on {c.to_json()}")
        dims = {
            "chain": n - c.length,
            "coset": h.dimension,
            "stratum": n - s.k,
        }
        if len(set(dims.values())) != 1:
            fail(f"dimension mismatch {dims} on {c.to_json()}")

    face_dims = _pmap(face_dimension_bruteforce, chains, config.threads)
    for c, dim in zip(chains, face_dims):
        if dim != n - c.length:
            fail(f"face dimension oracle gave {dim}, expected {n - c.length} on {c.to_json()}")

    seen_vertices: dict[YPoint, Chain] = {}
    for c in chains:
        if c.length == n:
            v = vertex_of_maximal_chain(c)
            if v in seen_vertices:
                fail(f"vertex collision between {seen_vertices[v].to_json()} and {c.to_json()}")
            seen_vertices[v] = c
    if len(seen_vertices) != group_order(r, n):
        fail(f"vertex census {len(seen_vertices)} != {group_order(r, n)}")

    refine_pairs = set()
    for c in chains:
        for coarse in coarsenings(c):
            refine_pairs.add((index[c], index[coarse]))
    relations = {"refinement": frozenset(refine_pairs)}

    relations["coset"] = _relation_via_memberships(
        {i: coset_elements(chain_to_coset(c)) for i, c in enumerate(chains)}
    )
    relations["face"] = _relation_via_memberships(
        {i: chain_to_face_vertices(c) for i, c in enumerate(chains)}
    )

    stratum_index = {s: i for i, s in strata.items()}
    stratum_pairs = set()
    for i, s in strata.items():
        for size in range(s.k + 1):
            for edges in itertools.combinations(range(1, s.k + 1), size):
                stratum_pairs.add((i, stratum_index[contract_spoke_edges(s, edges)]))
    relations["stratum"] = frozenset(stratum_pairs)

    base = relations["refinement"]
    for name in ("coset", "face", "stratum"):
        if relations[name] != base:
            for i, j in sorted(base ^ relations[name]):
                fail(
                    f"inclusion mismatch ({name}) between {chains[i].to_json()} and {chains[j].to_json()}"
                )
    return report


def verify_equivariance(r: int, n: int, config: VerifyConfig = DEFAULT_CONFIG) -> Report:
    """Group action compatibility across chains, cosets, faces and vertex strata."""
    _check_order_cap(r, n, config)
    chains = enumerate_chains(r, n)
    group = enumerate_group(r, n)
    report = Report("equivariance", r, n, _counts_by_dim(chains, n))
    fail = report.violations.append

    vertices = {c: chain_to_face_vertices(c) for c in chains}
    handles = {c: chain_to_coset(c) for c in chains}
    elements = {c: coset_elements(handles[c]) for c in chains}
    base = YPoint(r, tuple((i, 0) for i in range(1, n + 1)))

    for c in chains:
        reinterpretation = frozenset(
            a for a in group if act_on_tuple(base, a) in vertices[c]
        )
        if reinterpretation != elements[c]:
            fail(f"vertex-orbit reinterpretation broke on {c.to_json()}")

    for c in chains:
        for a in group:
            image = act_on_chain(c, a)
            if frozenset(act_on_tuple(v, a) for v in vertices[c]) != vertices[image]:
                fail(f"face action broke on {c.to_json()} by {a.to_json()}")
            acted = act_on_coset(handles[c], a)
            if acted != handles[image]:
                fail(f"coset action missed the image coset on {c.to_json()} by {a.to_json()}")
            if frozenset(multiply(e, a) for e in elements[c]) != coset_elements(acted):
                fail(f"coset element action broke on {c.to_json()} by {a.to_json()}")

    for c in chains:
        if c.length != n:
            continue
        s = chain_to_stratum(c)
        for a in group:
            if act_on_zero_dim_stratum(s, a) != chain_to_stratum(act_on_chain(c, a)):
                fail(f"vertex stratum action broke on {c.to_json()} by {a.to_json()}")
    return report


def verify_products(r: int, n: int, config: VerifyConfig = DEFAULT_CONFIG) -> Report:
    """Factor lists agree across the three families and match the cardinalities."""
    _check_order_cap(r, n, config)
    chains = enumerate_chains(r, n)
    report = Report("products", r, n, _counts_by_dim(chains, n))
    fail = report.violations.append

    for c in chains:
        stratum_sizes = {f.block: f.size for f in stratum_product_factors(c)}
        coset_sizes = {f.block: f.size for f in coset_block_decomposition(c)}
        face_sizes = {f.block: f.size for f in face_product_decomposition(c)}
        if not stratum_sizes == coset_sizes == face_sizes:
            fail(
                f"factor lists disagree on {c.to_json()}: "
                f"strata {stratum_sizes}, cosets {coset_sizes}, faces {face_sizes}"
            )
        if len(coset_elements(chain_to_coset(c))) != coset_size(c):
            fail(f"coset cardinality does not match factor arithmetic on {c.to_json()}")
        m = stratum_sizes[0]
        spoke_dims = sum(size - 1 for block, size in stratum_sizes.items() if block)
        if m + spoke_dims != n - c.length:
            fail(f"factor dimensions do not sum to the face dimension on {c.to_json()}")
    return report


def verify_nonemptiness(r: int, n: int, config: VerifyConfig = DEFAULT_CONFIG) -> Report:
    """Nesting-sortability against the exhaustive vertex scan, per hyperplane family."""
    _check_order_cap(r, n, config)
    chains = enumerate_chains(r, n)
    report = Report("nonempty", r, n, _counts_by_dim(chains, n))
    fail = report.violations.append

    subsets: list[DecoratedSubset] = []
    for size in range(1, n + 1):
        for elems in itertools.combinations(range(1, n + 1), size):
            for exps in itertools.product(range(r), repeat=size):
                subsets.append(DecoratedSubset(elems, exps))

    family_count = sum(math.comb(len(subsets), size) for size in range(1, n + 1))
    if family_count > config.max_families:
        raise CapExceeded(
            f"{family_count} hyperplane families for (r={r}, n={n}) "
            f"exceed max_families={config.max_families}"
        )

    vertices = enumerate_vertices(r, n)
    on_ids: dict[DecoratedSubset, frozenset[int]] = {}
    for s in subsets:
        dec = s.mapping()
        on_ids[s] = frozenset(
            i for i, v in enumerate(vertices) if on_hyperplane(v, s.elements, dec)
        )
    vertex_ids = {v: i for i, v in enumerate(vertices)}
    face_ids = {
        c: frozenset(vertex_ids[v] for v in chain_to_face_vertices(c)) for c in chains
    }

    everything = frozenset(range(len(vertices)))
    for size in range(1, n + 1):
        for family in itertools.combinations(subsets, size):
            chain = hyperplanes_to_chain(r, n, family)
            hit = everything
            for s in family:
                hit &= on_ids[s]
                if not hit:
                    break
            if (chain is not None) != bool(hit):
                fail(f"sortability and vertex scan disagree on {[f.mapping() for f in family]}")
            elif chain is not None and hit != face_ids[chain]:
                fail(f"hyperplane intersection is not the face's vertex set on {chain.to_json()}")
    return report


SUITES: dict[str, Callable[[int, int, VerifyConfig], Report]] = {
    "threeway": verify_threeway,
    "equivariance": verify_equivariance,
    "products": verify_products,
    "nonempty": verify_nonemptiness,
}


def verify_all(r: int, n: int, config: VerifyConfig = DEFAULT_CONFIG) -> list[Report]:
    return [SUITES[name](r, n, config) for name in ("threeway", "equivariance", "products", "nonempty")]
