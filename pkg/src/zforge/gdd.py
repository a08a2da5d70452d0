"""Constructors and verifier for group divisible designs with block size 3.

A 3-GDD is a linear space whose edges split into triples (the blocks)
and a set of groups partitioning the vertex set; every cross-group pair
lies in exactly one triple and no triple meets a group twice.

Types are written multiplicatively: 4^3 2^6 means three groups of size
4 and six of size 2.  Uniform types h^w and one-irregular types g^1 h^w
are built by direct recipe or by running the triangle engine on the
complete multipartite graph; type 4^u 2^v is built by the recursion
proved here (group filling of a host design), with five small base
designs embedded as constant tables.  Every constructed design is
re-verified before it is returned.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple, Optional

from zforge.hypercore import Hypergraph, Graph
from zforge.triangles import (
    BudgetExhaustedError,
    triangle_decompose,
    STATUS_OK,
    STATUS_BUDGET,
)
from zforge import gdd_base


class InadmissibleError(ValueError):
    """The requested group type violates a stated existence condition."""


@dataclass(frozen=True)
class GddType:
    """Multiset of group sizes as ((size, count), ...), sizes distinct."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted(((s, c) for s, c in self.parts), key=lambda p: -p[0]))
        object.__setattr__(self, "parts", parts)
        sizes = [s for s, _ in parts]
        if len(sizes) != len(set(sizes)):
            raise ValueError("group sizes must be distinct")
        if any(s < 1 or c < 1 for s, c in parts):
            raise ValueError("sizes and counts must be positive")

    @classmethod
    def parse(cls, text: str) -> "GddType":
        """Parse whitespace-separated size^count tokens, e.g. '4^3 2^6'."""
        parts = []
        for token in text.split():
            match = re.fullmatch(r"(\d+)\^(\d+)", token)
            if not match:
                raise ValueError(f"bad group-type token {token!r}; expected size^count")
            parts.append((int(match.group(1)), int(match.group(2))))
        if not parts:
            raise ValueError("empty group type")
        return cls(tuple(parts))

    def __str__(self) -> str:
        return " ".join(f"{s}^{c}" for s, c in self.parts)

    @property
    def vertex_count(self) -> int:
        return sum(s * c for s, c in self.parts)

    def group_sizes(self) -> list[int]:
        sizes: list[int] = []
        for s, c in self.parts:
            sizes.extend([s] * c)
        return sizes


@dataclass(frozen=True)
class Gdd:
    m: int
    groups: tuple[tuple[int, ...], ...]
    triples: tuple[tuple[int, int, int], ...]

    def type_signature(self) -> GddType:
        counts: dict[int, int] = {}
        for g in self.groups:
            counts[len(g)] = counts.get(len(g), 0) + 1
        return GddType(tuple(counts.items()))


class GddVerification(NamedTuple):
    passed: bool
    failures: tuple[str, ...]


def verify_gdd(design: Gdd, claimed: Optional[GddType] = None) -> GddVerification:
    """Check partition, within-group triples, exact cross-pair coverage."""
    failures: list[str] = []
    seen = sorted(v for g in design.groups for v in g)
    if seen != list(range(design.m)):
        failures.append("groups do not partition the vertex set")
        return GddVerification(False, tuple(failures))
    group_of = {}
    for gi, g in enumerate(design.groups):
        for v in g:
            group_of[v] = gi
    covered: dict[tuple[int, int], int] = {}
    for t in design.triples:
        if len(set(t)) != 3 or any(v < 0 or v >= design.m for v in t):
            failures.append(f"bad triple {t}")
            continue
        gids = [group_of[v] for v in t]
        if len(set(gids)) != 3:
            failures.append(f"triple {t} meets a group twice")
        for p in combinations(sorted(t), 2):
            covered[p] = covered.get(p, 0) + 1
    for p, cnt in covered.items():
        if cnt > 1:
            failures.append(f"pair {p} covered {cnt} times")
            break
    cross = comb(design.m, 2) - sum(comb(len(g), 2) for g in design.groups)
    if len(covered) != cross or 3 * len(design.triples) != cross:
        failures.append(
            f"cross-pair coverage: {len(covered)} covered, "
            f"{len(design.triples)} triples, {cross} cross pairs"
        )
    if claimed is not None and design.type_signature() != claimed:
        failures.append(
            f"type mismatch: built {design.type_signature()}, claimed {claimed}"
        )
    return GddVerification(not failures, tuple(failures))


def _groups_for_sizes(sizes: list[int]) -> tuple[tuple[int, ...], ...]:
    groups = []
    v = 0
    for s in sizes:
        groups.append(tuple(range(v, v + s)))
        v += s
    return tuple(groups)


def _cross_graph(m: int, groups: tuple[tuple[int, ...], ...]) -> Graph:
    pairs = set(combinations(range(m), 2))
    for g in groups:
        pairs -= set(combinations(g, 2))
    return Graph(m, frozenset(pairs))


_ENGINE_RETRIES = 5
_cache: dict[tuple, Gdd] = {}


def _from_multipartite(sizes: list[int], seed: int) -> Gdd:
    """Run the triangle engine on the complete multipartite graph."""
    key = ("mp", tuple(sizes))
    if key in _cache and seed == 0:
        return _cache[key]
    m = sum(sizes)
    groups = _groups_for_sizes(sizes)
    g = _cross_graph(m, groups)
    for attempt in range(_ENGINE_RETRIES):
        result = triangle_decompose(g, seed + attempt)
        if result.status == STATUS_OK:
            design = Gdd(m, groups, result.triangles.triangles)
            check = verify_gdd(design)
            assert check.passed, check.failures
            if seed == 0:
                _cache[key] = design
            return design
        if result.status != STATUS_BUDGET:
            raise InadmissibleError(
                f"no 3-GDD with group sizes {sizes}: {result.obstruction}"
            )
    raise BudgetExhaustedError(f"engine budget exhausted for group sizes {sizes}")


class Admissibility(NamedTuple):
    ok: bool
    reason: Optional[str]


def admissible_4u2v(u: int, v: int) -> Admissibility:
    """Existence conditions for a 3-GDD of type 4^u 2^v."""
    if u < 0 or v < 0:
        return Admissibility(False, "u and v must be nonnegative")
    if u % 3 == 2:
        return Admissibility(False, "u = 2 (mod 3)")
    if v % 3 == 2:
        return Admissibility(False, "v = 2 (mod 3)")
    if u % 3 != 0 and v % 3 != 0:
        return Admissibility(False, "neither u nor v = 0 (mod 3)")
    return Admissibility(True, None)


def construct_uniform(h: int, w: int, seed: int = 0) -> Gdd:
    """3-GDD of type h^w; exists iff w >= 3 or w = 1, (w-1)h even,
    and w(w-1)h^2 = 0 (mod 6)."""
    if h < 1 or w < 1:
        raise ValueError("h and w must be positive")
    if w == 2:
        raise InadmissibleError("uniform: w = 2 is never admissible")
    if w != 1 and w < 3:
        raise InadmissibleError("uniform: need w >= 3 or w = 1")
    if ((w - 1) * h) % 2 != 0:
        raise InadmissibleError("uniform: (w-1)h must be even")
    if (w * (w - 1) * h * h) % 6 != 0:
        raise InadmissibleError("uniform: w(w-1)h^2 must be 0 (mod 6)")
    if w == 1:
        return Gdd(h, (tuple(range(h)),), ())
    return _from_multipartite([h] * w, seed)


def construct_one_irregular(g: int, h: int, w: int, seed: int = 0) -> Gdd:
    """3-GDD of type g^1 h^w (one group of size g, w of size h)."""
    if g < 1 or h < 1 or w < 1:
        raise ValueError("g, h, w must be positive")
    if g == h:
        raise ValueError("one-irregular type needs g != h")
    if w < 3:
        raise InadmissibleError("one-irregular: need w >= 3")
    if g > h * (w - 1):
        raise InadmissibleError("one-irregular: need g <= h(w-1)")
    if (h * (w - 1) + g) % 2 != 0:
        raise InadmissibleError("one-irregular: h(w-1)+g must be even")
    if (h * w) % 2 != 0:
        raise InadmissibleError("one-irregular: hw must be even")
    if (h * h * w * (w - 1) // 2 + g * h * w) % 3 != 0:
        raise InadmissibleError("one-irregular: h^2 w(w-1)/2 + ghw must be 0 (mod 3)")
    return _from_multipartite([g] + [h] * w, seed)


def fill_group(host: Gdd, group_index: int, filler: Gdd) -> Gdd:
    """Replace one group of the host with a whole design on its vertices.

    The filler's groups, relabelled onto the replaced group's vertices,
    become groups of the result; its triples are added to the host's.
    """
    if not 0 <= group_index < len(host.groups):
        raise IndexError(f"group index {group_index} out of range")
    target = host.groups[group_index]
    if filler.m != len(target):
        raise ValueError(
            f"filler has {filler.m} vertices, group has {len(target)}"
        )
    relabel = dict(enumerate(target))
    new_groups = tuple(
        g for i, g in enumerate(host.groups) if i != group_index
    ) + tuple(tuple(sorted(relabel[v] for v in g)) for g in filler.groups)
    new_triples = host.triples + tuple(
        tuple(sorted(relabel[v] for v in t)) for t in filler.triples
    )
    result = Gdd(host.m, new_groups, new_triples)
    check = verify_gdd(result)
    assert check.passed, check.failures
    return result


def construct_4u2v(u: int, v: int, seed: int = 0) -> Gdd:
    """3-GDD of type 4^u 2^v by the group-filling recursion."""
    adm = admissible_4u2v(u, v)
    if not adm.ok:
        raise InadmissibleError(f"type 4^{u} 2^{v} inadmissible: {adm.reason}")
    if u == 0 and v == 0:
        return Gdd(0, (), ())
    if v == 0:
        if u == 1:
            return Gdd(4, (tuple(range(4)),), ())
        return construct_uniform(4, u, seed)
    if u == 0:
        if v == 1:
            return Gdd(2, (tuple(range(2)),), ())
        return construct_uniform(2, v, seed)
    if u == 1:
        return construct_one_irregular(4, 2, v, seed)
    if v == 1:
        return construct_one_irregular(2, 4, u, seed)

    base = gdd_base.lookup(u, v)
    if base is not None:
        return base

    if u % 3 == 0:
        if v <= 2 * u - 2:
            host = construct_one_irregular(2 * v, 4, u, seed)
            index = next(i for i, g in enumerate(host.groups) if len(g) == 2 * v)
            return fill_group(host, index, construct_4u2v(0, v, seed))
        if v == 2 * u - 1:
            raise AssertionError("v = 2u-1 cannot be admissible when u = 0 (mod 3)")
        if v == 2 * u:
            # u = 3 is the embedded base design; here u >= 6
            host = construct_uniform(12, 2 * u // 3, seed)
            design = host
            quarters = construct_uniform(4, 3, seed)
            halves = construct_uniform(2, 6, seed)
            for k in range(2 * u // 3):
                filler = quarters if k < u // 3 else halves
                index = next(i for i, g in enumerate(design.groups) if len(g) == 12)
                design = fill_group(design, index, filler)
            return design
        # v >= 2u+1
        host = construct_one_irregular(4 * u, 2, v, seed)
        index = next(i for i, g in enumerate(host.groups) if len(g) == 4 * u)
        return fill_group(host, index, construct_4u2v(u, 0, seed))

    # u = 1 (mod 3), u >= 4, hence v = 0 (mod 3), v >= 3
    assert 4 * u + 2 * v >= 40, "small cases are embedded base designs"
    ell = 4 if v % 6 == 0 else 10
    w = (4 * u + 2 * v - ell) // 12
    host = construct_one_irregular(ell, 12, w, seed)
    design = host
    quarters = construct_uniform(4, 3, seed)
    halves = construct_uniform(2, 6, seed)
    n_quarters = (u - 1) // 3
    n_halves = (2 * v + 4 - ell) // 12
    assert n_quarters + n_halves == w
    for k in range(w):
        filler = quarters if k < n_quarters else halves
        index = next(i for i, g in enumerate(design.groups) if len(g) == 12)
        design = fill_group(design, index, filler)
    if ell == 10:
        index = next(i for i, g in enumerate(design.groups) if len(g) == 10)
        design = fill_group(design, index, construct_4u2v(1, 3, seed))
    return design


def to_linear_space(design: Gdd, drop_singletons: bool = False) -> Hypergraph:
    """Hypergraph whose edges are the triples plus the groups.

    Together they cover every pair exactly once.  Size-1 groups are
    omitted when drop_singletons is set.
    """
    edges = [t for t in design.triples]
    for g in design.groups:
        if len(g) == 1 and drop_singletons:
            continue
        edges.append(g)
    return Hypergraph(design.m, tuple(edges)).canonical()
