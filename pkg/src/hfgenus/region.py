"""Upward-closed subsets of the nonnegative lattice orthant.

A region is stored as its finite antichain of minimal generators; membership
means dominating some generator.  The genus region of a link is the set of
nonnegative lattice points where h vanishes; its complement is finite in every
bounded window, which is what a staircase plot draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import HfgenusError, StabilizationError
from .hfunction import HTable, table_for
from .linkcat import LinkDescriptor, sublink


def dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise x >= y."""
    return all(a >= b for a, b in zip(x, y))


def minimalize(points: Iterable[Sequence[int]]) -> tuple:
    """Minimal elements of the given set, sorted for deterministic output."""
    pts = sorted(set(tuple(p) for p in points))
    keep = []
    for p in pts:
        if any(dominates(p, q) for q in keep):
            continue
        keep = [q for q in keep if not dominates(q, p)]
        keep.append(p)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class UpwardClosedRegion:
    n: int
    generators: tuple

    def __post_init__(self):
        gens = minimalize(self.generators)
        if any(len(g) != self.n for g in gens):
            raise ValueError("generator dimension mismatch")
        if any(x < 0 for g in gens for x in g):
            raise ValueError("generators must be nonnegative")
        object.__setattr__(self, "generators", gens)

    def contains(self, x: Sequence[int]) -> bool:
        x = tuple(x)
        if len(x) != self.n:
            raise ValueError("point dimension mismatch")
        return any(dominates(x, g) for g in self.generators)

    __contains__ = contains

    def is_empty(self) -> bool:
        return not self.generators

    def min_generator_sum(self) -> int:
        if not self.generators:
            raise ValueError("empty region has no generators")
        return min(sum(g) for g in self.generators)


def membership(r: UpwardClosedRegion, x) -> bool:
    return r.contains(x)


def region_from_h(table: HTable) -> UpwardClosedRegion:
    """Minimal generators of the set of nonnegative points with h = 0.

    Sweeps the nonnegative part of the table box in increasing coordinate-sum
    order; stabilization (checked by the table validator) guarantees the
    generators are found inside the box.
    """
    table.require_valid()
    M = table.M
    pts = sorted(product(range(M + 1), repeat=table.n), key=lambda p: (sum(p), p))
    gens: list = []
    for p in pts:
        if any(dominates(p, g) for g in gens):
            continue
        if table.h(p) == 0:
            gens.append(p)
    region = UpwardClosedRegion(table.n, tuple(gens))
    if any(x >= M for g in region.generators for x in g):
        raise StabilizationError(
            f"{table.link.name}: region generator on the box boundary; "
            f"the box is too small to trust")
    return region


def maximal_lattice_points(table: HTable) -> tuple:
    """Nonnegative points outside the region all of whose upper neighbors are in.

    Each maximal point z is certified through the inclusion-exclusion identity:
    the Euler characteristic at z+1 must be (-1)^(n-1).
    """
    table.require_valid()
    M = table.M
    n = table.n
    out = []
    for z in product(range(M), repeat=n):
        if table.h(z) == 0:
            continue
        if all(table.h(z[:i] + (z[i] + 1,) + z[i + 1:]) == 0 for i in range(n)):
            certificate = table.chi_from_H(tuple(x + 1 for x in z))
            if certificate != (-1) ** (n - 1):
                raise HfgenusError(
                    f"{table.link.name}: internal consistency failure at maximal "
                    f"point {z}: chi at z+1 is {certificate}, expected {(-1) ** (n - 1)}")
            out.append(z)
    return tuple(sorted(out))


def region_product(r1: UpwardClosedRegion, r2: UpwardClosedRegion) -> UpwardClosedRegion:
    """Region of a disjoint union: concatenate generator coordinates pairwise."""
    if r1.is_empty() or r2.is_empty():
        return UpwardClosedRegion(r1.n + r2.n, ())
    return UpwardClosedRegion(
        r1.n + r2.n,
        tuple(g1 + g2 for g1 in r1.generators for g2 in r2.generators))


def projection_check(d: LinkDescriptor, r: UpwardClosedRegion) -> list:
    """Every generator, with any one coordinate dropped, must lie in the region
    of the corresponding component-deleted sublink.  Returns violations."""
    if d.n != r.n:
        raise ValueError("region dimension does not match the link")
    problems = []
    if d.n == 1:
        return problems  # deleting the only component leaves the empty link
    for i in range(d.n):
        rest = tuple(j for j in range(d.n) if j != i)
        sub_region = region_from_h(table_for(sublink(d, rest)))
        for g in r.generators:
            proj = tuple(g[j] for j in rest)
            if not sub_region.contains(proj):
                problems.append(
                    f"generator {g} projects outside the region of the sublink "
                    f"with component {i + 1} deleted")
    return problems
