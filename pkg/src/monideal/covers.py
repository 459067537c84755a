"""Vertex covers, h(I), unmixedness and dim S/I = n - h(I)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import MonomialIdeal, require_proper


@dataclass(frozen=True)
class CoverReport:
    n: int
    minimal_covers: tuple[tuple[int, ...], ...]  # 0-based, each sorted
    h: int
    unmixed: bool

    @property
    def dim(self) -> int:
        return self.n - self.h


def support_edges(ideal: MonomialIdeal) -> list[int]:
    """Supports of the generators as bitmasks, keeping only inclusion-minimal ones."""
    masks = set()
    for g in ideal.gens:
        masks.add(sum(1 << i for i, e in enumerate(g) if e))
    return [m for m in masks if not any(o != m and o & m == o for o in masks)]


def is_vertex_cover(ideal: MonomialIdeal, cover) -> bool:
    require_proper(ideal)
    w = set(cover)
    if any(not 0 <= i < ideal.n for i in w):
        raise ValueError(f"cover {sorted(w)} is not a subset of range({ideal.n})")
    return all(any(g[i] for i in w) for g in ideal.gens)


def _transversals(edges: list[int], n: int) -> list[int]:
    """All minimal transversals of the hypergraph, as bitmasks.

    Branch on the first edge not yet hit; in the branch for its k-th vertex
    the earlier vertices of that edge are forbidden, so every transversal is
    reached at most once.  Leaves are kept iff each chosen vertex has a
    private edge.
    """
    edges = sorted(edges, key=lambda m: (bin(m).count("1"), m))
    found: list[int] = []

    def minimal(chosen: int) -> bool:
        for v in range(n):
            bit = 1 << v
            if chosen & bit and not any(e & chosen == bit for e in edges):
                return False
        return True

    def rec(chosen: int, forbidden: int) -> None:
        for e in edges:
            if not e & chosen:
                break
        else:
            if minimal(chosen):
                found.append(chosen)
            return
        # adding vertices only destroys private edges, so prune early
        if not minimal(chosen):
            return
        free = e & ~forbidden
        for v in range(n):
            bit = 1 << v
            if free & bit:
                rec(chosen | bit, forbidden)
                forbidden |= bit

    rec(0, 0)
    return found


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def minimal_vertex_covers(ideal: MonomialIdeal) -> CoverReport:
    require_proper(ideal)
    masks = _transversals(support_edges(ideal), ideal.n)
    covers = tuple(sorted(_mask_to_tuple(m) for m in masks))
    sizes = {len(c) for c in covers}
    return CoverReport(ideal.n, covers, min(sizes), len(sizes) == 1)


def brute_force_covers(ideal: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Minimal covers by checking every subset; the oracle for small ``n``."""
    require_proper(ideal)
    found: list[tuple[int, ...]] = []
    for size in range(ideal.n + 1):
        for w in combinations(range(ideal.n), size):
            s = set(w)
            if any(set(f) <= s for f in found):
                continue
            if is_vertex_cover(ideal, w):
                found.append(w)
    return tuple(sorted(found))


def vertex_cover_number(ideal: MonomialIdeal) -> int:
    return minimal_vertex_covers(ideal).h


def dim_quotient(ideal: MonomialIdeal) -> int:
    return minimal_vertex_covers(ideal).dim
