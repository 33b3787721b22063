"""Exact vertex-isoperimetric Cheeger constant and the lion lower bounds it implies.

All arithmetic is exact rational: the bound thresholds are inclusive
inequalities that can land exactly on an integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import ResourceLimitError
from .graphs import Graph, boundary_size_mask


@dataclass(frozen=True)
class CheegerResult:
    """The minimum of |boundary(S)| / min(|S|, |complement|) and one witness."""

    value: Fraction
    witness: frozenset


def cheeger_constant(g: Graph, max_vertices: int = 20) -> CheegerResult:
    """Exact minimum over all nonempty proper subsets, by enumeration.

    Each unordered {S, complement} pair is visited once (subsets containing
    vertex 0), evaluating both sides since the vertex boundary is not
    symmetric.  Ties break to the lexicographically smallest sorted witness.
    Connected graphs give 0 < value <= 1; disconnected graphs give 0.
    """
    if g.n < 2:
        raise ValueError("the Cheeger constant needs at least 2 vertices")
    if g.n > max_vertices:
        raise ResourceLimitError(f"Cheeger enumeration is 2^|V|; |V|={g.n} exceeds {max_vertices}")
    adj = g.neighbor_masks
    full = (1 << g.n) - 1
    best: Fraction | None = None
    best_witness: tuple = ()
    for mask in range(1, full, 2):  # vertex 0 in S; complement handled in the same visit
        size = mask.bit_count()
        denom = min(size, g.n - size)
        for side in (mask, full ^ mask):
            ratio = Fraction(boundary_size_mask(adj, side), denom)
            if best is None or ratio < best:
                best = ratio
                best_witness = _sorted_vertices(side)
            elif ratio == best:
                cand = _sorted_vertices(side)
                if cand < best_witness:
                    best_witness = cand
    return CheegerResult(best, frozenset(best_witness))


def polite_lion_bound(g_val: Fraction, num_vertices: int) -> int:
    """Largest k excluded for polite lions: floor(1/2 * floor(|V|/2) * g)."""
    return floor(Fraction(1, 2) * (num_vertices // 2) * Fraction(g_val))


def lion_bound(g_val: Fraction, num_vertices: int) -> int:
    """Largest k excluded for unrestricted lions: floor(g|V| / (4+g))."""
    g_val = Fraction(g_val)
    return floor(g_val * num_vertices / (4 + g_val))


def _sorted_vertices(mask: int) -> tuple:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)
