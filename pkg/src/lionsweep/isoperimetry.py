"""Fall-down transformation on the n x n vertex grid, exhaustive boundary
profiles, and the triangle packings with their conjecture reports.

The square grid S_n and the triangulated square R_n share one vertex set
here: index (r-1)*n + (c-1) for coordinate (r, c), row 1 at the bottom.
"Down" decreases the row, "left" decreases the column.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional

from .errors import ResourceLimitError
from .graphs import (Graph, boundary, boundary_size_mask, build_square_grid,
                     build_tri_lattice, build_triangle)


def triangular(n: int) -> int:
    """The n-th triangular number n(n+1)/2."""
    if n < 0:
        raise ValueError("triangular numbers start at n = 0")
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def _grid_pair(n: int) -> tuple:
    """(S_n, R_n) on the shared vertex indexing."""
    return build_square_grid(n), build_tri_lattice(n, n)


@lru_cache(maxsize=None)
def _fill_tables(n: int):
    """Bitmask tables for the fall-down phases on the n x n grid."""
    def at(r, c):
        return 1 << ((r - 1) * n + (c - 1))

    col_mask = [sum(at(r, c) for r in range(1, n + 1)) for c in range(1, n + 1)]
    row_mask = [sum(at(r, c) for c in range(1, n + 1)) for r in range(1, n + 1)]
    col_fill = [[sum(at(r, c) for r in range(1, cnt + 1)) for cnt in range(n + 1)]
                for c in range(1, n + 1)]
    row_fill_left = [[sum(at(r, c) for c in range(1, cnt + 1)) for cnt in range(n + 1)]
                     for r in range(1, n + 1)]
    row_fill_right = [[sum(at(r, c) for c in range(n - cnt + 1, n + 1)) for cnt in range(n + 1)]
                      for r in range(1, n + 1)]
    return col_mask, row_mask, col_fill, row_fill_left, row_fill_right


def _fall_down_mask(n: int, mask: int, push_left: bool = True) -> int:
    col_mask, row_mask, col_fill, row_fill_left, row_fill_right = _fill_tables(n)
    dropped = 0
    for c in range(n):
        dropped |= col_fill[c][(mask & col_mask[c]).bit_count()]
    row_fill = row_fill_left if push_left else row_fill_right
    out = 0
    for r in range(n):
        out |= row_fill[r][(dropped & row_mask[r]).bit_count()]
    return out


def fall_down(n: int, s) -> frozenset:
    """Drop the subset down each column, then push each row to the left.

    Column counts are preserved by the first phase and row counts by the
    second, so the image has the same cardinality as s.
    """
    mask = _subset_mask(n, s)
    out = _fall_down_mask(n, mask, push_left=True)
    return _mask_to_set(out)


def boundary_in_both(n: int, s) -> tuple:
    """The boundary of s computed in S_n and in R_n, as a pair of sets."""
    sq, tri = _grid_pair(n)
    fs = frozenset(s)
    return boundary(sq, fs), boundary(tri, fs)


@dataclass(frozen=True)
class FallDownReport:
    """Exhaustive check of the two fall-down lemmas over every subset."""

    n: int
    subsets_checked: int
    monotone_violations: tuple  # subsets whose image gained boundary vertices
    boundary_match_violations: tuple  # images whose S_n and R_n boundaries differ

    @property
    def ok(self) -> bool:
        return not self.monotone_violations and not self.boundary_match_violations


def falldown_check(n: int, max_n: int = 4) -> FallDownReport:
    """Check, over all 2^(n^2) subsets, that the down-left fall-down never
    increases the boundary count (in S_n nor in R_n) and that its image has
    identical boundary sets in the two graphs."""
    if n > max_n:
        raise ResourceLimitError(f"fall-down check enumerates 2^(n^2) subsets; n={n} exceeds {max_n}")
    sq, tri = _grid_pair(n)
    sq_adj, tri_adj = sq.neighbor_masks, tri.neighbor_masks
    mono_bad = []
    match_bad = []
    for mask in range(1 << (n * n)):
        image = _fall_down_mask(n, mask, push_left=True)
        b_sq = _boundary_mask(sq_adj, image)
        b_tri = _boundary_mask(tri_adj, image)
        if b_sq != b_tri:
            match_bad.append(_mask_to_set(mask))
        if b_sq.bit_count() > boundary_size_mask(sq_adj, mask) or \
                b_tri.bit_count() > boundary_size_mask(tri_adj, mask):
            mono_bad.append(_mask_to_set(mask))
    return FallDownReport(n, 1 << (n * n), tuple(mono_bad), tuple(match_bad))


def falldown_mismatches(n: int, direction: str = "down-right",
                        max_n: int = 4) -> Iterator[tuple]:
    """Yield (s, image, boundary_in_Sn, boundary_in_Rn) for every subset whose
    transformed image has different boundary sets in S_n and R_n."""
    if direction not in ("down-left", "down-right"):
        raise ValueError(f"unknown fall-down direction {direction!r}")
    if n > max_n:
        raise ResourceLimitError(f"fall-down scan enumerates 2^(n^2) subsets; n={n} exceeds {max_n}")
    sq, tri = _grid_pair(n)
    sq_adj, tri_adj = sq.neighbor_masks, tri.neighbor_masks
    push_left = direction == "down-left"
    for mask in range(1 << (n * n)):
        image = _fall_down_mask(n, mask, push_left=push_left)
        b_sq = _boundary_mask(sq_adj, image)
        b_tri = _boundary_mask(tri_adj, image)
        if b_sq != b_tri:
            yield (_mask_to_set(mask), _mask_to_set(image),
                   _mask_to_set(b_sq), _mask_to_set(b_tri))


def falldown_counterexample_search(n: int, direction: str = "down-right",
                                   max_n: int = 4) -> Optional[frozenset]:
    """First subset whose transformed image tells S_n and R_n apart, or None.

    Down-left finds nothing (the boundary-match lemma holds); down-right has
    witnesses from n = 4 on.
    """
    for s, _image, _bs, _br in falldown_mismatches(n, direction, max_n):
        return s
    return None


@dataclass(frozen=True)
class IsoProfile:
    """Exact minimum boundary size per subset cardinality, with witnesses."""

    size_lo: int
    size_hi: int
    min_boundary: dict
    witness: dict


def iso_profile(g: Graph, size_lo: int, size_hi: int, max_vertices: int = 20) -> IsoProfile:
    """Minimum |boundary(S)| over all S of each cardinality in [size_lo, size_hi],
    by full subset enumeration."""
    if g.n > max_vertices:
        raise ResourceLimitError(f"profile enumerates 2^|V| subsets; |V|={g.n} exceeds {max_vertices}")
    if not (0 <= size_lo <= size_hi <= g.n):
        raise ValueError("size range must satisfy 0 <= lo <= hi <= |V|")
    adj = g.neighbor_masks
    best: dict = {}
    witness: dict = {}
    for mask in range(1 << g.n):
        s = mask.bit_count()
        if s < size_lo or s > size_hi:
            continue
        b = boundary_size_mask(adj, mask)
        if s not in best or b < best[s]:
            best[s] = b
            witness[s] = _mask_to_set(mask)
    return IsoProfile(size_lo, size_hi, best, witness)


def packing(n: int, kind: str, count: int) -> frozenset:
    """The first `count` vertices of the canonical packing order on P_n.

    row: fill rows n, n-1, ... (bottom up), left to right within each row.
    ice_cream: fill the diagonals parallel to the right side, starting from
    the lower-left corner, lowest vertex of each diagonal first.
    """
    if kind not in ("row", "ice_cream"):
        raise ValueError(f"unknown packing kind {kind!r}")
    total = triangular(n)
    if not (0 <= count <= total):
        raise ValueError(f"packing size must be in 0..{total}")
    tri = build_triangle(n)
    order = []
    if kind == "row":
        for r in range(n, 0, -1):
            for i in range(1, r + 1):
                order.append(tri.vertex_at(r, i))
    else:
        for t in range(1, n + 1):
            # diagonal D_t = {(r, i) : r - i = n - t}, taken bottom-up
            for i in range(t, 0, -1):
                order.append(tri.vertex_at(n - t + i, i))
    return frozenset(order[:count])


@dataclass(frozen=True)
class ConjectureReport:
    """Per-cardinality comparison of the exhaustive minimum boundary against
    the two packings, plus the derived thresholds.  Reported, not asserted."""

    n: int
    rows: tuple  # (size, min_boundary, row_boundary, ice_boundary, holds)
    lion_threshold: int  # floor(n / (2*sqrt(2)))
    window_size: int  # T_{floor(sqrt(T_n))}
    window_threshold: int  # floor(n / sqrt(2))
    window_min_boundary: int

    @property
    def violations(self) -> tuple:
        return tuple(row for row in self.rows if not row[4])

    def to_csv(self) -> str:
        lines = ["size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds"]
        for size, mb, rb, ib, holds in self.rows:
            lines.append(f"{size},{mb},{rb},{ib},{str(holds).lower()}")
        return "\n".join(lines) + "\n"


def conjecture_report(n: int, max_n: int = 5) -> ConjectureReport:
    """Exhaustively compare min |boundary| on P_n against the packings for
    every cardinality, and evaluate the conjectured thresholds."""
    if n > max_n:
        raise ResourceLimitError(f"conjecture report enumerates 2^T_n subsets; n={n} exceeds {max_n}")
    if n < 1:
        raise ValueError("conjecture report needs n >= 1")
    tri = build_triangle(n)
    total = triangular(n)
    profile = iso_profile(tri, 0, total)
    rows = []
    for size in range(total + 1):
        mb = profile.min_boundary[size]
        rb = len(boundary(tri, packing(n, "row", size)))
        ib = len(boundary(tri, packing(n, "ice_cream", size)))
        rows.append((size, mb, rb, ib, mb >= min(rb, ib)))
    # floor(n/sqrt(2)) = isqrt(n^2/2) and floor(n/(2 sqrt 2)) = isqrt(n^2/8), exactly
    window_size = triangular(isqrt(total))
    return ConjectureReport(
        n=n,
        rows=tuple(rows),
        lion_threshold=isqrt(n * n // 8),
        window_size=window_size,
        window_threshold=isqrt(n * n // 2),
        window_min_boundary=profile.min_boundary[window_size],
    )


def _boundary_mask(adj_masks, s_mask: int) -> int:
    out = 0
    m = s_mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if adj_masks[v] & ~s_mask:
            out |= 1 << v
    return out


def _subset_mask(n: int, s) -> int:
    mask = 0
    for v in s:
        if not (0 <= v < n * n):
            raise ValueError(f"vertex {v} outside the {n}x{n} grid")
        mask |= 1 << v
    return mask


def _mask_to_set(mask: int) -> frozenset:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)
