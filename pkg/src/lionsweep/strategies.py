"""Constructive move-sequence generators for the sweeps that provably work.

* row sweep: n free lions clear the parallelogram R_{n,l} by gathering on the
  leftmost column and advancing one lion at a time, bottom row first.
* caffeinated wall sweep: floor(3n/2) always-moving lions clear R_{n,l} with a
  vertical wall of lion triangles that crosses the grid.
* exact-length walks and simultaneous repositioning supply the formation
  phases (a caffeinated lion cannot just wait for the others).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Sequence

from .dynamics import STAY, initial_state, step
from .errors import InfeasibleWalkError, WalkParityError, WalkTooShortError
from .graphs import Graph, build_tri_lattice

Walk = tuple  # ordered vertex list; length of the walk = len - 1


@dataclass(frozen=True)
class MovePlan:
    """A generated move sequence plus the index where the formation phase ends."""

    moves: tuple
    formation_steps: int


def _bfs_path(g: Graph, u: int, v: int) -> list:
    """One shortest path from u to v (vertex list), or raise if unreachable."""
    if u == v:
        return [u]
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adj[x]):
            if y not in parent:
                parent[y] = x
                if y == v:
                    path = [v]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(y)
    raise ValueError(f"vertex {v} unreachable from {u}")


def parity_distances(g: Graph, u: int):
    """Shortest even- and odd-length walk distances from u to every vertex.

    Returns (dist, parent) where dist[p][v] is the least length of a u-v walk
    of parity p (None if no such walk), and parent maps (v, p) to the
    predecessor pair on one shortest walk.
    """
    dist = [[None] * g.n, [None] * g.n]
    parent = {}
    dist[0][u] = 0
    queue = deque([(u, 0)])
    while queue:
        v, p = queue.popleft()
        q = p ^ 1
        for w in sorted(g.adj[v]):
            if dist[q][w] is None:
                dist[q][w] = dist[p][v] + 1
                parent[(w, q)] = (v, p)
                queue.append((w, q))
    return dist, parent


def exact_length_walk(g: Graph, u: int, v: int, m: int) -> Walk:
    """A walk from u to v of length exactly m, when one exists.

    Feasibility is exact: a length-m walk exists iff m is at least the
    shortest u-v walk of m's parity.  On graphs where every edge lies in a
    triangle (such as R_{n,l} with n, l >= 2) that reduces to m >= dist(u, v)
    for u != v; on bipartite graphs only the parity of dist(u, v) is ever
    feasible.
    """
    for x in (u, v):
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} not in graph")
    if m < 0:
        raise ValueError("walk length must be >= 0")
    dist, parent = parity_distances(g, u)
    p = m % 2
    d_same = dist[p][v]
    d_other = dist[p ^ 1][v]
    if d_same is None and d_other is None:
        raise ValueError(f"vertex {v} unreachable from {u}")
    shortest = min(d for d in (d_same, d_other) if d is not None)
    if d_same is None:
        raise WalkParityError(
            f"every {u}-{v} walk has parity {shortest % 2}, but length {m} was requested")
    if m < d_same:
        if m < shortest:
            raise WalkTooShortError(f"shortest {u}-{v} walk has length {shortest}")
        raise WalkParityError(
            f"shortest {u}-{v} walk of parity {p} has length {d_same}, but {m} was requested")

    walk = [(v, p)]
    while walk[-1] != (u, 0):
        walk.append(parent[walk[-1]])
    base = [x for x, _ in reversed(walk)]

    pad = (m - d_same) // 2
    if pad:
        if not g.adj[u]:
            raise InfeasibleWalkError(f"vertex {u} has no neighbors to pad a walk with")
        w = min(g.adj[u])
        base = [u, w] * pad + base
    return tuple(base)


def simultaneous_repositioning(g: Graph, starts: Sequence, targets: Sequence) -> tuple:
    """Caffeinated-valid steps moving lion i from starts[i] to targets[i],
    all arriving at the same time.

    The common length is the smallest m for which every lion has a walk of
    length exactly m; with zero net motion requested the plan is a minimal
    even-length bounce (an always-moving lion cannot execute an empty plan).
    """
    if len(starts) != len(targets):
        raise ValueError("starts and targets must pair up")
    k = len(starts)
    if k == 0:
        return ()
    dists = []
    for s, t in zip(starts, targets):
        dist, _ = parity_distances(g, s)
        dists.append((dist[0][t], dist[1][t]))
        if dist[0][t] is None and dist[1][t] is None:
            raise ValueError(f"target {t} unreachable from {s}")

    def feasible(i: int, m: int) -> bool:
        d = dists[i][m % 2]
        return d is not None and d <= m

    m = max(min(d for d in pair if d is not None) for pair in dists)
    if m == 0:
        m = 2
    cap = max(max(d for d in pair if d is not None) for pair in dists) + 2
    while m <= cap and not all(feasible(i, m) for i in range(k)):
        m += 1
    if not all(feasible(i, m) for i in range(k)):
        raise WalkParityError("lions require walks of conflicting parities")

    walks = [exact_length_walk(g, s, t, m) for s, t in zip(starts, targets)]
    return tuple(tuple(w[j + 1] for w in walks) for j in range(m))


def column_positions(n: int, l: int) -> tuple:
    """Vertices of the leftmost column of R_{n,l}, rows 1..n."""
    g = build_tri_lattice(n, l)
    return tuple(g.vertex_at(r, 1) for r in range(1, n + 1))


def row_sweep_moves(n: int, l: int, starts: Sequence) -> MovePlan:
    """The n-lion free sweep of R_{n,l}: gather on the leftmost column, then
    advance one lion per step, bottom row first, column by column.

    The formation phase walks lions one at a time to (row, 1) and then holds
    everyone in place until the cleared set stops shrinking, so the sweep
    suffix starting at formation_steps is monotone.
    """
    if len(starts) != n:
        raise ValueError(f"row sweep of R_{{{n},{l}}} needs exactly {n} lions")
    g = build_tri_lattice(n, l)
    for p in starts:
        if not (0 <= p < g.n):
            raise ValueError(f"start {p} not a vertex of R_{{{n},{l}}}")

    moves = []
    pos = list(starts)
    for i in range(n):
        target = g.vertex_at(i + 1, 1)
        for nxt in _bfs_path(g, pos[i], target)[1:]:
            mv = [STAY] * n
            mv[i] = nxt
            moves.append(tuple(mv))
            pos[i] = nxt

    # Hold until leftover cleared debris from the gathering walk has
    # recontaminated; the sweep's monotonicity argument starts from a state
    # where only the occupied column is cleared.
    state = initial_state(g, tuple(starts))
    for mv in moves:
        state = step(g, state, mv)
    stay = tuple([STAY] * n)
    for _ in range(g.n + 1):
        nxt = step(g, state, stay)
        if nxt.cleared == state.cleared:
            break
        moves.append(stay)
        state = nxt
    formation_steps = len(moves)

    for c in range(1, l):
        for r in range(1, n + 1):
            mv = [STAY] * n
            mv[r - 1] = g.vertex_at(r, c + 1)
            moves.append(tuple(mv))
    return MovePlan(tuple(moves), formation_steps)


def _wall_layout(n: int):
    """Row roles for the wall: optional unpaired bottom row, plus

    (double_row, single_row) units bottom-up.  Single rows are the odd rows
    counted from the top, so each single row sits directly above its double
    row and the three lions of a unit form a triangle of the lattice.
    """
    if n % 2 == 0:
        return None, [(d, d + 1) for d in range(1, n, 2)]
    return 1, [(d, d + 1) for d in range(2, n, 2)]


def wall_positions(n: int, l: int, col: int) -> tuple:
    """Wall-formation vertices at base column col, in slot order
    ([loner], then per unit: rear, front, single)."""
    g = build_tri_lattice(n, l)
    loner, units = _wall_layout(n)
    out = []
    if loner is not None:
        out.append(g.vertex_at(loner, col))
    for d, s in units:
        out.extend((g.vertex_at(d, col), g.vertex_at(d, col + 1), g.vertex_at(s, col)))
    return tuple(out)


def caffeinated_wall_moves(n: int, l: int, starts: Sequence) -> MovePlan:
    """The floor(3n/2)-lion caffeinated sweep of R_{n,l}.

    Phases: (1) simultaneous repositioning into the wall of triangles at
    column ceil(l/2); (2) transport to the left edge; (3) rightward sweep,
    one unit advancing per substep (bottom-up) while the others rotate their
    triangle in place and the unpaired bottom lion (odd n) bounces one column
    ahead of its row and back; (4) a final step that pushes the single-lion
    rows onto the last column while the doubles swap.  Every step moves every
    lion.
    """
    need = (3 * n) // 2
    if len(starts) != need:
        raise ValueError(f"caffeinated wall sweep of R_{{{n},{l}}} needs exactly {need} lions")
    g = build_tri_lattice(n, l)
    for p in starts:
        if not (0 <= p < g.n):
            raise ValueError(f"start {p} not a vertex of R_{{{n},{l}}}")

    if n == 1:
        if l == 1:
            return MovePlan((), 0)
        target = g.vertex_at(1, 1)
        dist, _ = parity_distances(g, starts[0])
        d = min(x for x in (dist[0][target], dist[1][target]) if x is not None)
        walk = exact_length_walk(g, starts[0], target, d)
        moves = [(x,) for x in walk[1:]]
        formation_steps = len(moves)
        moves.extend((g.vertex_at(1, c + 1),) for c in range(1, l))
        return MovePlan(tuple(moves), formation_steps)
    if l == 1:
        raise ValueError("the wall formation needs two columns; R_{n,1} has one")

    c0 = (l + 1) // 2
    targets = wall_positions(n, l, c0)
    moves = list(simultaneous_repositioning(g, starts, targets))
    formation_steps = len(moves)

    loner_row, units = _wall_layout(n)
    pos = list(targets)  # lion i sits at slot i after the formation

    def emit(vmap: dict) -> None:
        # vmap sends each occupied vertex to its target; positions stay
        # distinct during the wall phases, so the lookup is unambiguous.
        mv = tuple(vmap[p] for p in pos)
        moves.append(mv)
        for i, t in enumerate(mv):
            pos[i] = t

    v = g.vertex_at

    # Transport: everyone slides left until the wall rests on column 1.
    for shift in range(c0 - 1):
        vmap = {}
        if loner_row is not None:
            vmap[v(1, c0 - shift)] = v(1, c0 - shift - 1)
        for d, s in units:
            x = c0 - shift
            vmap[v(d, x)] = v(d, x - 1)
            vmap[v(d, x + 1)] = v(d, x)
            vmap[v(s, x)] = v(s, x - 1)
        emit(vmap)

    substeps = ceil(n / 2)
    if loner_row is not None and substeps % 2 == 0:
        substeps += 1  # the bounce gait needs an even number of non-advance substeps
    slots = ([("loner", 0)] if loner_row is not None else []) + \
        [("unit", ui) for ui in range(len(units))]

    def rotate(vmap: dict, d: int, s: int, x: int) -> None:
        vmap[v(s, x)] = v(d, x)
        vmap[v(d, x)] = v(d, x + 1)
        vmap[v(d, x + 1)] = v(s, x)

    loner_at_base = True
    for base in range(1, l - 1):
        unit_col = [base] * len(units)
        loner_col = base
        for j in range(substeps):
            advancing = slots[j] if j < len(slots) else None
            vmap = {}
            for ui, (d, s) in enumerate(units):
                x = unit_col[ui]
                if advancing == ("unit", ui):
                    vmap[v(s, x)] = v(s, x + 1)
                    vmap[v(d, x)] = v(d, x + 1)
                    vmap[v(d, x + 1)] = v(d, x + 2)
                    unit_col[ui] = x + 1
                else:
                    rotate(vmap, d, s, x)
            if loner_row is not None:
                if advancing == ("loner", 0):
                    vmap[v(1, loner_col)] = v(1, loner_col + 1)
                    loner_col += 1
                    loner_at_base = True
                elif loner_at_base:
                    vmap[v(1, loner_col)] = v(1, loner_col + 1)
                    loner_at_base = False
                else:
                    vmap[v(1, loner_col + 1)] = v(1, loner_col)
                    loner_at_base = True
            emit(vmap)

    # Final step: single rows take the last column, doubles swap in place.
    vmap = {}
    if loner_row is not None:
        vmap[v(1, l - 1)] = v(1, l)
    for d, s in units:
        vmap[v(s, l - 1)] = v(s, l)
        vmap[v(d, l - 1)] = v(d, l)
        vmap[v(d, l)] = v(d, l - 1)
    emit(vmap)

    return MovePlan(tuple(moves), formation_steps)


def naive_column_sweep_moves(n: int, l: int, steps: int) -> tuple:
    """The caffeinated column sweep that fails: n lions on the leftmost
    column all stepping right together, bouncing off the grid's sides.

    Contamination travels down the diagonals into the just-vacated column,
    so this never sweeps (for n >= 2); the generator exists as the negative
    control.  Lions are assumed to start at column_positions(n, l).
    """
    if l < 2:
        raise ValueError("the bouncing column needs l >= 2")
    g = build_tri_lattice(n, l)
    moves = []
    col = 1
    direction = 1
    for _ in range(steps):
        if col + direction < 1 or col + direction > l:
            direction = -direction
        col += direction
        moves.append(tuple(g.vertex_at(r, col) for r in range(1, n + 1)))
    return tuple(moves)
