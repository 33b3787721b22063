"""Contamination dynamics: the synchronous clear/recontaminate update rule,
motion-model validation, trace objects, and their line-oriented serialization.

The update applied by step():  with Occ' the vertices occupied after the
moves and Blocked the (undirected) edges some lion crossed during the step,

    cleared(t+1) = (cleared(t) \\ Recon) | Occ'
    Recon = { v in cleared(t) : v not in Occ', and v has a neighbor u with
              u contaminated at time t and edge uv not in Blocked }

Contamination spreads exactly one hop per step, read off the time-t state;
a vertex a lion vacates can recontaminate in the same step.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ParseError
from .graphs import Graph

STAY = -1

MODELS = ("free", "caffeinated", "polite")

MoveStep = tuple  # one entry per lion: STAY or the target vertex
LionPositions = tuple


@dataclass(frozen=True)
class SimState:
    """Full Markov state of the game: time, lion positions, cleared set."""

    time: int
    lions: tuple
    cleared: frozenset


@dataclass(frozen=True)
class Trace:
    """Initial state followed by alternating moves/states; len(states) == len(moves)+1."""

    states: tuple
    moves: tuple

    def final(self) -> SimState:
        return self.states[-1]


def initial_state(g: Graph, lions: Sequence) -> SimState:
    """Time-0 state: exactly the occupied vertices are cleared."""
    for p in lions:
        if not (0 <= p < g.n):
            raise ValueError(f"lion position {p} not a vertex of the graph")
    return SimState(0, tuple(lions), frozenset(lions))


def validate_moves(g: Graph, model: str, state: SimState, mv: MoveStep) -> list:
    """Check one move step against adjacency and the motion model.

    Returns a list of (lion_index, reason) violations; an empty list means ok.
    Never mutates the state.
    """
    if model not in MODELS:
        raise ValueError(f"unknown motion model {model!r}")
    if len(mv) != len(state.lions):
        raise ValueError("move step length must equal the number of lions")
    violations = []
    movers = 0
    for i, target in enumerate(mv):
        pos = state.lions[i]
        if target == STAY:
            if model == "caffeinated":
                violations.append((i, "must-move"))
            continue
        movers += 1
        if target not in g.adj[pos]:
            violations.append((i, "not-adjacent"))
        if model == "polite" and movers > 1:
            violations.append((i, "politeness"))
    return violations


def step(g: Graph, state: SimState, mv: MoveStep) -> SimState:
    """Apply one synchronous move step and the contamination update.

    The caller is responsible for motion-model checks; adjacency is enforced
    here because a non-adjacent move has no defined semantics.
    """
    if len(mv) != len(state.lions):
        raise ValueError("move step length must equal the number of lions")
    new_positions = []
    for i, target in enumerate(mv):
        pos = state.lions[i]
        if target == STAY:
            new_positions.append(pos)
        else:
            if target not in g.adj[pos]:
                raise ValueError(f"invalid move: lion {i} from {pos} to non-adjacent {target}")
            new_positions.append(target)

    cleared_mask = 0
    for v in state.cleared:
        cleared_mask |= 1 << v
    new_mask = step_cleared_mask(g.neighbor_masks, state.lions, new_positions, cleared_mask)
    new_cleared = []
    while new_mask:
        new_cleared.append((new_mask & -new_mask).bit_length() - 1)
        new_mask &= new_mask - 1
    return SimState(state.time + 1, tuple(new_positions), frozenset(new_cleared))


def step_cleared_mask(adj_masks, positions, targets, cleared: int) -> int:
    """Bitmask core of the update rule, shared with the exhaustive search.

    positions/targets are parallel sequences; a target equal to the position
    (or STAY) means the lion stays put.
    """
    occ = 0
    blocked = set()
    for p, t in zip(positions, targets):
        if t == STAY or t == p:
            occ |= 1 << p
        else:
            occ |= 1 << t
            blocked.add((p, t) if p < t else (t, p))
    new_cleared = occ
    pending = cleared & ~occ
    while pending:
        v = (pending & -pending).bit_length() - 1
        pending &= pending - 1
        contaminated_nbrs = adj_masks[v] & ~cleared
        safe = True
        while contaminated_nbrs:
            u = (contaminated_nbrs & -contaminated_nbrs).bit_length() - 1
            contaminated_nbrs &= contaminated_nbrs - 1
            edge = (u, v) if u < v else (v, u)
            if edge not in blocked:
                safe = False
                break
        if safe:
            new_cleared |= 1 << v
    return new_cleared


class InvalidMoveError(ValueError):
    """Raised by run() when a move fails model validation; carries the step index."""

    def __init__(self, step_index: int, violations):
        super().__init__(f"invalid move at step {step_index}: {violations}")
        self.step_index = step_index
        self.violations = violations


def run(g: Graph, model: str, lions: Sequence, moves: Iterable,
        stop_on_sweep: bool = False) -> Trace:
    """Fold step() over a move list, validating each step against the model."""
    state = initial_state(g, lions)
    states = [state]
    applied = []
    full = frozenset(range(g.n))
    if stop_on_sweep and state.cleared == full:
        return Trace(tuple(states), tuple(applied))
    for i, mv in enumerate(moves):
        mv = tuple(mv)
        violations = validate_moves(g, model, state, mv)
        if violations:
            raise InvalidMoveError(i, violations)
        state = step(g, state, mv)
        states.append(state)
        applied.append(mv)
        if stop_on_sweep and state.cleared == full:
            break
    return Trace(tuple(states), tuple(applied))


def is_swept(tr: Trace, g) -> Optional[int]:
    """Smallest t with C(t) = V, or None.  g may be a Graph or a vertex count
    (traces do not embed the graph they were produced on)."""
    num_vertices = g.n if isinstance(g, Graph) else int(g)
    for s in tr.states:
        if len(s.cleared) == num_vertices:
            return s.time
    return None


def is_monotone(tr: Trace) -> bool:
    """True iff the cleared set never loses a vertex along the trace."""
    for a, b in zip(tr.states, tr.states[1:]):
        if not a.cleared <= b.cleared:
            return False
    return True


def write_trace(tr: Trace, path) -> None:
    """Line-delimited records, one per time step; the t=0 record has move null."""
    with open(path, "w", encoding="utf-8") as fh:
        for i, s in enumerate(tr.states):
            move = None if i == 0 else list(tr.moves[i - 1])
            fh.write(json.dumps({
                "t": s.time,
                "lions": list(s.lions),
                "cleared": sorted(s.cleared),
                "move": move,
            }) + "\n")


def read_trace(path) -> Trace:
    states = []
    moves = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                state = SimState(rec["t"], tuple(rec["lions"]), frozenset(rec["cleared"]))
                move = rec["move"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise ParseError(f"bad trace record: {exc}", lineno) from None
            states.append(state)
            if move is not None:
                moves.append(tuple(move))
    if len(states) != len(moves) + 1:
        raise ParseError("trace must be an initial state plus move/state pairs", 1)
    return Trace(tuple(states), tuple(moves))


def write_moves(moves: Iterable, path) -> None:
    """One step per line: a JSON list with STAY encoded as -1."""
    with open(path, "w", encoding="utf-8") as fh:
        for mv in moves:
            fh.write(json.dumps(list(mv)) + "\n")


def read_moves(path) -> list:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                mv = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad move line: {exc}", lineno) from None
            if not isinstance(mv, list) or not all(isinstance(x, int) for x in mv):
                raise ParseError("move line must be a JSON list of integers", lineno)
            out.append(tuple(mv))
    return out
