"""Droop and lift moves, move-closure enumeration, and a brute-force oracle.

A droop reroutes a pipe's ES corner to the opposite corner of a rectangle:
the pipe turns south at the rectangle's northeast cell, runs down its east
column, takes a WN corner at the southeast cell and runs west along the
bottom row to rejoin its old exit.  A lift raises a horizontal run of a
pipe into an up-left-down detour: up the rectangle's east column, SW
corner, west along the top row, ES corner, and back down the west column.

Both moves are segment-level rewrites followed by full revalidation; a
move is rejected when a rewritten cell would not be a legal tile (a second
segment only ever forms the CROSS) or when the result fails validity or
reducedness.  Closure from the Rothe diagram under both moves enumerates
every unpaired diagram of the permutation; dominoes are paired afterwards.
The independent brute-force enumerator routes pipes one at a time as
self-avoiding west/north/south lattice paths and is the oracle for closure
completeness on small sizes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import (
    Diagram,
    TileKind,
    _fast_valid,
    domino_pairings,
    rothe_diagram,
)
from .errors import MoveRejected, SizeLimit
from .perm import Permutation

__all__ = [
    "RectMove",
    "apply_droop",
    "apply_lift",
    "enumerate_unpaired",
    "enumerate_qbpds",
    "brute_force_enumerate",
]

_B = int(TileKind.BLANK)
_ES = int(TileKind.ES)
_WN = int(TileKind.WN)
_SW = int(TileKind.SW)
_NE = int(TileKind.NE)
_EW = int(TileKind.EW)
_NS = int(TileKind.NS)
_X = int(TileKind.CROSS)

N, E, S, W = 0, 1, 2, 3


@dataclass(frozen=True)
class RectMove:
    """A droop or lift over the rectangle [r1..r2] x [c1..c2], 1-based.

    ``pipe`` is the start row of the pipe being rerouted.
    """

    kind: str  # "droop" | "lift"
    r1: int
    c1: int
    r2: int
    c2: int
    pipe: int


# ---------------------------------------------------------------------------
# rewrites on flat grids (0-based coordinates)


def _droop_rewrite(flat, n, r1, c1, r2, c2, ekind, xkind):
    """Rewrite a droop; returns the new flat grid or None if illegal.

    ``ekind`` is the pipe's tile at the entry cell (r1, c2): EW or WN;
    ``xkind`` the tile at the exit cell (r2, c1): NS or WN.
    """
    if flat[r2 * n + c2] != _B:
        return None
    if ekind == _EW and flat[r1 * n + c2] != _EW:
        return None  # horizontal strand of a CROSS cannot become a corner
    if xkind == _NS and flat[r2 * n + c1] != _NS:
        return None
    for r in range(r1 + 1, r2):
        if flat[r * n + c2] not in (_B, _EW):
            return None
    for c in range(c1 + 1, c2):
        if flat[r2 * n + c] not in (_B, _NS):
            return None
    new = list(flat)
    new[r1 * n + c2] = _ES if ekind == _EW else _NS
    for r in range(r1 + 1, r2):
        i = r * n + c2
        new[i] = _NS if new[i] == _B else _X
    new[r2 * n + c2] = _WN
    for c in range(c1 + 1, c2):
        i = r1 * n + c
        new[i] = _B if new[i] == _EW else _NS
        i = r2 * n + c
        new[i] = _EW if new[i] == _B else _X
    new[r1 * n + c1] = _B
    for r in range(r1 + 1, r2):
        i = r * n + c1
        new[i] = _B if new[i] == _NS else _EW
    new[r2 * n + c1] = _ES if xkind == _NS else _EW
    return new


def _lift_rewrite(flat, n, r1, c1, r2, c2, ekind, xkind):
    """Rewrite a lift; returns the new flat grid or None if illegal.

    ``ekind`` is the pipe's tile at the east end (r2, c2): EW or SW;
    ``xkind`` the tile at the west end (r2, c1): EW or ES.
    """
    if flat[r1 * n + c2] != _B or flat[r1 * n + c1] != _B:
        return None
    if ekind == _EW and flat[r2 * n + c2] != _EW:
        return None
    if xkind == _EW and flat[r2 * n + c1] != _EW:
        return None
    for r in range(r1 + 1, r2):
        if flat[r * n + c2] not in (_B, _EW) or flat[r * n + c1] not in (_B, _EW):
            return None
    for c in range(c1 + 1, c2):
        if flat[r1 * n + c] not in (_B, _NS):
            return None
    new = list(flat)
    new[r2 * n + c2] = _NE if ekind == _EW else _NS
    new[r1 * n + c2] = _SW
    new[r1 * n + c1] = _ES
    for r in range(r1 + 1, r2):
        for col in (c1, c2):
            i = r * n + col
            new[i] = _NS if new[i] == _B else _X
    for c in range(c1 + 1, c2):
        i = r1 * n + c
        new[i] = _EW if new[i] == _B else _X
        i = r2 * n + c
        new[i] = _B if new[i] == _EW else _NS
    new[r2 * n + c1] = _WN if xkind == _EW else _NS
    return new


# ---------------------------------------------------------------------------
# candidate generation from traces


def _droop_candidates(flat, n, traces):
    """Yield rewritten grids for every droop applicable to ``flat``."""
    for steps in traces:
        for t, (idx, entry, out) in enumerate(steps):
            if not (entry == E and out == S and flat[idx] == _ES):
                continue
            r1, c1 = divmod(idx, n)
            east = []
            tt = t - 1
            while tt >= 0:
                idx2, e2, o2 = steps[tt]
                if e2 == E and o2 == W:
                    east.append((idx2 % n, _EW))
                    tt -= 1
                    continue
                if e2 == N and o2 == W:
                    east.append((idx2 % n, _WN))
                break
            if not east:
                continue
            south = []
            tt = t + 1
            while tt < len(steps):
                idx2, e2, o2 = steps[tt]
                if e2 == N and o2 == S:
                    south.append((idx2 // n, _NS))
                    tt += 1
                    continue
                if e2 == N and o2 == W:
                    south.append((idx2 // n, _WN))
                break
            for c2, ekind in east:
                for r2, xkind in south:
                    new = _droop_rewrite(flat, n, r1, c1, r2, c2, ekind, xkind)
                    if new is not None:
                        yield new


def _lift_candidates(flat, n, traces):
    """Yield rewritten grids for every lift applicable to ``flat``."""
    for steps in traces:
        t = 0
        m = len(steps)
        while t < m:
            idx, entry, out = steps[t]
            if not (entry == E and out == W):
                t += 1
                continue
            start = t
            while t < m and steps[t][1] == E and steps[t][2] == W:
                t += 1
            # run of horizontal passages, east to west: steps[start:t]
            r2 = steps[start][0] // n
            east = [(steps[i][0] % n, _EW) for i in range(start, t)]
            if start > 0:
                idx2, e2, o2 = steps[start - 1]
                if e2 == S and o2 == W:
                    east.append((idx2 % n, _SW))
            west = [(steps[i][0] % n, _EW) for i in range(start, t)]
            if t < m:
                idx2, e2, o2 = steps[t]
                if e2 == E and o2 == S:
                    west.append((idx2 % n, _ES))
            for c2, ekind in east:
                for c1, xkind in west:
                    if c1 >= c2:
                        continue
                    for r1 in range(r2):
                        new = _lift_rewrite(
                            flat, n, r1, c1, r2, c2, ekind, xkind
                        )
                        if new is not None:
                            yield new


# ---------------------------------------------------------------------------
# public move application


def _pipe_steps(D: Diagram, pipe: int):
    fv = _fast_valid(D.flat(), D.n)
    if fv is None:
        raise MoveRejected("diagram is not a valid reduced pipe dream")
    _, traces = fv
    if not 1 <= pipe <= D.n:
        raise MoveRejected(f"no pipe {pipe}")
    return {idx: (e, o) for idx, e, o in traces[pipe - 1]}


def _check_move(D: Diagram, move: RectMove, kind: str):
    if D.dominoes:
        raise MoveRejected("moves apply to unpaired diagrams only")
    if move.kind != kind:
        raise MoveRejected(f"expected a {kind} move, got {move.kind}")
    if not (1 <= move.r1 < move.r2 <= D.n and 1 <= move.c1 < move.c2 <= D.n):
        raise MoveRejected("rectangle does not lie inside the grid")


def apply_droop(D: Diagram, move: RectMove) -> Diagram:
    """Apply a droop; raises :class:`MoveRejected` when it does not apply."""
    _check_move(D, move, "droop")
    n = D.n
    flat = D.flat()
    on = _pipe_steps(D, move.pipe)
    r1, c1, r2, c2 = move.r1 - 1, move.c1 - 1, move.r2 - 1, move.c2 - 1
    if on.get(r1 * n + c1) != (E, S):
        raise MoveRejected("pipe has no ES corner at the rectangle's northwest")
    for c in range(c1 + 1, c2):
        if on.get(r1 * n + c) != (E, W):
            raise MoveRejected("pipe does not run west along the top row")
    ekind = {(E, W): _EW, (N, W): _WN}.get(on.get(r1 * n + c2))
    if ekind is None:
        raise MoveRejected("entry cell is not an EW or WN tile of the pipe")
    for r in range(r1 + 1, r2):
        if on.get(r * n + c1) != (N, S):
            raise MoveRejected("pipe does not run south along the west column")
    xkind = {(N, S): _NS, (N, W): _WN}.get(on.get(r2 * n + c1))
    if xkind is None:
        raise MoveRejected("exit cell is not an NS or WN tile of the pipe")
    new = _droop_rewrite(flat, n, r1, c1, r2, c2, ekind, xkind)
    return _finish_move(D, new)


def apply_lift(D: Diagram, move: RectMove) -> Diagram:
    """Apply a lift; raises :class:`MoveRejected` when it does not apply."""
    _check_move(D, move, "lift")
    n = D.n
    flat = D.flat()
    on = _pipe_steps(D, move.pipe)
    r1, c1, r2, c2 = move.r1 - 1, move.c1 - 1, move.r2 - 1, move.c2 - 1
    for c in range(c1 + 1, c2):
        if on.get(r2 * n + c) != (E, W):
            raise MoveRejected("pipe does not run west along the bottom row")
    ekind = {(E, W): _EW, (S, W): _SW}.get(on.get(r2 * n + c2))
    if ekind is None:
        raise MoveRejected("east end is not an EW or SW tile of the pipe")
    xkind = {(E, W): _EW, (E, S): _ES}.get(on.get(r2 * n + c1))
    if xkind is None:
        raise MoveRejected("west end is not an EW or ES tile of the pipe")
    new = _lift_rewrite(flat, n, r1, c1, r2, c2, ekind, xkind)
    return _finish_move(D, new)


def _finish_move(D: Diagram, new) -> Diagram:
    if new is None:
        raise MoveRejected("rewrite would superimpose segments illegally")
    fv = _fast_valid(new, D.n)
    if fv is None:
        raise MoveRejected("result is not a valid reduced diagram")
    result = Diagram.from_flat(D.n, new)
    return result


# ---------------------------------------------------------------------------
# enumeration


def enumerate_unpaired(w: Permutation, order: str = "bfs") -> set[Diagram]:
    """All unpaired diagrams of w: closure of the Rothe diagram under moves.

    ``order`` selects the frontier strategy (bfs or dfs); the resulting set
    is the same either way.
    """
    if order not in ("bfs", "dfs"):
        raise ValueError(f"unknown order {order!r}")
    n = w.n
    start = rothe_diagram(w).flat()
    fv = _fast_valid(start, n)
    assert fv is not None, "Rothe diagram must be valid"
    target, traces0 = fv
    key0 = bytes(start)
    visited = {key0: start}
    frontier = deque([(start, traces0)])
    seen = {key0}
    pop = frontier.popleft if order == "bfs" else frontier.pop
    while frontier:
        flat, traces = pop()
        for new in _droop_candidates(flat, n, traces):
            key = bytes(new)
            if key in seen:
                continue
            seen.add(key)
            fv = _fast_valid(new, n)
            if fv is None:
                continue
            ends, ntraces = fv
            assert ends == target, "moves must preserve the permutation"
            visited[key] = new
            frontier.append((new, ntraces))
        for new in _lift_candidates(flat, n, traces):
            key = bytes(new)
            if key in seen:
                continue
            seen.add(key)
            fv = _fast_valid(new, n)
            if fv is None:
                continue
            ends, ntraces = fv
            assert ends == target, "moves must preserve the permutation"
            visited[key] = new
            frontier.append((new, ntraces))
    return {Diagram.from_flat(n, flat) for flat in visited.values()}


def enumerate_qbpds(w: Permutation) -> set[Diagram]:
    """All diagrams of w: unpaired closure plus every domino pairing."""
    out: set[Diagram] = set()
    for D in enumerate_unpaired(w):
        out |= domino_pairings(D)
    return out


def brute_force_enumerate(w: Permutation) -> set[Diagram]:
    """Exhaustive enumeration by routing pipes as lattice paths (n <= 5).

    Pipe i runs from the east edge of row i to the south edge of column
    w(i) by west/north/south steps; cells are shared only as perpendicular
    crossings and each pair of pipes crosses at most once.  Dominoes are
    paired at the end.  Independent of the move machinery.
    """
    n = w.n
    if n > 5:
        raise SizeLimit("brute force enumeration is limited to n <= 5")
    targets = [v - 1 for v in w.images]
    grid = [_B] * (n * n)
    owners: dict[int, int] = {}  # cell -> pipe owning its first segment
    crossed: set[tuple[int, int]] = set()
    results = []

    seg_for = {
        (E, W): _EW, (E, S): _ES, (E, N): _NE,
        (N, W): _WN, (N, S): _NS,
        (S, W): _SW, (S, N): _NS,
    }
    exits_for = {E: (W, S, N), N: (W, S), S: (W, N)}

    def extend(pipe: int, r: int, c: int, entry: int):
        idx = r * n + c
        old = grid[idx]
        for out in exits_for[entry]:
            seg = seg_for[(entry, out)]
            if old == _B:
                pair = None
            elif (old, seg) in ((_EW, _NS), (_NS, _EW)):
                other = owners[idx]
                if other == pipe:
                    continue
                pair = (other, pipe)
                if pair in crossed:
                    continue
            else:
                continue
            if out == W and c == 0:
                continue
            if out == N and r == 0:
                continue
            if out == S and r == n - 1 and c != targets[pipe]:
                continue
            grid[idx] = seg if old == _B else _X
            if old == _B:
                owners[idx] = pipe
            if pair is not None:
                crossed.add(pair)
            if out == S and r == n - 1:
                route(pipe + 1)
            elif out == W:
                extend(pipe, r, c - 1, E)
            elif out == S:
                extend(pipe, r + 1, c, N)
            else:
                extend(pipe, r - 1, c, S)
            grid[idx] = old
            if old == _B:
                del owners[idx]
            if pair is not None:
                crossed.discard(pair)

    def route(pipe: int):
        if pipe == n:
            results.append(tuple(grid))
            return
        extend(pipe, pipe, n - 1, E)

    route(0)
    out: set[Diagram] = set()
    for flat in set(results):
        out |= domino_pairings(Diagram.from_flat(n, flat))
    return out
