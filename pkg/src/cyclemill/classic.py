"""Constructive classics: Hamiltonian paths, Hamiltonian cycles in strong
tournaments, and cycles of every length through any chosen vertex."""

from __future__ import annotations

from .core import Cycle, Path, Tournament, bits, is_cycle, mask_of


class NotStrongError(ValueError):
    """Raised when an operation requires a strongly connected tournament."""


def _require_strong(t: Tournament) -> None:
    comps = t.strong_components()
    if len(comps) > 1:
        top = sorted(comps[0])
        rest = sorted(v for c in comps[1:] for v in c)
        raise NotStrongError(f"not strong: {top} dominates {rest}")


def hamiltonian_path(t: Tournament) -> Path:
    """Insertion construction: each vertex goes into the first feasible slot."""
    path: list[int] = [0]
    for v in range(1, t.n):
        for i in range(len(path) + 1):
            ok_left = i == 0 or t.arc(path[i - 1], v)
            ok_right = i == len(path) or t.arc(v, path[i])
            if ok_left and ok_right:
                path.insert(i, v)
                break
        else:  # a feasible slot always exists in a tournament
            raise AssertionError("no feasible insertion slot")
    return tuple(path)


def _triangle_through(t: Tournament, v: int) -> Cycle:
    """Lowest-labeled 3-cycle through v; exists whenever t is strong and n >= 3."""
    out = t.out_mask(v)
    inc = t.in_mask(v)
    for x in bits(out):
        hit = t.out_mask(x) & inc
        if hit:
            y = next(bits(hit))
            return (v, x, y)
    raise NotStrongError(f"no 3-cycle through vertex {v}")


def _grow_cycle(t: Tournament, cycle: Cycle, keep: int | None) -> Cycle:
    """One growth step: a cycle one vertex longer, never dropping ``keep``.

    If some outside vertex has arcs both into and out of the cycle it is
    spliced between a dominating/dominated consecutive pair, preserving every
    cycle vertex.  Otherwise the outside vertices split into full dominators
    and fully dominated ones; an arc from the dominated side to the dominating
    side replaces a single cycle vertex with that vertex pair.
    """
    cmask = mask_of(cycle)
    outside = t.full_mask & ~cmask
    m = len(cycle)
    for u in bits(outside):
        if t.out_mask(u) & cmask and t.in_mask(u) & cmask:
            for i in range(m):
                if t.arc(cycle[i], u) and t.arc(u, cycle[(i + 1) % m]):
                    return cycle[: i + 1] + (u,) + cycle[i + 1 :]
            raise AssertionError("mixed vertex with no insertion point")
    dominated = [u for u in bits(outside) if not t.out_mask(u) & cmask]
    dominators = [u for u in bits(outside) if not t.in_mask(u) & cmask]
    for b in dominated:
        for a in dominators:
            if t.arc(b, a):
                drop = min(v for v in cycle if v != keep)
                i = cycle.index(drop)
                rotated = cycle[i:] + cycle[:i]  # rotated[0] is dropped
                return (rotated[-1], b, a) + rotated[1:-1]
    raise NotStrongError("cycle cannot be extended; tournament is not strong")


def extend_cycle(t: Tournament, cycle: Cycle) -> Cycle:
    """Grow a cycle of a strong tournament by one vertex."""
    if not is_cycle(t, cycle):
        raise ValueError(f"not a valid cycle: {cycle}")
    if len(cycle) >= t.n:
        raise ValueError("cycle is already Hamiltonian")
    _require_strong(t)
    return _grow_cycle(t, cycle, keep=None)


def hamiltonian_cycle(t: Tournament) -> Cycle:
    if t.n < 3:
        raise NotStrongError(f"no cycle exists on {t.n} vertex(es)")
    _require_strong(t)
    cycle = _triangle_through(t, 0)
    while len(cycle) < t.n:
        cycle = _grow_cycle(t, cycle, keep=None)
    return cycle


def cycle_of_length(t: Tournament, length: int) -> Cycle:
    _require_strong(t)
    if not 3 <= length <= t.n:
        raise ValueError(f"cycle length {length} outside 3..{t.n}")
    cycle = _triangle_through(t, 0)
    while len(cycle) < length:
        cycle = _grow_cycle(t, cycle, keep=None)
    return cycle


def cycle_through_vertex(t: Tournament, v: int, length: int) -> Cycle:
    """A cycle of exactly ``length`` vertices containing v (t strong)."""
    t._check_vertex(v)
    _require_strong(t)
    if not 3 <= length <= t.n:
        raise ValueError(f"cycle length {length} outside 3..{t.n}")
    cycle = _triangle_through(t, v)
    while len(cycle) < length:
        cycle = _grow_cycle(t, cycle, keep=v)
    return cycle


def lifted(seq: tuple[int, ...], label_map: tuple[int, ...]) -> tuple[int, ...]:
    """Map an induced-subtournament vertex sequence back to parent labels."""
    return tuple(label_map[v] for v in seq)
