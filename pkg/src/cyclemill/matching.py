"""Maximum matching and minimum vertex cover on the arc set from X to Y,
plus the arc-count threshold predicates built on them."""

from __future__ import annotations

from typing import Iterable

from .core import Tournament, VertexSet, mask_of

Matching = list[tuple[int, int]]


def max_matching_with_cover(
    t: Tournament, xs: Iterable[int], ys: Iterable[int]
) -> tuple[Matching, VertexSet]:
    """Maximum X-to-Y matching and a minimum vertex cover of the same size.

    Augmenting-path search over sorted vertices, then the standard
    alternating-reachability cover extraction, so |matching| == |cover|.
    """
    X = sorted(set(xs))
    Y = sorted(set(ys))
    if set(X) & set(Y):
        raise ValueError("matching requires disjoint vertex sets")
    adj = {x: [y for y in Y if t.arc(x, y)] for x in X}
    match_x: dict[int, int] = {}
    match_y: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in adj[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in match_y or augment(match_y[y], seen):
                match_x[x] = y
                match_y[y] = x
                return True
        return False

    for x in X:
        augment(x, set())

    reach_x = {x for x in X if x not in match_x}
    reach_y: set[int] = set()
    queue = sorted(reach_x)
    while queue:
        x = queue.pop(0)
        for y in adj[x]:
            if y in reach_y:
                continue
            reach_y.add(y)
            x2 = match_y.get(y)
            if x2 is not None and x2 not in reach_x:
                reach_x.add(x2)
                queue.append(x2)
    cover = frozenset(x for x in X if x not in reach_x) | frozenset(
        y for y in Y if y in reach_y
    )
    return sorted(match_x.items()), cover


def has_k_matching(t: Tournament, xs: Iterable[int], ys: Iterable[int], k: int) -> bool:
    if k <= 0:
        return True
    pairs, _ = max_matching_with_cover(t, xs, ys)
    return len(pairs) >= k


def dominating_vertices(t: Tournament, xs: Iterable[int], ys: Iterable[int]) -> VertexSet:
    """All x in X whose out-arcs cover Y entirely."""
    X = set(xs)
    ymask = mask_of(set(ys))
    if mask_of(X) & ymask:
        raise ValueError("dominating_vertices requires disjoint vertex sets")
    return frozenset(x for x in X if t.out_mask(x) & ymask == ymask)
