"""Ground-truth counting of random walk labelings.

A random walk labeling is produced by dropping a walker on any start
vertex, stamping it 1, and then walking along edges, stamping 2, 3, ... on
each first visit until every vertex is stamped.  The outcome is recorded
as a label order: a tuple ``seq`` with seq[i] = vertex that received label
i + 1.

Two independent counters live here and neither trusts the other:

* :func:`enumerate_labelings_walk` explores the literal process state
  space (labeled sequence, walker position) and returns the exact set of
  obtainable label orders.
* :func:`count_labelings_dp` runs a subset dynamic program that counts
  vertex orderings whose every prefix induces a connected subgraph.

That these agree is a tested property of the package, not an assumption:
the walk can revisit stamped vertices freely, which is exactly what makes
every "connected prefix" order reachable, and the test suite checks the
equivalence over all small family graphs plus hundreds of random ones.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = [
    "DP_MAX_VERTICES",
    "TooLargeError",
    "WALK_ENUMERATION_MAX",
    "count_labelings_dp",
    "count_labelings_started_at",
    "enumerate_labelings_walk",
    "order_from_labels",
]

WALK_ENUMERATION_MAX = 10
DP_MAX_VERTICES = 64  # single machine-word bitset; the DP is infeasible far below this
_DENSE_MAX = 22  # beyond this a dense 2^n table gets memory-hungry; switch to layers


class TooLargeError(ValueError):
    """Graph exceeds the size bound of the requested counting routine."""


def enumerate_labelings_walk(g: Graph) -> set[tuple[int, ...]]:
    """Exact set of label orders obtainable by the walk process on g.

    States are (labeled sequence, walker position).  Moves that only
    wander among already-labeled vertices are collapsed by taking the
    reachability closure of the walker inside the labeled induced
    subgraph; from anywhere in that closure the walker may step onto an
    unlabeled neighbor, which gets the next label.  Every transition
    extends the sequence, so exploration terminates, and each sequence is
    generated from its unique parent prefix exactly once.

    Exponential in the number of labelings; refuses n > 10.
    """
    if g.n > WALK_ENUMERATION_MAX:
        raise TooLargeError(
            f"walk enumeration supports n <= {WALK_ENUMERATION_MAX}, got n={g.n}"
        )
    adj = g.adj
    complete: set[tuple[int, ...]] = set()
    stack: list[tuple[tuple[int, ...], int]] = [((v,), v) for v in range(g.n)]
    while stack:
        seq, walker = stack.pop()
        if len(seq) == g.n:
            complete.add(seq)
            continue
        labeled = set(seq)
        closure = {walker}
        frontier = [walker]
        while frontier:
            u = frontier.pop()
            for w in adj[u]:
                if w in labeled and w not in closure:
                    closure.add(w)
                    frontier.append(w)
        reachable_unlabeled: set[int] = set()
        for u in closure:
            reachable_unlabeled |= adj[u] - labeled
        for w in reachable_unlabeled:
            stack.append((seq + (w,), w))
    return complete


def _check_dp_size(g: Graph) -> None:
    if g.n > DP_MAX_VERTICES:
        raise TooLargeError(
            f"subset DP supports n <= {DP_MAX_VERTICES}, got n={g.n}"
        )


def _dp_dense(masks: list[int], starts) -> int:
    """One count per subset, filled in increasing numeric order (every
    proper subset precedes its supersets, so propagation is sound)."""
    n = len(masks)
    full = (1 << n) - 1
    f = [0] * (1 << n)
    for v in starts:
        f[1 << v] = 1
    for s in range(1, full):
        c = f[s]
        if not c:
            continue
        reach = 0
        t = s
        while t:
            low = t & -t
            reach |= masks[low.bit_length() - 1]
            t ^= low
        ext = reach & ~s
        while ext:
            low = ext & -ext
            f[s | low] += c
            ext ^= low
    return f[full]


def _dp_layered(masks: list[int], starts, n: int) -> int:
    """Popcount-layered variant: only connected subsets are materialized
    and at most two layers are resident, each entry carrying its
    neighborhood mask so extension never rescans members."""
    full = (1 << n) - 1
    layer: dict[int, list[int]] = {}
    for v in starts:
        s = 1 << v
        layer[s] = [masks[v], 1]
    for _ in range(n - 1):
        nxt: dict[int, list[int]] = {}
        for s, (reach, count) in layer.items():
            ext = reach & ~s
            while ext:
                low = ext & -ext
                grown = s | low
                entry = nxt.get(grown)
                if entry is None:
                    nxt[grown] = [reach | masks[low.bit_length() - 1], count]
                else:
                    entry[1] += count
                ext ^= low
        layer = nxt
    entry = layer.get(full)
    return entry[1] if entry else 0


def _count_dp(g: Graph, starts, low_memory: bool) -> int:
    _check_dp_size(g)
    starts = list(starts)
    if not starts:
        return 0
    if g.n == 1:
        return 1
    masks = g.neighbor_masks()
    if low_memory or g.n > _DENSE_MAX:
        return _dp_layered(masks, starts, g.n)
    return _dp_dense(masks, starts)


def count_labelings_dp(g: Graph, *, low_memory: bool = False) -> int:
    """Number of random walk labelings of g, via DP over vertex subsets.

    f({v}) = 1 for every start; f(S) sums f(S \\ {v}) over vertices v
    whose removal leaves a set they are adjacent to; the answer is f(V).
    Disconnected graphs yield 0 -- no walk reaches the other component.

    Supports n <= 64 (bitset bound); practical on commodity hardware up
    to roughly n = 26.
    """
    return _count_dp(g, range(g.n), low_memory)


def count_labelings_started_at(g: Graph, v: int, *, low_memory: bool = False) -> int:
    """Number of walk labelings whose label 1 lands on vertex v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return _count_dp(g, [v], low_memory)


def order_from_labels(labels) -> tuple[int, ...]:
    """Convert per-vertex labels (labels[v] in 1..n) to a label order, the
    tuple whose i-th entry is the vertex that received label i + 1."""
    labels = list(labels)
    n = len(labels)
    order = [-1] * n
    for v, lab in enumerate(labels):
        if not 1 <= lab <= n:
            raise ValueError(f"label {lab} out of range 1..{n}")
        if order[lab - 1] != -1:
            raise ValueError(f"label {lab} assigned twice")
        order[lab - 1] = v
    return tuple(order)
