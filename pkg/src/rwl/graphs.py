"""Simple undirected graphs: board families, edge-list I/O, connectivity.

Vertices are dense 0-based integers.  Board families (king, grid) place
square (i, j) of an m x n board at index i*n + j, row major, which gives a
stable canonical order for DP bitsets and reproducible output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "EdgeListParseError",
    "FamilySpec",
    "Graph",
    "SelfLoopError",
    "VertexRangeError",
    "build_family",
    "complete_graph",
    "cycle_graph",
    "grid_graph",
    "is_connected",
    "king_graph",
    "parse_graph",
    "path_graph",
    "render_graph",
]

FAMILY_KINDS = ("complete", "path", "cycle", "king", "grid")


class EdgeListParseError(ValueError):
    """Malformed edge-list text; ``lineno`` is 1-based (None at EOF)."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SelfLoopError(EdgeListParseError):
    """Edge list contains a self-loop, which simple graphs forbid."""


class VertexRangeError(EdgeListParseError):
    """Edge endpoint outside 0..n-1."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj`` holds one frozenset of neighbors per vertex; symmetry and
    absence of self-loops are checked at construction.  ``name`` is a
    cosmetic family tag and does not take part in equality.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency length {len(self.adj)} != n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of vertex {v} out of range")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges, name: str | None = None) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs; duplicates merge."""
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj), name)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbor_masks(self) -> list[int]:
        """Bitset view of adjacency, one machine-word int per vertex."""
        return [sum(1 << w for w in nbrs) for nbrs in self.adj]

    def relabeled(self, perm) -> "Graph":
        """Copy with vertex v renamed to perm[v]."""
        return Graph.from_edges(
            self.n, [(perm[u], perm[v]) for u, v in self.edges()], self.name
        )


@dataclass(frozen=True)
class FamilySpec:
    """One of the supported graph families with its size parameters.

    ``kind`` is complete | path | cycle (parameter n) or king | grid
    (board of m rows by n columns).
    """

    kind: str
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind: {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"{self.kind} needs n >= 1, got {self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError(f"cycle needs n >= 3, got {self.n}")
        if self.kind in ("king", "grid"):
            if self.m is None or self.m < 1:
                raise ValueError(f"{self.kind} needs m >= 1, got {self.m}")
        elif self.m is not None:
            raise ValueError(f"{self.kind} takes no m parameter")

    def label(self) -> str:
        if self.m is None:
            return f"{self.kind}({self.n})"
        return f"{self.kind}({self.m},{self.n})"

    @property
    def order(self) -> int:
        """Number of vertices of the resulting graph."""
        return self.n if self.m is None else self.m * self.n


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    n, m = spec.n, spec.m
    if spec.kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph.from_edges(n, edges, spec.label())
    if spec.kind == "path":
        return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)], spec.label())
    if spec.kind == "cycle":
        edges = [(v, (v + 1) % n) for v in range(n)]
        return Graph.from_edges(n, edges, spec.label())
    # board families: vertex (i, j) -> i*n + j
    assert m is not None
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if spec.kind == "grid":
                if j + 1 < n:
                    edges.append((v, v + 1))
                if i + 1 < m:
                    edges.append((v, v + n))
            else:  # king: one-step moves, diagonals included
                for di, dj in ((0, 1), (1, -1), (1, 0), (1, 1)):
                    a, b = i + di, j + dj
                    if 0 <= a < m and 0 <= b < n:
                        edges.append((v, a * n + b))
    return Graph.from_edges(m * n, edges, spec.label())


def complete_graph(n: int) -> Graph:
    return build_family(FamilySpec("complete", n))


def path_graph(n: int) -> Graph:
    return build_family(FamilySpec("path", n))


def cycle_graph(n: int) -> Graph:
    return build_family(FamilySpec("cycle", n))


def king_graph(m: int, n: int) -> Graph:
    return build_family(FamilySpec("king", n, m))


def grid_graph(m: int, n: int) -> Graph:
    return build_family(FamilySpec("grid", n, m))


def parse_graph(text: str, name: str | None = None) -> Graph:
    """Parse edge-list text: header line "n m", then m lines "u v".

    Lines whose first non-blank character is '#' are comments; blank lines
    are skipped.  Duplicate edges are merged; self-loops are rejected.
    Disconnected graphs parse fine -- connectivity is a counting-layer
    concern, not a parsing one.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(
                f"expected two whitespace-separated integers, got {line!r}", lineno
            )
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 1:
                raise EdgeListParseError(f"vertex count must be >= 1, got {a}", lineno)
            if b < 0:
                raise EdgeListParseError(f"edge count must be >= 0, got {b}", lineno)
            header = (a, b)
            n, m = header
            continue
        if len(edges) >= m:
            raise EdgeListParseError(
                f"more than the declared {m} edge lines", lineno
            )
        if a == b:
            raise SelfLoopError(f"self-loop {a} {b} is not allowed", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise VertexRangeError(
                f"edge {a} {b} out of range for vertex count {n}", lineno
            )
        edges.append((a, b))
    if header is None:
        raise EdgeListParseError("missing header line \"n m\"")
    if len(edges) < m:
        raise EdgeListParseError(f"expected {m} edge lines, found {len(edges)}")
    return Graph.from_edges(n, edges, name)


def render_graph(g: Graph) -> str:
    """Inverse of parse_graph; edges are emitted sorted, so the output is
    canonical and parse_graph(render_graph(g)) == g."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (n = 1 is connected)."""
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
