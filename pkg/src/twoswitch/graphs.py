"""Simple labelled graphs on vertex set {1, ..., n}.

Everything downstream (switches, transitions, audits) works with small
graphs whose vertices are consecutive integers starting at 1.  Graphs are
immutable so they can be hashed, deduplicated and used as dict keys.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class GraphError(Exception):
    """Base class for domain errors raised by this package."""


class GraphFormatError(GraphError):
    """Malformed edge-list text."""


class NotAForestError(GraphError):
    """An operation that needs an acyclic graph got a cyclic one."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphFormatError(f"loop edge {u}-{v} not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices 1..n and an explicit edge set."""

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphFormatError(f"order must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            u, v = _normalize_edge(int(u), int(v))
            if not (1 <= u and v <= n):
                raise GraphFormatError(f"edge {u}-{v} out of range for order {n}")
            norm.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.edges)))
        return self._hash

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"

    def __contains__(self, edge) -> bool:
        return _normalize_edge(*edge) in self.edges

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Neighbour lists, each sorted ascending."""
        if self._adj is None:
            adj: dict[int, list[int]] = {v: [] for v in self.vertices()}
            for u, v in sorted(self.edges):
                adj[u].append(v)
                adj[v].append(u)
            object.__setattr__(
                self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()}
            )
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    # -- edge rewrites (return new graphs) ---------------------------------

    def with_edges(self, added=(), removed=()) -> Graph:
        edges = set(self.edges)
        for e in removed:
            edges.discard(_normalize_edge(*e))
        for e in added:
            edges.add(_normalize_edge(*e))
        return Graph(self.n, edges)


# -- degree sequences ------------------------------------------------------


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Per-vertex degrees in label order (index 0 is vertex 1)."""
    adj = g.adjacency()
    return tuple(len(adj[v]) for v in g.vertices())


def is_graphical(seq) -> bool:
    """Erdos-Gallai test: is ``seq`` the degree sequence of a simple graph?"""
    seq = list(seq)
    n = len(seq)
    if any(d < 0 or d > n - 1 for d in seq):
        return False
    if sum(seq) % 2 != 0:
        return False
    d = sorted(seq, reverse=True)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(di, k) for di in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


# -- connectivity ----------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, listed by minimum."""
    adj = g.adjacency()
    seen = set()
    out = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def kappa(g: Graph) -> int:
    """Number of connected components."""
    return len(components(g))


def is_forest(g: Graph) -> bool:
    return g.size == g.n - kappa(g)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and kappa(g) == 1 and g.size == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    """Exactly one cycle overall: size is n - kappa + 1."""
    return g.size == g.n - kappa(g) + 1


def path_in_forest(g: Graph, u: int, v: int) -> list[int] | None:
    """The unique u-v path as a vertex list, or None if u, v are disconnected.

    Raises NotAForestError when ``g`` has a cycle, since uniqueness is what
    callers rely on.
    """
    if not is_forest(g):
        raise NotAForestError("path_in_forest needs an acyclic graph")
    if u not in g.vertices() or v not in g.vertices():
        raise GraphError(f"vertex out of range: {u} or {v}")
    if u == v:
        return [u]
    adj = g.adjacency()
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                if y == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(y)
    return None


@dataclass(frozen=True)
class Bipartition:
    """A two-colouring; part_a holds the lowest vertex of every component."""

    part_a: frozenset[int]
    part_b: frozenset[int]

    def side(self, v: int) -> int:
        if v in self.part_a:
            return 0
        if v in self.part_b:
            return 1
        raise GraphError(f"vertex {v} not in bipartition")


def bipartition(g: Graph) -> Bipartition | None:
    """Deterministic 2-colouring, or None when an odd cycle exists."""
    adj = g.adjacency()
    colour: dict[int, int] = {}
    for start in g.vertices():
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    part_a = frozenset(v for v, c in colour.items() if c == 0)
    part_b = frozenset(v for v, c in colour.items() if c == 1)
    return Bipartition(part_a, part_b)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


# -- text formats ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Read the plain edge-list format.

    First meaningful line is ``n <order>``; every further line is ``u v``
    with 1 <= u < v <= n.  Lines starting with ``#`` and blank lines are
    skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphFormatError(
                    f"line {lineno}: expected header 'n <order>', got {line!r}"
                )
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}")
        if not (1 <= u < v <= n):
            raise GraphFormatError(
                f"line {lineno}: edge {u} {v} violates 1 <= u < v <= {n}"
            )
        if (u, v) in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <order>' header")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize; edges come out sorted so equal graphs print identically."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT text for graphviz; vertices always appear even when isolated."""
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
