"""The 2-switch: a degree-preserving edge rewrite driven by a 2x2 matrix.

A switch is described by an ``ActionMatrix`` ((a, b), (c, d)).  Rows name
the edges to delete (ab and cd), columns the edges to add (ac and bd).
When the matrix is not *interchangeable* in a graph the switch acts as the
identity, so applying one is total: it never fails, it just may do nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, GraphError, is_forest, is_tree, kappa, path_in_forest


class SwitchKind(enum.Enum):
    """How a matrix acts on a particular graph."""

    TRIVIAL = "trivial"
    PLAIN = "plain"
    T_SWITCH = "t_switch"
    F_SWITCH = "f_switch"


@dataclass(frozen=True, order=True)
class ActionMatrix:
    """Labels ((a, b), (c, d)); delete ab and cd, add ac and bd."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if not isinstance(x, int) or x < 1:
                raise GraphError(f"matrix labels must be positive integers, got {x}")

    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def deleted_edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def added_edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.c), (self.b, self.d))

    def transpose(self) -> ActionMatrix:
        """The inverse switch: rows become columns."""
        return ActionMatrix(self.a, self.c, self.b, self.d)

    def __str__(self):
        return f"(({self.a},{self.b}),({self.c},{self.d}))"


def equivalent_forms(m: ActionMatrix) -> frozenset[ActionMatrix]:
    """The four matrices acting identically on every graph.

    Swapping the two rows, or swapping the two columns, renames the same
    deleted/added edge pairs.  Reversing one row alone does not qualify:
    ((a,b),(d,c)) adds ad and bc instead.
    """
    a, b, c, d = m.labels()
    return frozenset(
        {
            ActionMatrix(a, b, c, d),
            ActionMatrix(c, d, a, b),
            ActionMatrix(b, a, d, c),
            ActionMatrix(d, c, b, a),
        }
    )


def is_interchangeable(m: ActionMatrix, g: Graph) -> bool:
    """True when the switch really rewires ``g``.

    Needs ab, cd present, the four labels distinct and in range, and the
    added edges ac, bd absent.  Out-of-range labels simply fail the test,
    which is what makes every matrix total on every graph.
    """
    a, b, c, d = m.labels()
    if len({a, b, c, d}) != 4:
        return False
    if max(a, b, c, d) > g.n:
        return False
    edges = g.edges
    ab = (a, b) if a < b else (b, a)
    cd = (c, d) if c < d else (d, c)
    ac = (a, c) if a < c else (c, a)
    bd = (b, d) if b < d else (d, b)
    return ab in edges and cd in edges and ac not in edges and bd not in edges


def apply_switch(m: ActionMatrix, g: Graph) -> Graph:
    """tau(G): rewire when interchangeable, otherwise return ``g`` itself."""
    if not is_interchangeable(m, g):
        return g
    return g.with_edges(added=m.added_edges(), removed=m.deleted_edges())


def _path_has_form(g: Graph, first: int, second: int, second_last: int, last: int) -> bool:
    path = path_in_forest(g, first, last)
    if path is None or len(path) < 4:
        return False
    return path[1] == second and path[-2] == second_last


def _tree_condition(m: ActionMatrix, g: Graph) -> bool:
    """Path a..d looks like (a b ... c d), or path b..c like (b a ... d c)."""
    a, b, c, d = m.labels()
    return _path_has_form(g, a, b, c, d) or _path_has_form(g, b, a, d, c)


def _same_component(g: Graph, u: int, v: int) -> bool:
    return path_in_forest(g, u, v) is not None


def classify(m: ActionMatrix, g: Graph) -> SwitchKind:
    """Structural classification of how ``m`` acts on ``g``.

    trivial: not interchangeable.  On a tree, t_switch when the result is
    again a tree, which happens exactly when one deleted edge's endpoints
    flank the path to the other.  On a forest, f_switch when the result is
    again a forest: same component plus the tree condition, or the two
    deleted edges in different components.  Everything else is plain.
    The test is structural; no switch is applied here.
    """
    if not is_interchangeable(m, g):
        return SwitchKind.TRIVIAL
    if is_tree(g):
        return SwitchKind.T_SWITCH if _tree_condition(m, g) else SwitchKind.PLAIN
    if is_forest(g):
        a, b, c, d = m.labels()
        if not _same_component(g, a, c):
            return SwitchKind.F_SWITCH
        return SwitchKind.F_SWITCH if _tree_condition(m, g) else SwitchKind.PLAIN
    return SwitchKind.PLAIN


def nontrivial_matrices(g: Graph):
    """Yield one representative per distinct non-trivial switch on ``g``.

    Every interchangeable matrix is row/column-swap equivalent to exactly
    one yielded matrix: deleted edges are taken as an ordered pair of
    disjoint edges with the lexicographically smaller one first, and both
    column orientations are emitted.
    """
    edges = g.sorted_edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if a in (c, d) or b in (c, d):
                continue
            for m in (ActionMatrix(a, b, c, d), ActionMatrix(a, b, d, c)):
                if is_interchangeable(m, g):
                    yield m
