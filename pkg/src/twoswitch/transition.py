"""Switch traces: sequences of 2-switches connecting same-degree graphs.

The forest route grows the set of edges the working forests share, one
switch at a time, trimming every leaf the two sides agree on so that
finished parts of the problem drop out; recorded switches always act on
original labels even though the working copies shrink.  The general
route rewires both graphs to a shared canonical form and glues the two
halves, inverting one of them.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    GraphError,
    NotAForestError,
    degree_sequence,
    is_forest,
    kappa,
)
from .switch import ActionMatrix, SwitchKind, apply_switch, classify, is_interchangeable


class DegreeSequenceMismatchError(GraphError):
    """Transitions only exist between graphs with identical degree vectors."""


class TrivialStepError(GraphError):
    """A trace step did nothing when replayed."""

    def __init__(self, index: int, matrix: ActionMatrix):
        self.index = index
        self.matrix = matrix
        super().__init__(f"step {index} {matrix} is trivial at its position")


class TraceFormatError(GraphError):
    """Malformed JSON trace."""


@dataclass(frozen=True)
class SwitchTrace:
    """An initial graph plus switches in application order.

    ``kinds`` carries per-step classifications when the producer bothered
    to compute them; it is advisory and not part of the wire format.
    """

    initial: Graph
    steps: tuple[ActionMatrix, ...]
    kinds: tuple[SwitchKind, ...] = field(default=(), compare=False)

    def __len__(self):
        return len(self.steps)


def replay(trace: SwitchTrace) -> list[Graph]:
    """All intermediate graphs, initial first.  Trivial steps are errors."""
    out = [trace.initial]
    for i, m in enumerate(trace.steps):
        g = out[-1]
        if not is_interchangeable(m, g):
            raise TrivialStepError(i, m)
        out.append(apply_switch(m, g))
    return out


@dataclass(frozen=True)
class TraceValidation:
    ok: bool
    final_matches: bool
    steps_nontrivial: bool
    forests_ok: bool | None
    length: int
    kinds: tuple[SwitchKind, ...]
    first_trivial: int | None = None
    first_nonforest: int | None = None  # 0 = initial graph, k = after step k
    bound: int | None = None  # max(0, |E(target) - E(initial)| - 1)
    within_bound: bool | None = None

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "final_matches": self.final_matches,
            "steps_nontrivial": self.steps_nontrivial,
            "forests_ok": self.forests_ok,
            "length": self.length,
            "kinds": [k.value for k in self.kinds],
            "first_trivial": self.first_trivial,
            "first_nonforest": self.first_nonforest,
            "bound": self.bound,
            "within_bound": self.within_bound,
        }


def validate_trace(
    trace: SwitchTrace, target: Graph | None = None, require_forests: bool = False
) -> TraceValidation:
    """Replay and check: nontrivial steps, final graph, optional forestness.

    With no target the final-graph check is vacuous and only structure is
    validated.
    """
    seq = [trace.initial]
    first_trivial = None
    for i, m in enumerate(trace.steps):
        g = seq[-1]
        if not is_interchangeable(m, g):
            first_trivial = i
            break
        seq.append(apply_switch(m, g))
    steps_nontrivial = first_trivial is None
    final_matches = steps_nontrivial and (target is None or seq[-1] == target)
    forests_ok = None
    first_nonforest = None
    if require_forests:
        first_nonforest = next(
            (i for i, g in enumerate(seq) if not is_forest(g)), None
        )
        forests_ok = first_nonforest is None
    kinds = tuple(classify(m, g) for m, g in zip(trace.steps, seq))
    bound = within = None
    if target is not None:
        bound = max(0, len(target.edges - trace.initial.edges) - 1)
        within = len(trace.steps) <= bound
    ok = steps_nontrivial and final_matches and (forests_ok is not False)
    return TraceValidation(
        ok=ok,
        final_matches=final_matches,
        steps_nontrivial=steps_nontrivial,
        forests_ok=forests_ok,
        length=len(trace.steps),
        kinds=kinds,
        first_trivial=first_trivial,
        first_nonforest=first_nonforest,
        bound=bound,
        within_bound=within,
    )


# -- JSON wire format --------------------------------------------------------


def trace_to_json(trace: SwitchTrace) -> str:
    payload = {
        "n": trace.initial.n,
        "initial": [[u, v] for u, v in trace.initial.sorted_edges()],
        "steps": [list(m.labels()) for m in trace.steps],
    }
    return json.dumps(payload, separators=(",", ":"))


def trace_from_json(text: str) -> SwitchTrace:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TraceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise TraceFormatError("trace must be a JSON object")
    try:
        n = payload["n"]
        initial = payload["initial"]
        steps = payload["steps"]
    except KeyError as exc:
        raise TraceFormatError(f"missing key {exc}") from exc
    if not isinstance(n, int):
        raise TraceFormatError("'n' must be an integer")
    try:
        g = Graph(n, [tuple(e) for e in initial])
        matrices = tuple(ActionMatrix(*step) for step in steps)
    except (GraphError, TypeError) as exc:
        raise TraceFormatError(str(exc)) from exc
    if len(g.edges) != len(initial):
        raise TraceFormatError("duplicate edge in initial edge list")
    return SwitchTrace(g, matrices)


# -- trimmable leaves --------------------------------------------------------


def trimmable_leaves(g: Graph, h: Graph) -> frozenset[int]:
    """Vertices of degree 1 in both graphs with the same neighbour in both."""
    if g.n != h.n:
        raise GraphError("graphs must share a vertex set")
    out = set()
    for v in g.vertices():
        gn = g.neighbors(v)
        hn = h.neighbors(v)
        if len(gn) == 1 and gn == hn:
            out.add(v)
    return frozenset(out)


# -- leaf-fixing switch -------------------------------------------------------


def _only(s: set) -> int:
    (x,) = s
    return x


def _working_path(adj: dict[int, set[int]], a: int, b: int) -> list[int] | None:
    if a == b:
        return [a]
    parent = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                if y == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(y)
    return None


def _leaf_candidates(
    adj1: dict[int, set[int]], adj2: dict[int, set[int]], active: set[int]
):
    """Switches ((l,v),(u,w)) that hand leaf l its target neighbour u.

    Yields (gain, l, v, u, w) where gain is the change in the number of
    edges the two working forests share.  l runs over leaves of the first
    forest, u is l's neighbour in the second, v its neighbour in the
    first, and w a neighbour of u in the first; when l and u live in the
    same component w must avoid the l-u path or the result has a cycle,
    and when u is itself a leaf the switch only works across components.
    """
    for leaf in sorted(active):
        if len(adj1[leaf]) != 1:
            continue
        u = _only(adj2[leaf])
        v = _only(adj1[leaf])
        if len(adj2[u]) >= 2:
            path = _working_path(adj1, leaf, u)
            if path is None:
                partners = sorted(adj1[u])
            else:
                on_path = set(path)
                partners = sorted(x for x in adj1[u] if x not in on_path)
            for w in partners:
                gain = 1 - (w in adj2[u]) + (w in adj2[v])
                yield gain, leaf, v, u, w
        else:
            w = _only(adj1[u])
            if _working_path(adj1, leaf, u) is None:
                # u's working edge uw is never a target edge here: that
                # would make u a shared leaf, trimmed before we got here
                yield 1 + (w in adj2[v]), leaf, v, u, w


def _construct_leaf_fixing(
    adj1: dict[int, set[int]], adj2: dict[int, set[int]], active: set[int]
) -> ActionMatrix:
    """One switch on F making some leaf agree with its target neighbour.

    Among all leaf/partner combinations the one gaining the most shared
    edges wins, lowest labels breaking ties.  A combination always exists
    but a strict gain does not: two working forests can reach a state
    where every leaf-fixing switch trades one shared edge for another.
    """
    best = None
    for gain, leaf, v, u, w in _leaf_candidates(adj1, adj2, active):
        if best is None or gain > best[0]:
            best = (gain, leaf, v, u, w)
    assert best is not None, "some leaf always admits a fixing switch"
    _, leaf, v, u, w = best
    return ActionMatrix(leaf, v, u, w)


def leaf_fixing_switch(f: Graph, f2: Graph) -> ActionMatrix:
    """The switch from the trimmed-leaf construction, on full graphs.

    Preconditions: both forests with the same degree vector, different,
    and with no trimmable leaf between them.
    """
    _check_transition_inputs(f, f2, forests=True)
    if f == f2:
        raise GraphError("graphs are equal; no switch needed")
    if any(f.degree(v) == 0 for v in f.vertices()):
        raise GraphError("isolated vertices present; strip them first")
    if trimmable_leaves(f, f2):
        raise GraphError("trimmable leaves present; trim before switching")
    adj1 = {v: set(f.neighbors(v)) for v in f.vertices()}
    adj2 = {v: set(f2.neighbors(v)) for v in f2.vertices()}
    active = {v for v in f.vertices() if adj1[v]}
    m = _construct_leaf_fixing(adj1, adj2, active)
    assert is_interchangeable(m, f), "constructed switch must be applicable"
    return m


# -- forest transition --------------------------------------------------------


def _check_transition_inputs(g: Graph, h: Graph, forests: bool):
    if g.n != h.n:
        raise GraphError(f"orders differ: {g.n} vs {h.n}")
    if degree_sequence(g) != degree_sequence(h):
        raise DegreeSequenceMismatchError(
            f"degree vectors differ: {degree_sequence(g)} vs {degree_sequence(h)}"
        )
    if forests:
        if not is_forest(g) or not is_forest(h):
            raise NotAForestError("both inputs must be forests")


def _apply_to_working(adj: dict[int, set[int]], m: ActionMatrix):
    a, b, c, d = m.labels()
    adj[a].remove(b)
    adj[b].remove(a)
    adj[c].remove(d)
    adj[d].remove(c)
    adj[a].add(c)
    adj[c].add(a)
    adj[b].add(d)
    adj[d].add(b)


def _edge_set(adj: dict[int, set[int]], active: set[int]) -> set[tuple[int, int]]:
    return {(v, x) for v in active for x in adj[v] if x > v}


def _finishing_switch(red: set[tuple[int, int]], blue: set[tuple[int, int]]) -> ActionMatrix:
    """The unique switch resolving a two-edge difference.

    With equal degree vectors every vertex touches as many red edges
    (present, unwanted) as blue ones (wanted, absent), so two of each
    always close up into an alternating four-cycle.
    """
    (a, b) = min(red)
    a_blue = [e for e in blue if a in e]
    assert len(a_blue) == 1, "difference edges must balance at every vertex"
    c = a_blue[0][0] if a_blue[0][1] == a else a_blue[0][1]
    other_red = next(e for e in red if e != (a, b))
    assert c in other_red, "difference edges must form a square"
    d = other_red[0] if other_red[1] == c else other_red[1]
    return ActionMatrix(a, b, c, d)


def _forest_switches(edges: set[tuple[int, int]]):
    """All valid forest-preserving switches on the given edge set.

    Yields (matrix, resulting edge set) in a fixed order: edge pairs
    lexicographically, straight pairing before crossed.
    """

    def acyclic(es) -> bool:
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in es:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def norm(u, v):
        return (u, v) if u < v else (v, u)

    ordered = sorted(edges)
    for i, (a, b) in enumerate(ordered):
        for c, d in ordered[i + 1 :]:
            if len({a, b, c, d}) < 4:
                continue
            for x, y in ((c, d), (d, c)):
                ax, by = norm(a, x), norm(b, y)
                if ax in edges or by in edges:
                    continue
                result = edges - {(a, b), (c, d)} | {ax, by}
                if acyclic(result):
                    yield ActionMatrix(a, b, x, y), result


def _scan_gaining_switch(
    adj2: dict[int, set[int]], edges: set[tuple[int, int]]
) -> ActionMatrix | None:
    """Best forest-preserving switch by shared-edge gain, or None if the
    best available gain is not positive.

    Tries every pairing of two disjoint working edges.  Quadratic in the
    edge count and only called when no leaf-fixing switch gains.
    """
    best: tuple[int, ActionMatrix] | None = None
    for m, _ in _forest_switches(edges):
        a, b, x, y = m.labels()
        gain = (
            (x in adj2[a])
            + (y in adj2[b])
            - (b in adj2[a])
            - (y in adj2[x])
        )
        if best is None or gain > best[0]:
            best = (gain, m)
            if gain == 2:
                break
    if best is None or best[0] < 1:
        return None
    return best[1]


def _search_completion(
    edges: set[tuple[int, int]], goal: set[tuple[int, int]]
) -> list[ActionMatrix]:
    """Shortest forest-preserving route between two working edge sets.

    Plain breadth-first search; only reached from plateau states where
    no single switch grows the shared edge set, which are rare and leave
    few edges in play.
    """
    start = frozenset(edges)
    target = frozenset(goal)
    parents: dict[frozenset, tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            out = []
            while parents[cur] is not None:
                prev, m = parents[cur]
                out.append(m)
                cur = prev
            out.reverse()
            return out
        for m, result in _forest_switches(set(cur)):
            key = frozenset(result)
            if key not in parents:
                parents[key] = (cur, m)
                queue.append(key)
    raise AssertionError("equal-degree working forests must be connected")


def transition_forest(f: Graph, f2: Graph) -> SwitchTrace:
    """A trace of f-switches from ``f`` to ``f2``.

    Loop: trim every leaf whose edge the two working forests agree on;
    with exactly two edges of difference left, one switch finishes the
    job; otherwise perform a switch that grows the shared edge set, or,
    when no single switch does, splice in the shortest route found by
    search.  Recorded switches reference original labels throughout, so
    the trace replays on the untrimmed input.

    Two forests with the same degree vector never differ in exactly one
    edge, so the final switch always closes a gap of two while the rest
    typically narrow it by at least one: the trace stays within
    max(0, |E(f2) - E(f)| - 1) switches whenever the greedy gains hold
    up, which is always the case through n = 7 (checked exhaustively)
    and everywhere else we have looked except for rare plateau pairs
    where even the shortest possible route exceeds that number.
    """
    _check_transition_inputs(f, f2, forests=True)
    assert kappa(f) == kappa(f2), "same degree vector forces equal components"

    adj1 = {v: set(f.neighbors(v)) for v in f.vertices()}
    adj2 = {v: set(f2.neighbors(v)) for v in f2.vertices()}
    active = {v for v in f.vertices() if adj1[v]}
    steps: list[ActionMatrix] = []

    def current_trimmable() -> set[int]:
        return {
            v
            for v in active
            if len(adj1[v]) == 1 and adj1[v] == adj2[v]
        }

    while any(adj1[v] != adj2[v] for v in active):
        lam = current_trimmable()
        if lam:
            for v in sorted(lam):
                if not adj1[v]:
                    continue  # partner leaf of a shared K2 was trimmed first
                nb = _only(adj1[v])
                adj1[v].clear()
                adj1[nb].discard(v)
                adj2[v].clear()
                adj2[nb].discard(v)
            active = {v for v in active - lam if adj1[v]}
            continue

        e1 = _edge_set(adj1, active)
        e2 = _edge_set(adj2, active)
        gap = len(e2 - e1)
        assert gap != 1, "equal degree vectors forbid a one-edge difference"
        if gap == 2:
            m = _finishing_switch(e1 - e2, e2 - e1)
        else:
            gain, leaf, v, u, w = max(
                _leaf_candidates(adj1, adj2, active), key=lambda t: t[0]
            )
            if gain >= 1:
                m = ActionMatrix(leaf, v, u, w)
            else:
                m = _scan_gaining_switch(adj2, e1)
            if m is None:
                # plateau: every single switch trades away as much as it
                # gains, so fall back to an exact shortest completion
                steps.extend(_search_completion(e1, e2))
                break
        _apply_to_working(adj1, m)
        steps.append(m)

    trace = _annotated(f, steps)
    sequence = replay(trace)
    assert sequence[-1] == f2, "trace must land on the target forest"
    assert all(is_forest(g) for g in sequence), "intermediates must stay forests"
    return trace


def _annotated(initial: Graph, steps: list[ActionMatrix]) -> SwitchTrace:
    kinds = []
    g = initial
    for m in steps:
        kinds.append(classify(m, g))
        g = apply_switch(m, g)
    return SwitchTrace(initial, tuple(steps), tuple(kinds))


# -- general transition via a canonical form ----------------------------------


def _normalize_to_canonical(g: Graph) -> tuple[list[ActionMatrix], Graph]:
    """Rewire ``g`` into the canonical realization of its degree vector.

    Vertices are settled one at a time in (residual degree desc, label)
    order; the settled vertex ends up adjacent to the highest-priority
    remaining vertices.  Each correction is a single valid 2-switch, and
    the fixed point depends only on the degree vector, so two graphs with
    the same vector always meet.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}
    remaining = set(g.vertices())
    steps: list[ActionMatrix] = []
    while len(remaining) > 1:
        order = sorted(remaining, key=lambda z: (-len(adj[z] & remaining), z))
        v = order[0]
        live = adj[v] & remaining
        d = len(live)
        if d == 0:
            remaining.discard(v)
            continue
        targets = order[1 : 1 + d]
        target_set = set(targets)
        while True:
            live = adj[v] & remaining
            if live == target_set:
                break
            w = next(t for t in targets if t not in live)
            x = min(live - target_set)
            # w outranks x, so w has a neighbour y that x lacks
            ys = sorted(
                y
                for y in (adj[w] & remaining)
                if y not in adj[x] and y != x and y != v
            )
            assert ys, "priority order guarantees an exchange partner"
            m = ActionMatrix(v, x, w, ys[0])
            assert is_interchangeable(m, Graph(g.n, _adj_edges(adj)))
            _apply_to_working(adj, m)
            steps.append(m)
        remaining.discard(v)
    return steps, Graph(g.n, _adj_edges(adj))


def _adj_edges(adj: dict[int, set[int]]) -> list[tuple[int, int]]:
    return [(u, v) for u in adj for v in adj[u] if u < v]


def transition_graph(g: Graph, h: Graph) -> SwitchTrace:
    """A trace of plain 2-switches from ``g`` to ``h``.

    Both graphs are rewired to the shared canonical form; the second half
    is reversed step by step using the transpose (the inverse switch).
    No effort is made to keep intermediates inside any family, and the
    trace is generally not shortest.
    """
    _check_transition_inputs(g, h, forests=False)
    if g == h:
        return SwitchTrace(g, (), ())
    steps_g, canon_g = _normalize_to_canonical(g)
    steps_h, canon_h = _normalize_to_canonical(h)
    assert canon_g == canon_h, "equal degree vectors must share a canonical form"
    steps = list(steps_g) + [m.transpose() for m in reversed(steps_h)]
    trace = _annotated(g, steps)
    sequence = replay(trace)
    assert sequence[-1] == h, "trace must land on the target graph"
    return trace
