"""Family-level experiments: enumeration, audits, searches.

A family is all graphs sharing one degree vector, optionally restricted
to forests, trees, unicyclic or bipartite members.  The audits confirm
the two headline behaviours of the 2-switch on these families: every
parameter moves by at most one per switch, and the value set of a
parameter over a family is a full integer interval.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import parameters
from .census import CENSUS_MAX, census
from .fixtures import fig2
from .graphs import (
    Graph,
    GraphError,
    bipartition,
    degree_sequence,
    is_bipartite,
    is_forest,
    is_graphical,
    is_tree,
    is_unicyclic,
    kappa,
)
from .switch import ActionMatrix, apply_switch, nontrivial_matrices
from .transition import SwitchTrace, replay, transition_forest, transition_graph


class CapExceededError(GraphError):
    """The requested order is above the configured exhaustive cap."""


class ValueOutOfRangeError(GraphError):
    """Requested parameter value lies outside the family's interval."""


FAMILY_PREDICATES = {
    "all": lambda g: True,
    "forest": is_forest,
    "tree": is_tree,
    "unicyclic": is_unicyclic,
    "bipartite": is_bipartite,
}

ENUMERATION_CAP = 9


@dataclass(frozen=True)
class AuditConfig:
    """Knobs for the exhaustive machinery."""

    enumeration_cap: int = ENUMERATION_CAP
    census_max: int = CENSUS_MAX
    workers: int = 1


# -- enumeration ---------------------------------------------------------------


def enumerate_family(seq, family: str = "all", cap: int = ENUMERATION_CAP):
    """Yield every graph with degree vector ``seq`` in the family.

    Output order is lexicographic on sorted edge lists: vertex 1's
    neighbourhood is decided first, in ascending combinations, then the
    next unfinished vertex, and so on.  Non-graphical input yields
    nothing.
    """
    if family not in FAMILY_PREDICATES:
        raise GraphError(f"unknown family {family!r}")
    seq = tuple(int(d) for d in seq)
    n = len(seq)
    if n > cap:
        raise CapExceededError(f"order {n} above enumeration cap {cap}")
    if not is_graphical(seq):
        return
    keep = FAMILY_PREDICATES[family]
    residual = [0] + list(seq)  # 1-indexed

    def rec(edges: list):
        v = next((u for u in range(1, n + 1) if residual[u] > 0), None)
        if v is None:
            g = Graph(n, edges)
            if keep(g):
                yield g
            return
        partners = [w for w in range(v + 1, n + 1) if residual[w] > 0]
        need = residual[v]
        if len(partners) < need:
            return
        for combo in itertools.combinations(partners, need):
            residual[v] = 0
            for w in combo:
                residual[w] -= 1
            if is_graphical([residual[w] for w in range(v + 1, n + 1)]):
                edges.extend((v, w) for w in combo)
                yield from rec(edges)
                del edges[-need:]
            for w in combo:
                residual[w] += 1
            residual[v] = need

    yield from rec([])


def family_members(seq, family: str = "all", cap: int = ENUMERATION_CAP) -> list[Graph]:
    return list(enumerate_family(seq, family, cap))


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    """Outcome of a stability, interval or edge-move audit."""

    audit: str
    passed: bool
    kind: str | None = None
    family: str | None = None
    sequence: tuple[int, ...] | None = None
    values: tuple[int, ...] = ()
    interval_ok: bool | None = None
    witnesses: dict[int, Graph] = field(default_factory=dict)
    counterexample: tuple | None = None
    checked: int = 0
    notes: str = ""

    def as_dict(self) -> dict:
        cex = None
        if self.counterexample is not None:
            cex = [
                sorted(x.edges) if isinstance(x, Graph) else str(x)
                for x in self.counterexample
            ]
        return {
            "audit": self.audit,
            "passed": self.passed,
            "kind": self.kind,
            "family": self.family,
            "sequence": list(self.sequence) if self.sequence is not None else None,
            "values": list(self.values),
            "interval_ok": self.interval_ok,
            "witnesses": {
                int(v): [list(e) for e in g.sorted_edges()]
                for v, g in sorted(self.witnesses.items())
            },
            "counterexample": cex,
            "checked": self.checked,
            "notes": self.notes,
        }


# -- census plumbing -------------------------------------------------------------


def _switch_patterns(cen):
    """One canonical representative per distinct switch shape on the order."""
    pats = []
    for k1, (a, b) in enumerate(cen.slots):
        for k2 in range(k1 + 1, cen.n_slots):
            c, d = cen.slots[k2]
            if a in (c, d) or b in (c, d):
                continue
            for x, y in ((c, d), (d, c)):
                a1 = cen.slot_index[(min(a, x), max(a, x))]
                a2 = cen.slot_index[(min(b, y), max(b, y))]
                m = ActionMatrix(a + 1, b + 1, x + 1, y + 1)
                pats.append((k1, k2, a1, a2, m))
    return pats


def _family_selector(cen, family: str) -> np.ndarray:
    if family == "all":
        return np.ones(cen.n_masks, dtype=bool)
    if family == "forest":
        return cen.forest.copy()
    if family == "tree":
        return cen.forest & (cen.tables["components"] == 1)
    if family == "unicyclic":
        comp = cen.tables["components"].astype(np.int16)
        return cen.popcount.astype(np.int16) == cen.n - comp + 1
    if family == "bipartite":
        return cen.tables["chromatic"] <= 2
    raise GraphError(f"unknown family {family!r}")


# -- stability audit --------------------------------------------------------------


def stability_audit(
    kind: str, graph: Graph | None = None, n: int | None = None
) -> AuditReport:
    """Check |kind(tau(G)) - kind(G)| <= 1 for every non-trivial switch.

    Pass a single ``graph`` to audit just its switches, or an order ``n``
    (at most the census cap) to sweep every graph of that order.
    """
    if kind not in parameters.STABLE_KINDS:
        raise GraphError(f"unknown parameter kind {kind!r}")
    if (graph is None) == (n is None):
        raise GraphError("give exactly one of graph or n")
    if graph is not None:
        return _stability_single(kind, graph)
    return _stability_order(kind, n)


def _stability_single(kind: str, g: Graph) -> AuditReport:
    if kind == "edge_cover" and any(d == 0 for d in degree_sequence(g)):
        return AuditReport(
            audit="stability",
            passed=True,
            kind=kind,
            notes="edge_cover undefined: graph has isolated vertices",
        )
    base = parameters.compute(kind, g)
    checked = 0
    for m in nontrivial_matrices(g):
        checked += 1
        value = parameters.compute(kind, apply_switch(m, g))
        if abs(value - base) > 1:
            return AuditReport(
                audit="stability",
                passed=False,
                kind=kind,
                counterexample=(g, m),
                checked=checked,
                notes=f"{kind} jumped from {base} to {value}",
            )
    return AuditReport(audit="stability", passed=True, kind=kind, checked=checked)


def _stability_order(kind: str, n: int) -> AuditReport:
    return stability_sweep(n, kinds=(kind,))[kind]


def stability_sweep(n: int, kinds=parameters.STABLE_KINDS) -> dict[str, AuditReport]:
    """Order-wide stability check for several parameters at once.

    The expensive part, finding which graphs admit which switch shapes,
    is shared across parameters, so sweeping all nine costs little more
    than sweeping one.
    """
    if n > CENSUS_MAX:
        raise CapExceededError(f"order-wide stability audit capped at {CENSUS_MAX}")
    cen = census(n)
    tables = {k: cen.tables[k].astype(np.int16) for k in kinds}
    checked = dict.fromkeys(kinds, 0)
    worst: dict[str, tuple[int, ActionMatrix]] = {}
    for k1, k2, a1, a2, m in _switch_patterns(cen):
        bits = (1 << k1) | (1 << k2) | (1 << a1) | (1 << a2)
        valid = (
            (cen.masks >> k1 & 1).astype(bool)
            & (cen.masks >> k2 & 1).astype(bool)
            & ~(cen.masks >> a1 & 1).astype(bool)
            & ~(cen.masks >> a2 & 1).astype(bool)
        )
        idx = np.nonzero(valid)[0]
        if idx.size == 0:
            continue
        new = idx ^ bits
        for kind in kinds:
            table = tables[kind]
            if kind == "edge_cover":
                # isolated vertices leave the table at the sentinel; the
                # switch preserves degrees so either both sides are
                # defined or neither is
                sel = table[idx] < 99
                cur, nxt = idx[sel], new[sel]
            else:
                cur, nxt = idx, new
            checked[kind] += cur.size
            bad = np.abs(table[nxt] - table[cur]) > 1
            if bad.any():
                mask = int(cur[bad][0])
                if kind not in worst or mask < worst[kind][0]:
                    worst[kind] = (mask, m)
    out = {}
    for kind in kinds:
        if kind in worst:
            mask, m = worst[kind]
            out[kind] = AuditReport(
                audit="stability",
                passed=False,
                kind=kind,
                counterexample=(cen.graph(mask), m),
                checked=checked[kind],
                notes="order-wide sweep found a jump of 2 or more",
            )
        else:
            out[kind] = AuditReport(
                audit="stability", passed=True, kind=kind, checked=checked[kind]
            )
    return out


# -- interval audit ----------------------------------------------------------------


def _interval_eval(args):
    kind, n, edge_lists = args
    out = []
    for edges in edge_lists:
        g = Graph(n, edges)
        out.append((parameters.compute(kind, g), tuple(sorted(g.edges))))
    return out


def interval_audit(
    seq,
    kind: str,
    family: str = "all",
    cap: int = ENUMERATION_CAP,
    workers: int = 1,
) -> AuditReport:
    """Do the family's values of ``kind`` form a full integer interval?

    Witnesses map every observed value to the first graph attaining it
    in a fixed scan order (ascending edge bitmask up to the census cap,
    sorted edge lists beyond).  Report content does not depend on
    ``workers``.
    """
    seq = tuple(int(d) for d in seq)
    n = len(seq)
    if kind not in parameters.STABLE_KINDS:
        raise GraphError(f"unknown parameter kind {kind!r}")
    if not is_graphical(seq):
        return AuditReport(
            audit="interval",
            passed=True,
            kind=kind,
            family=family,
            sequence=seq,
            interval_ok=None,
            notes="sequence is not graphical",
        )
    if kind == "edge_cover" and any(d == 0 for d in seq):
        return AuditReport(
            audit="interval",
            passed=True,
            kind=kind,
            family=family,
            sequence=seq,
            interval_ok=None,
            notes="edge_cover undefined: sequence has isolated vertices",
        )
    if n <= CENSUS_MAX:
        value_of = {}
        cen = census(n)
        key = cen.key_of_sequence(seq)
        select = (cen.degree_key == key) & _family_selector(cen, family)
        masks = np.nonzero(select)[0]
        table = cen.tables[kind]
        for mask in masks:
            v = int(table[mask])
            if v not in value_of:
                value_of[v] = cen.graph(int(mask))
        checked = int(masks.size)
    else:
        members = family_members(seq, family, cap)
        checked = len(members)
        pairs = []
        if workers > 1 and members:
            groups = [
                [list(map(list, g.sorted_edges())) for g in members[i::workers]]
                for i in range(workers)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for chunk in pool.map(
                    _interval_eval, [(kind, n, grp) for grp in groups]
                ):
                    pairs.extend(chunk)
        else:
            for g in members:
                pairs.append((parameters.compute(kind, g), tuple(sorted(g.edges))))
        value_of = {}
        for v, edges in sorted(pairs, key=lambda p: (p[0], p[1])):
            if v not in value_of:
                value_of[v] = Graph(n, edges)
    values = tuple(sorted(value_of))
    if not values:
        return AuditReport(
            audit="interval",
            passed=True,
            kind=kind,
            family=family,
            sequence=seq,
            interval_ok=None,
            checked=checked,
            notes="family is empty",
        )
    interval_ok = values == tuple(range(values[0], values[-1] + 1))
    return AuditReport(
        audit="interval",
        passed=interval_ok,
        kind=kind,
        family=family,
        sequence=seq,
        values=values,
        interval_ok=interval_ok,
        witnesses=value_of,
        checked=checked,
    )


def realize_parameter_value(seq, kind: str, value: int, family: str = "all") -> Graph:
    """A family member with ``kind`` equal to ``value``, found by walking a
    switch trace between the extreme witnesses rather than by scanning."""
    if family not in ("all", "forest"):
        raise GraphError("realization walks need family 'all' or 'forest'")
    report = interval_audit(seq, kind, family)
    if not report.values:
        raise GraphError(f"no members: {report.notes or 'empty family'}")
    lo, hi = report.values[0], report.values[-1]
    if not lo <= value <= hi:
        raise ValueOutOfRangeError(f"{kind} ranges over [{lo}, {hi}], asked {value}")
    start = report.witnesses[lo]
    goal = report.witnesses[hi]
    trace = (
        transition_forest(start, goal)
        if family == "forest"
        else transition_graph(start, goal)
    )
    for g in replay(trace):
        if parameters.compute(kind, g) == value:
            return g
    raise AssertionError("stability guarantees some intermediate hits the value")


@dataclass(frozen=True)
class SweepReport:
    """Interval verdicts for every degree vector of one order at once."""

    n: int
    family: str
    kind: str
    families: int
    passed: bool
    singletons: bool
    bad_sequence: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "kind": self.kind,
            "families": self.families,
            "passed": self.passed,
            "singletons": self.singletons,
            "bad_sequence": list(self.bad_sequence) if self.bad_sequence else None,
        }


def interval_sweep(n: int, kind: str, family: str = "all") -> SweepReport:
    """Check the interval property for every degree vector of order ``n``.

    Equivalent to running interval_audit on each graphical vector, but
    grouped: one sorted pass over the full order-``n`` table.  A family's
    value set is an interval exactly when its count of distinct values
    equals max - min + 1.  ``singletons`` records the stronger fact that
    every family had a single value.
    """
    if n > CENSUS_MAX:
        raise CapExceededError(f"interval sweep capped at {CENSUS_MAX}")
    if kind not in parameters.STABLE_KINDS:
        raise GraphError(f"unknown parameter kind {kind!r}")
    cen = census(n)
    select = _family_selector(cen, family)
    if kind == "edge_cover":
        select = select & (cen.tables[kind] < 99)
    masks = np.nonzero(select)[0]
    if masks.size == 0:
        return SweepReport(n, family, kind, 0, True, True)
    # 3 bits per degree leave the low 5 bits free for the value
    combined = (cen.degree_key[masks].astype(np.int64) << 5) | cen.tables[kind][
        masks
    ].astype(np.int64)
    uniq = np.unique(combined)
    keys = uniq >> 5
    vals = uniq & 31
    group_keys, start = np.unique(keys, return_index=True)
    end = np.append(start[1:], uniq.size)
    distinct = end - start
    vmin = vals[start]
    vmax = vals[end - 1]
    ok = distinct == vmax - vmin + 1
    if not ok.all():
        key = int(group_keys[np.nonzero(~ok)[0][0]])
        seq = tuple((key >> (3 * i)) & 7 for i in range(n))
        return SweepReport(
            n, family, kind, int(group_keys.size), False, False, bad_sequence=seq
        )
    return SweepReport(
        n,
        family,
        kind,
        int(group_keys.size),
        True,
        bool((distinct == 1).all()),
    )


def enumerate_forests(n: int):
    """All forests on vertex set 1..n as sorted edge tuples.

    Plain cycle-free backtracking over edge slots in lexicographic order;
    union-find with undo keeps the acyclicity test near constant.  Exists
    separately from enumerate_family because sweeping one order's forests
    (all degree vectors at once) is a different access pattern than
    realizing one vector.
    """
    slots = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    edges: list[tuple[int, int]] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(k: int):
        if k == len(slots):
            yield tuple(edges)
            return
        yield from rec(k + 1)
        u, v = slots[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            edges.append((u, v))
            yield from rec(k + 1)
            edges.pop()
            size[ru] -= size[rv]
            parent[rv] = rv

    yield from rec(0)


# -- edge-move audit -----------------------------------------------------------------


def edge_diff_audit(n: int) -> AuditReport:
    """No two distinct graphs with one degree vector differ in exactly one
    edge: moving a single edge always changes some degree."""
    if n > CENSUS_MAX:
        raise CapExceededError(f"edge-move audit capped at {CENSUS_MAX}")
    cen = census(n)
    checked = 0
    for kdel in range(cen.n_slots):
        has = (cen.masks >> kdel & 1).astype(bool)
        for kadd in range(cen.n_slots):
            if kadd == kdel:
                continue
            valid = has & ~(cen.masks >> kadd & 1).astype(bool)
            idx = np.nonzero(valid)[0]
            if idx.size == 0:
                continue
            new = idx ^ ((1 << kdel) | (1 << kadd))
            checked += idx.size
            same = cen.degree_key[new] == cen.degree_key[idx]
            if same.any():
                mask = int(idx[same][0])
                return AuditReport(
                    audit="edge_diff",
                    passed=False,
                    counterexample=(cen.graph(mask), cen.graph(int(new[same][0]))),
                    checked=checked,
                )
    return AuditReport(audit="edge_diff", passed=True, checked=checked)


# -- isomorphism ------------------------------------------------------------------


ISOMORPHISM_CAP = 12


def are_isomorphic(g: Graph, h: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Exact isomorphism test by colour refinement plus backtracking."""
    if g.n != h.n or g.size != h.size:
        return False
    if g.n > cap:
        raise CapExceededError(f"isomorphism test capped at order {cap}")
    if sorted(degree_sequence(g)) != sorted(degree_sequence(h)):
        return False

    def refine(graph: Graph) -> dict[int, int]:
        colour = {v: graph.degree(v) for v in graph.vertices()}
        for _ in range(graph.n):
            sig = {
                v: (colour[v], tuple(sorted(colour[w] for w in graph.neighbors(v))))
                for v in graph.vertices()
            }
            palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
            new = {v: palette[sig[v]] for v in graph.vertices()}
            if new == colour:
                break
            colour = new
        return colour

    cg, ch = refine(g), refine(h)
    if sorted(cg.values()) != sorted(ch.values()):
        return False
    by_colour: dict[int, list[int]] = {}
    for v, c in ch.items():
        by_colour.setdefault(c, []).append(v)
    order = sorted(g.vertices(), key=lambda v: (len(by_colour[cg[v]]), cg[v], v))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_colour[cg[v]]:
            if w in used:
                continue
            ok = True
            for u in order[:i]:
                if ((min(u, v), max(u, v)) in g.edges) != (
                    (min(image[u], w), max(image[u], w)) in h.edges
                ):
                    ok = False
                    break
            if ok:
                image[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                used.remove(w)
                del image[v]
        return False

    return extend(0)


# -- bundled counterexample analysis ---------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    explored: int
    frontier: int
    reached_target: bool
    complete: bool


@dataclass(frozen=True)
class BipartiteCheckReport:
    same_degree_vector: bool
    both_bipartite: bool
    both_connected: bool
    non_isomorphic: bool
    parts_differ: bool
    one_step_invariant: bool
    switches_checked: int
    closure: ClosureReport | None
    passed: bool

    def as_dict(self) -> dict:
        d = {
            "same_degree_vector": self.same_degree_vector,
            "both_bipartite": self.both_bipartite,
            "both_connected": self.both_connected,
            "non_isomorphic": self.non_isomorphic,
            "parts_differ": self.parts_differ,
            "one_step_invariant": self.one_step_invariant,
            "switches_checked": self.switches_checked,
            "passed": self.passed,
        }
        if self.closure is not None:
            d["closure"] = {
                "explored": self.closure.explored,
                "frontier": self.closure.frontier,
                "reached_target": self.closure.reached_target,
                "complete": self.closure.complete,
            }
        return d


def bipartite_counterexample_check(closure_budget: int | None = 2000) -> BipartiteCheckReport:
    """Analyse the bundled eleven-vertex pair.

    The pair shares a degree vector, both members are connected and
    bipartite, they are not isomorphic, and their two degree-4 vertices
    sit in different parts in one graph but the same part in the other.
    Every switch from the first graph that keeps bipartiteness also keeps
    those two vertices separated, so no switch walk through bipartite
    graphs reaches the second graph; the optional bounded closure search
    reports how far that was verified.
    """
    g0, g1 = fig2()
    same_vector = degree_sequence(g0) == degree_sequence(g1)
    bip0, bip1 = bipartition(g0), bipartition(g1)
    both_bipartite = bip0 is not None and bip1 is not None
    both_connected = kappa(g0) == 1 and kappa(g1) == 1
    non_isomorphic = not are_isomorphic(g0, g1)
    parts_differ = False
    if both_bipartite:
        parts_differ = (bip0.side(3) != bip0.side(4)) and (
            bip1.side(3) == bip1.side(4)
        )

    one_step = True
    checked = 0
    for m in nontrivial_matrices(g0):
        checked += 1
        stripped = g0.with_edges(removed=m.deleted_edges())
        if kappa(stripped) != 1:
            one_step = False
            break
        t = apply_switch(m, g0)
        bt = bipartition(t)
        if bt is not None and bt.side(3) == bt.side(4):
            one_step = False
            break

    closure = None
    if closure_budget is not None and closure_budget > 0:
        closure = _bipartite_closure(g0, g1, closure_budget)

    passed = all(
        (
            same_vector,
            both_bipartite,
            both_connected,
            non_isomorphic,
            parts_differ,
            one_step,
        )
    ) and (closure is None or not closure.reached_target)
    return BipartiteCheckReport(
        same_degree_vector=same_vector,
        both_bipartite=both_bipartite,
        both_connected=both_connected,
        non_isomorphic=non_isomorphic,
        parts_differ=parts_differ,
        one_step_invariant=one_step,
        switches_checked=checked,
        closure=closure,
        passed=passed,
    )


def _bipartite_closure(g0: Graph, g1: Graph, budget: int) -> ClosureReport:
    start = frozenset(g0.edges)
    target = frozenset(g1.edges)
    seen = {start}
    queue = deque([g0])
    explored = 0
    reached = False
    while queue and explored < budget:
        g = queue.popleft()
        explored += 1
        for m in nontrivial_matrices(g):
            t = apply_switch(m, g)
            key = frozenset(t.edges)
            if key in seen or not is_bipartite(t):
                continue
            if key == target:
                reached = True
            seen.add(key)
            queue.append(t)
        if reached:
            break
    return ClosureReport(
        explored=explored,
        frontier=len(queue),
        reached_target=reached,
        complete=not queue and not reached,
    )


# -- constrained search ------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    found: bool
    trace: SwitchTrace | None
    complete: bool
    explored: int

    def as_dict(self) -> dict:
        return {
            "found": self.found,
            "length": len(self.trace.steps) if self.trace else None,
            "complete": self.complete,
            "explored": self.explored,
        }


def constrained_transition_search(
    g: Graph, h: Graph, family: str = "all", budget: int = 200_000
) -> SearchResult:
    """Breadth-first search for a switch trace staying inside the family.

    ``complete`` is True when the reachable family component was fully
    explored, so a not-found verdict is then a proof of absence; when the
    budget ran out first it is only a shrug.
    """
    if family not in FAMILY_PREDICATES:
        raise GraphError(f"unknown family {family!r}")
    keep = FAMILY_PREDICATES[family]
    if g.n != h.n or degree_sequence(g) != degree_sequence(h):
        return SearchResult(found=False, trace=None, complete=True, explored=0)
    if not keep(g) or not keep(h):
        return SearchResult(found=False, trace=None, complete=True, explored=0)
    if g == h:
        return SearchResult(
            found=True, trace=SwitchTrace(g, (), ()), complete=True, explored=0
        )
    start = frozenset(g.edges)
    goal = frozenset(h.edges)
    parents: dict[frozenset, tuple[frozenset, ActionMatrix] | None] = {start: None}
    queue = deque([g])
    explored = 0
    while queue and explored < budget:
        cur = queue.popleft()
        explored += 1
        cur_key = frozenset(cur.edges)
        for m in nontrivial_matrices(cur):
            t = apply_switch(m, cur)
            key = frozenset(t.edges)
            if key in parents or not keep(t):
                continue
            parents[key] = (cur_key, m)
            if key == goal:
                steps = []
                k = key
                while parents[k] is not None:
                    pk, pm = parents[k]
                    steps.append(pm)
                    k = pk
                steps.reverse()
                return SearchResult(
                    found=True,
                    trace=SwitchTrace(g, tuple(steps)),
                    complete=False,
                    explored=explored,
                )
            queue.append(t)
    return SearchResult(
        found=False, trace=None, complete=not queue, explored=explored
    )
