"""Parameter tables over every graph of one small order, vectorized.

The exhaustive audits need all nine parameters on all 2^C(n,2) labelled
graphs for n up to 7 (about two million at n = 7), which is far outside
per-graph Python speed.  Here a graph is a bitmask over the C(n,2) edge
slots in lexicographic order, and each parameter becomes either a
popcount-level dynamic program with numpy gathers (matching,
independence), a sweep over the 2^n vertex subsets (vertex cover,
domination), label propagation (components), or a chunked
subset-partition DP (chromatic, path cover, edge cover).

Tables are cross-checked against the per-graph algorithms in the test
suite; this module is the audit engine, not an independent authority.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graphs import Graph, GraphError

CENSUS_MAX = 7
_CHUNK = 1 << 18
_INF = 99  # unreachable marker; real values never exceed n


def _subset_plan(n: int):
    """Nonempty vertex subsets by size, each with its submasks keeping the
    lowest vertex (the canonical block of any partition)."""
    order = sorted(range(1, 1 << n), key=lambda s: (bin(s).count("1"), s))
    plan = []
    for s in order:
        low = s & -s
        subs = []
        t = s
        while t:
            if t & low:
                subs.append(t)
            t = (t - 1) & s
        plan.append((s, subs))
    return plan


class Census:
    """Everything the audits need about all graphs on {1..n}."""

    def __init__(self, n: int):
        if not 0 <= n <= CENSUS_MAX:
            raise GraphError(f"census supports orders 0..{CENSUS_MAX}, got {n}")
        self.n = n
        self.slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.slot_index = {uv: k for k, uv in enumerate(self.slots)}
        s = len(self.slots)
        self.n_slots = s
        self.n_masks = 1 << s
        self.full_mask = (1 << s) - 1
        self.star = [0] * n
        for k, (u, v) in enumerate(self.slots):
            self.star[u] |= 1 << k
            self.star[v] |= 1 << k
        self.edges_within = [0] * (1 << n)
        for t in range(1 << n):
            acc = 0
            for k, (u, v) in enumerate(self.slots):
                if t >> u & 1 and t >> v & 1:
                    acc |= 1 << k
            self.edges_within[t] = acc

        self.masks = np.arange(self.n_masks, dtype=np.int64)
        self.popcount = np.bitwise_count(self.masks).astype(np.uint8)
        self._levels = [
            np.nonzero(self.popcount == lv)[0] for lv in range(s + 1)
        ]
        self._adjv = self._adjacency_arrays()

        mu = self._matching_table()
        alpha = self._independence_table()
        omega = alpha[self.full_mask ^ self.masks]
        nu = self._vertex_cover_table()
        gamma = self._domination_table()
        comp = self._components_table()
        chi, pi, eps = self._chunked_tables()

        self.tables = {
            "matching": mu,
            "independence": alpha,
            "clique": omega,
            "vertex_cover": nu,
            "domination": gamma,
            "components": comp,
            "chromatic": chi,
            "path_cover": pi,
            "edge_cover": eps,  # _INF where an isolated vertex exists
        }
        self.degree_key = self._degree_keys()
        self.forest = (
            self.popcount.astype(np.int16) + comp.astype(np.int16) == n
        )

    # -- geometry -----------------------------------------------------------

    def _adjacency_arrays(self) -> list[np.ndarray]:
        adjv = [np.zeros(self.n_masks, dtype=np.uint8) for _ in range(self.n)]
        for k, (u, v) in enumerate(self.slots):
            bit = ((self.masks >> k) & 1).astype(np.uint8)
            adjv[u] |= bit << v
            adjv[v] |= bit << u
        return adjv

    def _degree_keys(self) -> np.ndarray:
        key = np.zeros(self.n_masks, dtype=np.int64)
        for v in range(self.n):
            dv = np.bitwise_count(self.masks & self.star[v]).astype(np.int64)
            key |= dv << (3 * v)
        return key

    def graph(self, mask: int) -> Graph:
        edges = [
            (u + 1, v + 1)
            for k, (u, v) in enumerate(self.slots)
            if mask >> k & 1
        ]
        return Graph(self.n, edges)

    def mask_of(self, g: Graph) -> int:
        if g.n != self.n:
            raise GraphError(f"graph order {g.n} does not match census order {self.n}")
        mask = 0
        for u, v in g.edges:
            mask |= 1 << self.slot_index[(u - 1, v - 1)]
        return mask

    def key_of_sequence(self, seq) -> int:
        key = 0
        for v, d in enumerate(seq):
            key |= int(d) << (3 * v)
        return key

    # -- level DPs ------------------------------------------------------------

    def _slot_lut(self):
        lut = np.zeros(self.n_masks if self.n_slots else 1, dtype=np.uint8)
        for k in range(self.n_slots):
            lut[1 << k] = k
        return lut

    def _matching_table(self) -> np.ndarray:
        """mu via: lowest edge e is either skipped or taken (then only edges
        vertex-disjoint from e remain)."""
        mu = np.zeros(self.n_masks, dtype=np.uint8)
        if self.n_slots == 0:
            return mu
        lut = self._slot_lut()
        compat = np.array(
            [
                self.full_mask & ~(self.star[u] | self.star[v])
                for (u, v) in self.slots
            ],
            dtype=np.int64,
        )
        for lv in range(1, self.n_slots + 1):
            m = self._levels[lv]
            k = lut[m & -m]
            skip = mu[m & (m - 1)]
            take = mu[m & compat[k]] + 1
            mu[m] = np.maximum(skip, take)
        return mu

    def _independence_table(self) -> np.ndarray:
        """alpha via: for the lowest edge uv, every maximum independent set
        omits u or omits v; deleting a vertex isolates it, hence the -1."""
        alpha = np.zeros(self.n_masks, dtype=np.uint8)
        alpha[0] = self.n
        if self.n_slots == 0:
            return alpha
        lut = self._slot_lut()
        star_u = np.array([self.star[u] for (u, v) in self.slots], dtype=np.int64)
        star_v = np.array([self.star[v] for (u, v) in self.slots], dtype=np.int64)
        for lv in range(1, self.n_slots + 1):
            m = self._levels[lv]
            k = lut[m & -m]
            drop_u = alpha[m & ~star_u[k]]
            drop_v = alpha[m & ~star_v[k]]
            alpha[m] = np.maximum(drop_u, drop_v) - 1
        return alpha

    # -- vertex-subset sweeps --------------------------------------------------

    def _vertex_subsets_by_size(self):
        return sorted(range(1 << self.n), key=lambda t: (bin(t).count("1"), t))

    def _vertex_cover_table(self) -> np.ndarray:
        nu = np.full(self.n_masks, 255, dtype=np.uint8)
        vfull = (1 << self.n) - 1
        for t in self._vertex_subsets_by_size():
            outside = self.edges_within[vfull ^ t]
            ok = (self.masks & outside) == 0
            ok &= nu == 255
            nu[ok] = bin(t).count("1")
            if not (nu == 255).any():
                break
        return nu

    def _domination_table(self) -> np.ndarray:
        gamma = np.full(self.n_masks, 255, dtype=np.uint8)
        for t in self._vertex_subsets_by_size():
            ok = gamma == 255
            if not ok.any():
                break
            for v in range(self.n):
                if t >> v & 1:
                    continue
                ok &= (self._adjv[v] & t) != 0
            gamma[ok] = bin(t).count("1")
        return gamma

    def _components_table(self) -> np.ndarray:
        """Minimum-label propagation along present edges; n-1 sweeps settle
        every path."""
        labels = [np.full(self.n_masks, v, dtype=np.uint8) for v in range(self.n)]
        present = [
            ((self.masks >> k) & 1).astype(bool) for k in range(self.n_slots)
        ]
        for _ in range(max(0, self.n - 1)):
            for k, (u, v) in enumerate(self.slots):
                mn = np.minimum(labels[u], labels[v])
                labels[u] = np.where(present[k], mn, labels[u])
                labels[v] = np.where(present[k], mn, labels[v])
        comp = np.zeros(self.n_masks, dtype=np.uint8)
        for v in range(self.n):
            comp += (labels[v] == v).astype(np.uint8)
        return comp

    # -- chunked subset-partition DPs -------------------------------------------

    def _chunked_tables(self):
        n = self.n
        vfull = (1 << n) - 1
        plan = _subset_plan(n)
        chi = np.zeros(self.n_masks, dtype=np.uint8)
        pi = np.zeros(self.n_masks, dtype=np.uint8)
        eps = np.zeros(self.n_masks, dtype=np.uint8)
        for lo in range(0, self.n_masks, _CHUNK):
            hi = min(lo + _CHUNK, self.n_masks)
            mc = self.masks[lo:hi]
            adjc = [self._adjv[v][lo:hi] for v in range(n)]

            # chromatic: partition into independent sets
            indep = [None] * (1 << n)
            for t in range(1, 1 << n):
                indep[t] = (mc & self.edges_within[t]) == 0
            f = [None] * (1 << n)
            f[0] = np.zeros(hi - lo, dtype=np.uint8)
            for s, subs in plan:
                best = np.full(hi - lo, _INF, dtype=np.uint8)
                for t in subs:
                    cand = f[s ^ t] + 1
                    cand[~indep[t]] = _INF
                    np.minimum(best, cand, out=best)
                f[s] = best
            chi[lo:hi] = f[vfull] if n else 0
            del indep, f

            # path cover: partition into traceable sets; ends[t] holds the
            # possible endpoints of a spanning path of G[t] as a bitmask
            ends = [None] * (1 << n)
            for v in range(n):
                ends[1 << v] = np.full(hi - lo, 1 << v, dtype=np.uint8)
            for s, _subs in plan:
                if s & (s - 1) == 0:
                    continue
                acc = np.zeros(hi - lo, dtype=np.uint8)
                t = s
                while t:
                    v = (t & -t).bit_length() - 1
                    t ^= 1 << v
                    reach = (ends[s ^ (1 << v)] & adjc[v]) != 0
                    acc |= reach.astype(np.uint8) << v
                ends[s] = acc
            no_path = [None if e is None else e == 0 for e in ends]
            cover = [None] * (1 << n)
            cover[0] = np.zeros(hi - lo, dtype=np.uint8)
            for s, subs in plan:
                best = np.full(hi - lo, _INF, dtype=np.uint8)
                for t in subs:
                    cand = cover[s ^ t] + 1
                    cand[no_path[t]] = _INF
                    np.minimum(best, cand, out=best)
                cover[s] = best
            pi[lo:hi] = cover[vfull] if n else 0
            del ends, no_path, cover

            # edge cover: repeatedly cover the lowest uncovered vertex
            present = [
                ((mc >> k) & 1).astype(bool) for k in range(self.n_slots)
            ]
            c = [None] * (1 << n)
            c[0] = np.zeros(hi - lo, dtype=np.uint8)
            for s, _subs in plan:
                u = (s & -s).bit_length() - 1
                best = np.full(hi - lo, _INF, dtype=np.uint8)
                for v in range(n):
                    if v == u:
                        continue
                    k = self.slot_index[(min(u, v), max(u, v))]
                    child = s & ~((1 << u) | (1 << v))
                    cand = c[child] + 1
                    cand[~present[k]] = _INF
                    np.minimum(best, cand, out=best)
                c[s] = best
            eps[lo:hi] = c[vfull] if n else 0
            del present, c
        return chi, pi, eps


@lru_cache(maxsize=None)
def census(n: int) -> Census:
    return Census(n)
