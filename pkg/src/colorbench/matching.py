"""Exact minimum-weight perfect matching and shortest-path closure.

Decoders match highlighted nodes inside restricted lattices whose edges
have unit weight, except boundary-boundary edges which cost nothing.
Matching itself runs on the complete graph over highlighted nodes with
precomputed distances (blossom algorithm via networkx), with a
deterministic lexicographic tie-break.
"""
from __future__ import annotations

import itertools
from collections import deque

import networkx as nx


class PathOracle:
    """All-pairs 0/1-weight shortest paths on a small graph.

    adj: dict node -> list of (neighbor, weight) with weight in {0, 1}.
    Paths are recovered as edge lists for expanding matched pairs into
    lattice corrections.
    """

    def __init__(self, adj):
        self.adj = adj
        self.nodes = sorted(adj)
        self._dist = {}
        self._pred = {}
        for s in self.nodes:
            self._run(s)

    def _run(self, s):
        dist = {s: 0}
        pred = {s: None}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            du = dist[u]
            for w, c in self.adj[u]:
                nd = du + c
                if w not in dist or nd < dist[w]:
                    dist[w] = nd
                    pred[w] = u
                    if c == 0:
                        dq.appendleft(w)
                    else:
                        dq.append(w)
        self._dist[s] = dist
        self._pred[s] = pred

    def distance(self, u, w):
        return self._dist[u].get(w)

    def path_edges(self, u, w):
        """Edges of one shortest path from u to w."""
        pred = self._pred[u]
        if w not in pred:
            raise ValueError(f"no path {u} -> {w}")
        out = []
        cur = w
        while cur != u:
            prv = pred[cur]
            out.append((prv, cur))
            cur = prv
        return out


def mwpm(nodes, dist_fn):
    """Minimum-weight perfect matching of the given nodes.

    dist_fn(u, w) must return a nonnegative integer weight for every
    pair.  Ties are broken lexicographically (by sorted pair list), so
    identical inputs give identical pairings.
    """
    nodes = sorted(nodes)
    n = len(nodes)
    if n % 2:
        raise ValueError("odd number of highlighted nodes")
    if n == 0:
        return []
    if n == 2:
        return [(nodes[0], nodes[1])]
    pair_rank = {}
    for r, (i, j) in enumerate(itertools.combinations(range(n), 2)):
        pair_rank[(i, j)] = r
    n_pairs = len(pair_rank)
    big = 0
    for i, j in itertools.combinations(range(n), 2):
        big = max(big, dist_fn(nodes[i], nodes[j]))
    big += 1
    g = nx.Graph()
    for (i, j), r in pair_rank.items():
        d = dist_fn(nodes[i], nodes[j])
        # maximize sum of (big - d); epsilon-rank term makes optima unique
        g.add_edge(i, j, weight=(big - d) * (n_pairs + 1) + (n_pairs - r))
    mate = nx.max_weight_matching(g, maxcardinality=True)
    out = sorted(tuple(sorted(e)) for e in mate)
    return [(nodes[i], nodes[j]) for i, j in out]


def brute_force_mwpm(nodes, dist_fn):
    """Exhaustive minimum-weight perfect matching (test oracle)."""
    nodes = sorted(nodes)
    if len(nodes) % 2:
        raise ValueError("odd number of highlighted nodes")

    best = [None, None]

    def rec(rem, acc, w):
        if not rem:
            if best[0] is None or w < best[0] or (w == best[0] and acc < best[1]):
                best[0], best[1] = w, list(acc)
            return
        u = rem[0]
        for k in range(1, len(rem)):
            v = rem[k]
            acc.append((u, v))
            rec(rem[1:k] + rem[k + 1:], acc, w + dist_fn(u, v))
            acc.pop()

    rec(nodes, [], 0)
    return best[1] if best[1] is not None else []


def matching_weight(pairs, dist_fn):
    return sum(dist_fn(u, w) for u, w in pairs)
