#!/usr/bin/env python3
"""Brute-force reference values for the C++ test suites.

Independent of the C++ code: builds BFS-labelled complete m-ary trees,
runs the observation rules directly, and enumerates every subset.
"""
import itertools
import sys
from math import comb


def tree(m, h, stem=False):
    n = (m ** (h + 1) - 1) // (m - 1)
    adj = [set() for _ in range(n + (1 if stem else 0))]
    for v in range(n):
        for c in range(m * v + 1, m * v + m + 1):
            if c < n:
                adj[v].add(c)
                adj[c].add(v)
    if stem:
        adj[0].add(n)
        adj[n].add(0)
    return adj


def observed(adj, s):
    obs = set(s)
    for v in s:
        obs |= adj[v]
    while True:
        new = set()
        for v in obs:
            out = adj[v] - obs
            if len(out) == 1:
                new |= out
        if not new:
            return obs
        obs |= new


def pds_counts(adj):
    n = len(adj)
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if len(observed(adj, s)) == n:
                counts[k] += 1
    return counts


def eh(m, h):
    adj = tree(m, h, stem=True)
    n = len(adj) - 1
    stem = n
    E = [0] * (n + 1)
    H = [0] * (n + 1)
    frontier_ok = True
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if len(observed(adj, s)) == n + 1:
                E[k] += 1
            elif len(observed(adj, s + (stem,))) == n + 1:
                H[k] += 1
                if h >= 1:
                    miss = ({0} | adj[0]) - observed(adj, s)
                    if h % 2 == 1:
                        ok = len(miss) == 2 and stem in miss and (miss - {stem}) <= set(range(1, m + 1))
                    else:
                        ok = miss == {0, stem}
                    frontier_ok &= ok
    return E, H, frontier_ok


def main():
    for m, h in [(2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1)]:
        N = pds_counts(tree(m, h))
        g = next((k for k, c in enumerate(N) if c), None)
        print(f"N({m},{h},k) = {N} total={sum(N)} gamma_p={g}")
    for m, h in [(2, 0), (3, 0), (2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2), (2, 3)]:
        E, H, ok = eh(m, h)
        print(f"E({m},{h}) = {E}\nH({m},{h}) = {H} frontier_ok={ok}")


if __name__ == "__main__":
    sys.exit(main())
