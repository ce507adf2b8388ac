#!/usr/bin/env python3
"""Brute-force check of the small clustering fixtures.

Recomputes, from first principles and independently of the C++ library,
the scores and root elections for the tiny fixtures used in the test
suite, and prints the values the tests freeze. Run from the repo root:

    python3 scripts/fixture_check.py
"""
import itertools
import math


def euclid(p, q):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))


def nn_map(points):
    """index -> nearest neighbor index, ties broken by smaller index."""
    out = {}
    for i, p in enumerate(points):
        best, bestd = None, float("inf")
        for j, q in enumerate(points):
            if i == j:
                continue
            d = euclid(p, q)
            if d < bestd or (d == bestd and j < best):
                best, bestd = j, d
        out[i] = best
    return out


def relationship(points):
    """R = A + A^T of the nearest-neighbor digraph."""
    n = len(points)
    nn = nn_map(points)
    r = [[0] * n for _ in range(n)]
    for i, j in nn.items():
        r[i][j] += 1
        r[j][i] += 1
    return r


def components(r):
    n = len(r)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(n):
                if r[v][u] > 0 and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def hop_counts(r, comp, i):
    """BFS hop distances from i within one component."""
    dist = {i: 0}
    frontier = [i]
    while frontier:
        nxt = []
        for v in frontier:
            for u in comp:
                if r[v][u] > 0 and u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def scores(points, r, comp, i):
    n = len(points)
    d = sum(r[i])
    neigh = [j for j in range(n) if r[i][j] >= 1]
    dbar = sum(sum(r[j]) for j in neigh) / d
    hops = hop_counts(r, comp, i)
    c = sum(hops[j] for j in comp) / len(comp)
    cstar = sum(euclid(points[i], points[j]) / hops[j]
                for j in comp if j != i) / len(comp)
    return d, dbar, c, cstar


def elections(points):
    r = relationship(points)
    comps = components(r)
    out = []
    for comp in comps:
        rnn = [(i, j) for i, j in itertools.combinations(comp, 2)
               if r[i][j] == 2]
        assert len(rnn) == 1, f"component {comp}: expected one mutual pair"
        i, j = rnn[0]
        di, dbi, ci, csi = scores(points, r, comps[comps.index(comp)], i)
        dj, dbj, cj, csj = scores(points, r, comps[comps.index(comp)], j)
        psi_i = 0.25 * (di / (di + dj) + dbi / (dbi + dbj)
                        + (1 - ci / (ci + cj)) + (1 - csi / (csi + csj)))
        psistar_i = 0.5 * (dbi / (dbi + dbj) + (1 - csi / (csi + csj)))
        out.append(dict(pair=(i, j),
                        d=(di, dj), dbar=(dbi, dbj), c=(ci, cj),
                        cstar=(csi, csj),
                        psi=(psi_i, 1 - psi_i),
                        psistar=(psistar_i, 1 - psistar_i),
                        root_psi=i if psi_i > 1 - psi_i else j,
                        root_psistar=i if psistar_i > 1 - psistar_i else j))
    return out


def main():
    # 1-D three-point chain {0, 1, 3}
    pts = [(0.0,), (1.0,), (3.0,)]
    print("== fixture {0,1,3} ==")
    for e in elections(pts):
        for k, v in e.items():
            print(f"  {k}: {v}")

    # 10-point planar fixture: chain start at node 1 walks 1->2->3<->4,
    # the pair {5,8} is isolated, and 0, {6,7}, 9 attach later.
    pts10 = [(-1.0, 1.5), (-2.4, 0.6), (-1.2, 0.2), (0.0, 0.0), (0.5, 0.0),
             (1.9, 1.9), (1.2, -2.6), (-0.2, -1.6), (2.4, 2.3), (-1.9, -2.4)]
    print("== fixture 10-point ==")
    nn = nn_map(pts10)
    print("  nn:", nn)
    r = relationship(pts10)
    print("  components:", components(r))
    mutual = [(i, j) for i in range(10) for j in range(i + 1, 10)
              if r[i][j] == 2]
    print("  mutual pairs:", mutual)

    # partition-metric spot values
    def entropy(lbls):
        n = len(lbls)
        from collections import Counter
        return -sum(c / n * math.log(c / n) for c in Counter(lbls).values())

    def mutual_info(a, b):
        from collections import Counter
        n = len(a)
        ja = Counter(a)
        jb = Counter(b)
        jj = Counter(zip(a, b))
        return sum(c / n * math.log((c / n) / (ja[x] / n * jb[y] / n))
                   for (x, y), c in jj.items())

    a, b = [0, 0, 1, 1], [0, 1, 1, 1]
    mi = mutual_info(a, b)
    print("== metrics ==")
    print(f"  MI nats: {mi:.6f}  bits: {mi / math.log(2):.6f}")
    print(f"  NMI: {2 * mi / (entropy(a) + entropy(b)):.6f}")
    print(f"  H([0,0,0,1]): {entropy([0, 0, 0, 1]):.6f}")


if __name__ == "__main__":
    main()
