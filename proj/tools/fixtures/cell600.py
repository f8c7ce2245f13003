#!/usr/bin/env python3
"""Emit the boundary complex of the 600-cell (120 vertices, 600 tetrahedra).

Every edge lies in exactly five tetrahedra and every vertex link is an
icosahedron.  Output is the plain-text complex format.
"""
import itertools
import math

PHI = (1 + 5 ** 0.5) / 2


def even_permutations(n):
    for p in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        if inversions % 2 == 0:
            yield p


def vertices():
    pts = set()
    for i in range(4):
        for s in (1, -1):
            v = [0.0] * 4
            v[i] = s
            pts.add(tuple(v))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        pts.add(signs)
    base = (PHI / 2, 0.5, 1 / (2 * PHI), 0.0)
    for perm in even_permutations(4):
        for signs in itertools.product((1, -1), repeat=3):
            v = [0.0] * 4
            vals = [base[0] * signs[0], base[1] * signs[1], base[2] * signs[2], 0.0]
            for src, dst in enumerate(perm):
                v[dst] = vals[src]
            pts.add(tuple(round(x, 12) + 0.0 for x in v))
    return sorted(pts)


def main():
    pts = vertices()
    assert len(pts) == 120, len(pts)
    edge = 1 / PHI
    adj = {i: set() for i in range(len(pts))}
    for i, j in itertools.combinations(range(len(pts)), 2):
        if abs(math.dist(pts[i], pts[j]) - edge) < 1e-9:
            adj[i].add(j)
            adj[j].add(i)
    tets = set()
    for a in adj:
        for b, c, d in itertools.combinations(sorted(adj[a]), 3):
            if c in adj[b] and d in adj[b] and d in adj[c]:
                tets.add(tuple(sorted((a, b, c, d))))
    assert len(tets) == 600, len(tets)
    print("# boundary of the 600-cell: 120 vertices, 600 tetrahedra, all edge degrees 5")
    for t in sorted(tets):
        print(*t)


if __name__ == "__main__":
    main()
