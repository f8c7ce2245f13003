#!/usr/bin/env python3
"""Emit the {3,7} triangulation of a Hurwitz surface built from PSL(2, q).

Vertices are left cosets of an order-7 rotation R, triangles are left cosets
of an order-3 rotation S, where R*S has order 2 and <R, S> = PSL(2, q).
Every vertex has degree 7.  Output is the plain-text complex format.

    python3 hurwitz_surface.py 7  > klein_quartic.cplx     # 24 vertices
    python3 hurwitz_surface.py 13 > hurwitz_156.cplx        # 156 vertices
"""
import itertools
import sys


def canon(m, q):
    a, b, c, d = (x % q for x in m)
    neg = ((-a) % q, (-b) % q, (-c) % q, (-d) % q)
    return min((a, b, c, d), neg)


def mul(x, y, q):
    a, b, c, d = x
    e, f, g, h = y
    return canon((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h), q)


def order(x, q):
    ident = canon((1, 0, 0, 1), q)
    y, n = x, 1
    while y != ident:
        y, n = mul(y, x, q), n + 1
    return n


def elements(q):
    seen = set()
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q == 1:
            seen.add(canon((a, b, c, d), q))
    return sorted(seen)


def generated(gens, q):
    ident = canon((1, 0, 0, 1), q)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s, q)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def main():
    q = int(sys.argv[1])
    group = elements(q)
    size = len(group)
    by_order = {}
    for g in group:
        by_order.setdefault(order(g, q), []).append(g)
    pair = None
    for r in by_order[7]:
        for s in by_order[3]:
            if order(mul(r, s, q), q) == 2 and len(generated([r, s], q)) == size:
                pair = (r, s)
                break
        if pair:
            break
    r, s = pair
    r_powers = [canon((1, 0, 0, 1), q)]
    for _ in range(6):
        r_powers.append(mul(r_powers[-1], r, q))
    vertex_of = {}
    vertex_ids = {}
    for g in group:
        coset = min(mul(g, p, q) for p in r_powers)
        if coset not in vertex_ids:
            vertex_ids[coset] = len(vertex_ids)
        vertex_of[g] = vertex_ids[coset]
    triangles = set()
    for g in group:
        gs = mul(g, s, q)
        gss = mul(gs, s, q)
        tri = tuple(sorted({vertex_of[g], vertex_of[gs], vertex_of[gss]}))
        assert len(tri) == 3
        triangles.add(tri)
    print(f"# Hurwitz surface from PSL(2,{q}): {len(vertex_ids)} vertices, "
          f"{len(triangles)} triangles, every vertex of degree 7")
    for tri in sorted(triangles):
        print(*tri)


if __name__ == "__main__":
    main()
