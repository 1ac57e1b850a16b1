"""Independent classical Kauffman bracket for cross-checking.

Computes the bracket of a bar-free code whose realization is a union of
spheres, by skein recursion over crossings with explicit arc merging: the
diagram is a set of arcs pairing crossing ports, an A- or B-smoothing
reconnects the four ports of one crossing, and a closed loop contributes a
factor delta.  Every loop counts (so the unknot evaluates to delta),
matching the double bracket's convention for inessential curves.

This deliberately shares no state-tracing code with the state engine; it is
the oracle side of the classical-specialization check.
"""

from __future__ import annotations

from .codes import Bar, TwistedGaussCode, Visit
from .laurent import MultiLaurent, delta
from .surfaces import build_ribbon, cap_boundaries


def classical_kauffman_oracle(code: TwistedGaussCode) -> MultiLaurent:
    if any(isinstance(t, Bar) for comp in code.components for t in comp):
        raise ValueError("classical oracle requires a bar-free code")
    F = cap_boundaries(build_ribbon(code))
    if any(p.euler != 2 for p in F.pieces):
        raise ValueError("realization is not a union of spheres")

    ids = code.crossing_ids
    kidx = {cid: k for k, cid in enumerate(ids)}
    c = len(ids)

    other: dict[int, int] = {}
    free_loops = 0
    for comp in code.components:
        visits = [t for t in comp if isinstance(t, Visit)]
        if not visits:
            free_loops += 1
            continue
        for j, tok in enumerate(visits):
            ntok = visits[(j + 1) % len(visits)]
            p = 4 * kidx[tok.crossing] + (2 if tok.over else 3)
            q = 4 * kidx[ntok.crossing] + (0 if ntok.over else 1)
            other[p] = q
            other[q] = p

    def chords(k: int, bit: int):
        sign = code.sign_of(ids[k])
        rot = (0, 1, 2, 3) if sign > 0 else (0, 3, 2, 1)
        r = [4 * k + o for o in rot]
        if bit == 0:
            return ((r[1], r[2]), (r[3], r[0]))
        return ((r[0], r[1]), (r[2], r[3]))

    leaf_counts: dict[tuple[int, int], int] = {}

    def rec(k: int, arcs: dict[int, int], loops: int, aexp: int):
        if k == c:
            if arcs:
                raise AssertionError("unconsumed ports after full smoothing")
            key = (aexp, loops)
            leaf_counts[key] = leaf_counts.get(key, 0) + 1
            return
        for bit in (0, 1):
            nxt = dict(arcs)
            nloops = loops
            for (p, q) in chords(k, bit):
                if nxt[p] == q:
                    del nxt[p]
                    del nxt[q]
                    nloops += 1
                else:
                    a = nxt.pop(p)
                    b = nxt.pop(q)
                    nxt[a] = b
                    nxt[b] = a
            rec(k + 1, nxt, nloops, aexp + (1 if bit == 0 else -1))

    rec(0, other, free_loops, 0)

    max_loops = max((loops for (_a, loops) in leaf_counts), default=0)
    dpow = [MultiLaurent.one()]
    for _ in range(max_loops):
        dpow.append(dpow[-1] * delta())
    total = MultiLaurent.zero()
    for (aexp, loops), count in sorted(leaf_counts.items()):
        total = total + MultiLaurent.A(aexp) * count * dpow[loops]
    return total
