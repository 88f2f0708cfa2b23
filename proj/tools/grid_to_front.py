#!/usr/bin/env python3
"""Turn a grid diagram into a front word (L k / R k / X k lines).

The grid is a list of (column, row) marks, two per column and two per row.
Vertical segments cross over horizontal ones. The grid is turned 45 degrees
so that every segment has slope +1 or -1; corners pointing left or right
become cusps, the rest are smoothed.

  --rotation knot    vertical segments descend (the grid knot itself)
  --rotation mirror  vertical segments ascend (the mirror)
"""

import argparse
import json
import sys
from fractions import Fraction


def polygon(marks):
    """Marks in cyclic order, alternating vertical and horizontal moves."""
    by_col, by_row = {}, {}
    for c, r in marks:
        by_col.setdefault(c, []).append((c, r))
        by_row.setdefault(r, []).append((c, r))
    for group in list(by_col.values()) + list(by_row.values()):
        if len(group) != 2:
            sys.exit("grid needs exactly two marks in every row and column")
    start = marks[0]
    cycle = [start]
    cur, vertical = start, True
    while True:
        group = by_col[cur[0]] if vertical else by_row[cur[1]]
        nxt = group[0] if group[1] == cur else group[1]
        vertical = not vertical
        if nxt == start:
            break
        cycle.append(nxt)
        cur = nxt
    if len(cycle) != len(marks):
        sys.exit("grid describes a link, not a knot")
    return cycle


def front(marks, rotation):
    cycle = polygon(marks)

    def place(p):
        c, r = p
        if rotation == "knot":
            x, z = c - r, c + r
        else:
            x, z = c + r, r - c
        return (Fraction(1000 * x + z), Fraction(z))

    pts = [place(p) for p in cycle]
    n = len(pts)
    segs = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    # Segment i runs from vertex i to vertex i+1; orient each left to right.
    span = [tuple(sorted(s)) for s in segs]

    def z_at(i, x):
        (x0, z0), (x1, z1) = span[i]
        return z0 + (z1 - z0) * (x - x0) / (x1 - x0)

    events = []  # (x, kind, data)
    for v in range(n):
        a, b = (v - 1) % n, v  # segments meeting at vertex v
        x = pts[v][0]
        left_a = span[a][0][0] < x
        left_b = span[b][0][0] < x
        if not left_a and not left_b:
            events.append((x, "L", (a, b, pts[v][1])))
        elif left_a and left_b:
            events.append((x, "R", (a, b)))
        else:
            old, new = (a, b) if left_a else (b, a)
            events.append((x, "T", (old, new)))
    for i in range(n):
        for j in range(i + 1, n):
            (p0, p1), (q0, q1) = span[i], span[j]
            lo, hi = max(p0[0], q0[0]), min(p1[0], q1[0])
            if lo >= hi:
                continue
            d_lo = z_at(i, lo) - z_at(j, lo)
            d_hi = z_at(i, hi) - z_at(j, hi)
            if d_lo * d_hi < 0:
                x = lo + (hi - lo) * d_lo / (d_lo - d_hi)
                events.append((x, "X", (i, j)))
    events.sort(key=lambda e: e[0])

    active, word = [], []
    for x, kind, data in events:
        if kind == "L":
            a, b, zv = data
            # The branch with the larger slope is on top just right of x.
            probe = x + Fraction(1, 10**6)
            upper, lower = sorted((a, b), key=lambda s: -z_at(s, probe))
            k = sum(1 for s in active if z_at(s, x) > zv)
            active[k:k] = [upper, lower]
            word.append(f"L {k + 1}")
        elif kind == "R":
            a, b = data
            k = min(active.index(a), active.index(b))
            if abs(active.index(a) - active.index(b)) != 1:
                sys.exit("right cusp strands are not adjacent")
            del active[k:k + 2]
            word.append(f"R {k + 1}")
        elif kind == "T":
            old, new = data
            active[active.index(old)] = new
        else:
            i, j = data
            ki, kj = active.index(i), active.index(j)
            if abs(ki - kj) != 1:
                sys.exit("crossing strands are not adjacent")
            k = min(ki, kj)
            active[k], active[k + 1] = active[k + 1], active[k]
            word.append(f"X {k + 1}")
    return word


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("grid", help="JSON list of [column, row] marks")
    ap.add_argument("--rotation", choices=["knot", "mirror"], default="knot")
    args = ap.parse_args()
    marks = [tuple(m) for m in json.loads(args.grid)]
    print("\n".join(front(marks, args.rotation)))


if __name__ == "__main__":
    main()
